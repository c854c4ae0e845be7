#include "affgrow/artifacts.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "affgrow/config.hpp"
#include "affgrow/error.hpp"
#include "affgrow/parse.hpp"

namespace affgrow {

std::string to_string(ArtifactStatus s) {
  switch (s) {
    case ArtifactStatus::Ok: return "ok";
    case ArtifactStatus::Unknown: return "unknown";
    case ArtifactStatus::Failed: return "failed";
  }
  return "failed";
}

namespace {

template <typename T>
T take(json& in, const char* key, T fallback) {
  if (!in.contains(key) || in.at(key).is_null()) in[key] = fallback;
  try {
    return in.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::Parse, std::string("input field '") + key + "' has the wrong type");
  }
}

std::string need(json& in, const char* key) {
  if (!in.contains(key) || !in.at(key).is_string())
    throw Error(ErrorCode::Parse, std::string("missing input field '") + key + "'");
  return in.at(key).get<std::string>();
}

Config config_from(json& in) {
  Config c;
  c.precision_bits = take<int>(in, "precision_bits", c.precision_bits);
  c.relation_max_len = take<std::size_t>(in, "relation_max_len", c.relation_max_len);
  c.memory_budget_elements = take<std::size_t>(in, "memory_budget", c.memory_budget_elements);
  c.trial_division_bound = take<long>(in, "trial_division_bound", c.trial_division_bound);
  c.validate();
  return c;
}

struct Setting {
  RingPtr ring;
  NamedGenerators gens;
};

Setting setting_from(json& in) {
  Setting s;
  s.ring = parse_ring(need(in, "ring"));
  s.gens = parse_generators(s.ring, take<std::string>(in, "gens", "gamma"));
  return s;
}

json generators_json(const std::vector<AffineMap>& maps, const std::vector<std::string>& names) {
  json out = json::array();
  for (std::size_t i = 0; i < maps.size(); ++i) out.push_back({{"name", names[i]}, {"map", map_json(maps[i])}});
  return out;
}

std::pair<AffineMap, AffineMap> resolve_pair(const Setting& s, const std::string& text) {
  if (text.find('|') != std::string::npos) {
    NamedGenerators p = parse_generators(s.ring, text);
    if (p.maps.size() != 2) throw Error(ErrorCode::Parse, "pair needs exactly two maps");
    return {p.maps[0], p.maps[1]};
  }
  auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
    throw Error(ErrorCode::Parse, "pair must be two comma-separated words, e.g. A,B");
  AffineMap f = eval_word(Word::parse(text.substr(0, comma), s.gens.names), s.gens.maps);
  AffineMap g = eval_word(Word::parse(text.substr(comma + 1), s.gens.names), s.gens.maps);
  return {f, g};
}

json bracket_json(const DplusLower& lower, const std::optional<DplusUpper>& upper) {
  return {{"lower", lower.m + 1}, {"upper", upper ? json(upper->n) : json(nullptr)}};
}

void annotate(GrowthTable& t, const DplusLower& lower, const std::optional<DplusUpper>& upper,
              std::size_t explored) {
  for (auto& r : t.rows) {
    if (r.n == 0) continue;
    if (upper && r.n >= upper->n) r.dplus_status = DplusStatus::CertFound;
    else if (r.n <= lower.m) r.dplus_status = DplusStatus::AllRefuted;
    else if (r.n <= explored) r.dplus_status = DplusStatus::Mixed;
  }
}

Artifact run_decide(json& in, unsigned) {
  Config cfg = config_from(in);
  Setting s = setting_from(in);
  const std::string pair_text = take<std::string>(in, "pair", "A,B");
  auto [f, g] = resolve_pair(s, pair_text);
  FreenessVerdict v = decide_pair(f, g, cfg.budget());
  Artifact a;
  json r{{"ring", ring_json(s.ring)}, {"pair", {map_json(f), map_json(g)}}};
  json verdict = verdict_json(v, cfg.precision_bits);
  for (auto& [k, val] : verdict.items()) r[k] = val;
  a.doc["result"] = r;
  a.status = v.tag == VerdictTag::Unknown ? ArtifactStatus::Unknown : ArtifactStatus::Ok;
  return a;
}

Artifact run_growth(json& in, unsigned workers) {
  Config cfg = config_from(in);
  Setting s = setting_from(in);
  const auto nmax = take<std::size_t>(in, "nmax", cfg.ball_n_max);
  const auto dplus_nmax = take<std::size_t>(in, "dplus_nmax", 3);
  const auto lower_probe = take<std::size_t>(in, "lower_probe", 1);
  GeneratingSet sigma = GeneratingSet::from(s.gens.maps);
  const auto names = sigma.symmetrized_names(s.gens.names);

  GrowthTable table = ball_sizes(sigma, nmax, cfg.memory_budget_elements, workers);
  auto upper = dplus_upper(sigma, dplus_nmax, cfg.budget(), workers);
  DplusLower lower = dplus_lower(sigma, lower_probe, cfg.budget(), {}, workers);
  annotate(table, lower, upper, std::max(dplus_nmax, lower_probe));
  std::optional<std::size_t> radius;
  if (upper) radius = upper->n;
  EntropyBounds e = entropy_bounds(table, radius);

  json doubling = json::array();
  for (std::size_t n = 1; 2 * n < table.rows.size(); ++n)
    doubling.push_back({{"n", n}, {"holds", doubling_bound_holds(table.rows[n].ball_size, table.rows[2 * n].ball_size)}});
  json certs = json::array();
  if (upper) certs.push_back(dplus_upper_json(*upper, names, cfg.precision_bits));
  json ent = entropy_json(e);

  Artifact a;
  a.doc["result"] = {{"ring", ring_json(s.ring)},
                     {"generators", generators_json(sigma.symmetrized, names)},
                     {"rows", growth_rows_json(table)},
                     {"truncated", table.truncated},
                     {"submultiplicative", submultiplicative(table)},
                     {"doubling", doubling},
                     {"entropy_lower", ent["entropy_lower"]},
                     {"entropy_upper_best", ent["entropy_upper_best_bits"]},
                     {"lower_le_every_upper", ent["lower_le_every_upper"]},
                     {"dplus_bracket", bracket_json(lower, upper)},
                     {"certificates", certs},
                     {"lower", dplus_lower_json(lower, names)}};
  a.csv = growth_csv(table);
  a.status = table.truncated ? ArtifactStatus::Unknown : ArtifactStatus::Ok;
  return a;
}

Artifact run_dplus(json& in, unsigned workers) {
  Config cfg = config_from(in);
  Setting s = setting_from(in);
  const auto nmax = take<std::size_t>(in, "nmax", 4);
  const auto lower_probe = take<std::size_t>(in, "lower_probe", 2);
  GeneratingSet sigma = GeneratingSet::from(s.gens.maps);
  const auto names = sigma.symmetrized_names(s.gens.names);
  auto upper = dplus_upper(sigma, nmax, cfg.budget(), workers);
  DplusLower lower = dplus_lower(sigma, lower_probe, cfg.budget(), {}, workers);
  Artifact a;
  a.doc["result"] = {{"ring", ring_json(s.ring)},
                     {"generators", generators_json(sigma.symmetrized, names)},
                     {"upper", upper ? dplus_upper_json(*upper, names, cfg.precision_bits) : json(nullptr)},
                     {"upper_radius_searched", nmax},
                     {"lower", dplus_lower_json(lower, names)},
                     {"dplus_bracket", bracket_json(lower, upper)}};
  a.status = upper ? ArtifactStatus::Ok : ArtifactStatus::Unknown;
  return a;
}

Artifact run_classify(json& in, unsigned) {
  Setting s = setting_from(in);
  GroupClass c = classify_group(s.gens.maps);
  Artifact a;
  a.doc["result"] = {{"ring", ring_json(s.ring)},
                     {"generators", generators_json(s.gens.maps, s.gens.names)},
                     {"class", to_string(c)}};
  a.status = c == GroupClass::Unknown ? ArtifactStatus::Unknown : ArtifactStatus::Ok;
  return a;
}

Artifact run_mahler(json& in, unsigned) {
  const std::string text = need(in, "poly");
  const int bits = take<int>(in, "bits", 64);
  if (bits <= 0) throw Error(ErrorCode::Precondition, "bits must be positive");
  std::vector<mpz_class> pi = parse_modulus(text);
  MahlerResult m = mahler_measure(pi, bits);
  Artifact a;
  json mod = json::array();
  for (const auto& c : pi) mod.push_back(c.get_str());
  json r{{"poly", QPoly::from_integers(pi).to_string('x')}, {"modulus", mod}};
  json measure = mahler_json(m);
  for (auto& [k, v] : measure.items()) r[k] = v;
  a.doc["result"] = r;
  a.status = m.measure.budget_exhausted ? ArtifactStatus::Unknown : ArtifactStatus::Ok;
  return a;
}

Artifact run_ct(json& in, unsigned workers) {
  Config cfg = config_from(in);
  const long n = take<long>(in, "n", 1);
  CtOptions opt;
  opt.max_degree = take<std::size_t>(in, "max_degree", opt.max_degree);
  opt.run_lower = take<bool>(in, "run_lower", true);
  opt.budget = cfg.budget();
  opt.workers = workers;
  CtReport rep = ct_family_verify(n, opt);
  Artifact a;
  a.doc["result"] = ct_json(rep);
  bool ok = rep.all_hold();
  if (rep.symmetrized_lower && rep.symmetrized_lower->m + 1 < static_cast<std::size_t>(n)) ok = false;
  a.status = ok ? ArtifactStatus::Ok : ArtifactStatus::Failed;
  return a;
}

Artifact run_lehmer(json& in, unsigned workers) {
  Config cfg = config_from(in);
  const std::string text = need(in, "poly");
  LehmerOptions opt;
  opt.n_max = take<std::size_t>(in, "nmax", opt.n_max);
  opt.dplus_radius = take<std::size_t>(in, "dplus_radius", opt.dplus_radius);
  opt.precision_bits = take<int>(in, "bits", opt.precision_bits);
  opt.budget = cfg.budget();
  opt.workers = workers;
  std::vector<mpz_class> pi = parse_modulus(text);
  LehmerReport rep = lehmer_experiment(pi, opt);
  Artifact a;
  json r{{"ring", ring_json(number_ring(pi))}};
  json body = lehmer_json(rep, cfg.precision_bits);
  for (auto& [k, v] : body.items()) r[k] = v;
  a.doc["result"] = r;
  a.csv = growth_csv(rep.growth);
  a.status = !rep.claim_consistent ? ArtifactStatus::Failed
             : rep.growth.truncated ? ArtifactStatus::Unknown
                                    : ArtifactStatus::Ok;
  return a;
}

using Runner = std::function<Artifact(json&, unsigned)>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> r{
      {"classify", run_classify}, {"decide", run_decide}, {"dplus", run_dplus},    {"growth", run_growth},
      {"lehmer", run_lehmer},     {"mahler", run_mahler}, {"verify-ct", run_ct},
  };
  return r;
}

}  // namespace

std::vector<std::string> artifact_kinds() {
  std::vector<std::string> out;
  for (const auto& [k, _] : runners()) out.push_back(k);
  return out;
}

Artifact run_artifact(const std::string& kind, json input, unsigned workers) {
  auto it = runners().find(kind);
  if (it == runners().end()) throw Error(ErrorCode::Parse, "unknown artifact kind '" + kind + "'");
  if (!input.is_object()) throw Error(ErrorCode::Parse, "input must be an object");
  Artifact a = it->second(input, workers);
  json doc{{"v", kSchemaVersion}, {"kind", kind}, {"input", input}, {"status", to_string(a.status)}};
  doc["result"] = std::move(a.doc["result"]);
  a.doc = std::move(doc);
  return a;
}

namespace {

void walk(const json& node, const RingPtr& ring, CheckReport& rep, const std::string& path) {
  if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) walk(node[i], ring, rep, path + "/" + std::to_string(i));
    return;
  }
  if (!node.is_object()) return;
  if (node.contains("certificate") && node.at("certificate").is_object()) {
    ++rep.certificates;
    std::string why;
    if (!certificate_rechecks(ring, node.at("certificate"), &why)) {
      rep.ok = false;
      rep.problems.push_back(path + "/certificate: " + why);
    }
  }
  if (node.contains("witness") && node.at("witness").is_object() && node.contains("pair")) {
    ++rep.witnesses;
    try {
      const json& pair = node.at("pair");
      if (!pair.is_array() || pair.size() != 2) throw Error(ErrorCode::InvalidArtifact, "pair must have two maps");
      AffineMap f = map_from_json(ring, pair[0]);
      AffineMap g = map_from_json(ring, pair[1]);
      if (!verify_relation(witness_from_json(node.at("witness")), f, g))
        throw Error(ErrorCode::InvalidArtifact, "relation does not hold");
    } catch (const std::exception& e) {
      rep.ok = false;
      rep.problems.push_back(path + "/witness: " + e.what());
    }
  }
  for (const auto& [k, v] : node.items()) {
    if (k == "certificate") continue;
    walk(v, ring, rep, path + "/" + k);
  }
}

}  // namespace

CheckReport check_artifact(const json& artifact, unsigned workers) {
  CheckReport rep;
  auto problem = [&](std::string m) {
    rep.ok = false;
    rep.problems.push_back(std::move(m));
  };
  if (!artifact.is_object()) {
    problem("artifact is not a JSON object");
    return rep;
  }
  if (!artifact.contains("v") || artifact.at("v") != kSchemaVersion) problem("schema version is not v1");
  if (!artifact.contains("kind") || !artifact.at("kind").is_string() || !artifact.contains("input") ||
      !artifact.contains("result") || !artifact.contains("status")) {
    problem("artifact lacks kind/input/status/result");
    return rep;
  }
  const std::string kind = artifact.at("kind").get<std::string>();
  try {
    Artifact again = run_artifact(kind, artifact.at("input"), workers);
    if (again.doc.at("input") != artifact.at("input")) problem("input block is not in canonical form");
    if (again.doc.at("status") != artifact.at("status")) problem("status differs on re-run");
    if (again.doc.at("result") != artifact.at("result")) problem("result differs on re-run");
  } catch (const std::exception& e) {
    problem(std::string("re-run failed: ") + e.what());
  }
  const json& result = artifact.at("result");
  if (result.is_object() && result.contains("ring")) {
    try {
      RingPtr ring = ring_from_json(result.at("ring"));
      walk(result, ring, rep, "result");
    } catch (const std::exception& e) {
      problem(std::string("ring: ") + e.what());
    }
  }
  return rep;
}

}  // namespace affgrow
