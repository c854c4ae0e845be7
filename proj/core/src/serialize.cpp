#include "affgrow/serialize.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "affgrow/error.hpp"
#include "affgrow/rational.hpp"

namespace affgrow {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidArtifact, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json qvec_json(const std::vector<mpq_class>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(rational_json(q));
  return out;
}

std::vector<mpq_class> qvec_from_json(const json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  std::vector<mpq_class> out;
  for (const auto& q : j) out.push_back(rational_from_json(q));
  return out;
}

}  // namespace

json rational_json(const mpq_class& q) { return to_string(q); }

json dual_json(const mpq_class& q) { return {{"exact", to_string(q)}, {"decimal", to_double(q)}}; }

mpq_class rational_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      bad(e.what());
    }
  }
  if (j.is_object() && j.contains("exact")) return rational_from_json(j.at("exact"));
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  bad("expected an exact rational");
}

json enclosure_json(const AbsEnclosure& e) {
  return {{"lo", dual_json(e.lo)}, {"hi", dual_json(e.hi)}, {"budget_exhausted", e.budget_exhausted}};
}

AbsEnclosure enclosure_from_json(const json& j) {
  return {rational_from_json(field(j, "lo")), rational_from_json(field(j, "hi")),
          field(j, "budget_exhausted").get<bool>()};
}

json ring_json(const RingPtr& ring) {
  if (!ring->is_number_ring()) return {{"kind", "function_field"}, {"text", ring->describe()}};
  json mod = json::array();
  for (const auto& c : ring->modulus()) mod.push_back(to_string(c));
  return {{"kind", "number_ring"},
          {"modulus", mod},
          {"text", ring->describe()},
          {"irreducible", to_string(ring->irreducible_hint())}};
}

RingPtr ring_from_json(const json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "function_field") return function_field();
  if (kind != "number_ring") bad("unknown ring kind '" + kind + "'");
  std::vector<mpz_class> coeffs;
  for (const auto& c : field(j, "modulus")) {
    mpq_class q = rational_from_json(c);
    if (q.get_den() != 1) bad("non-integer modulus coefficient");
    coeffs.push_back(q.get_num());
  }
  RingPtr ring = number_ring(std::move(coeffs));
  if (j.contains("irreducible") && j.at("irreducible") == "yes" && ring->irreducible_hint() != Tristate::Yes)
    ring = with_irreducible_hint(ring, Tristate::Yes);
  return ring;
}

json element_json(const RingElement& e) {
  if (e.ring()->is_number_ring()) return {{"coeffs", qvec_json(e.coeffs())}, {"text", e.to_string()}};
  return {{"num", qvec_json(e.numerator().coeffs())},
          {"den", qvec_json(e.denominator().coeffs())},
          {"text", e.to_string()}};
}

RingElement element_from_json(const RingPtr& ring, const json& j) {
  if (ring->is_number_ring()) {
    auto c = qvec_from_json(field(j, "coeffs"));
    if (c.size() != ring->degree()) bad("coefficient count does not match the ring degree");
    return RingElement::from_poly(ring, QPoly(std::move(c)));
  }
  QPoly den(qvec_from_json(field(j, "den")));
  if (den.is_zero()) bad("zero denominator");
  return RingElement::fraction(ring, QPoly(qvec_from_json(field(j, "num"))), den);
}

json map_json(const AffineMap& f) {
  return {{"a", element_json(f.ratio())}, {"b", element_json(f.shift())}, {"text", f.to_string()}};
}

AffineMap map_from_json(const RingPtr& ring, const json& j) {
  try {
    return AffineMap(element_from_json(ring, field(j, "a")), element_from_json(ring, field(j, "b")));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArtifact) throw;
    bad(std::string("invalid map: ") + e.what());
  }
}

json place_json(const Place& place) {
  if (const auto* a = std::get_if<ArchimedeanPlace>(&place)) {
    return {{"type", "archimedean"},
            {"index", a->index},
            {"real", a->real},
            {"conjugate", a->conjugate ? json(*a->conjugate) : json(nullptr)},
            {"multiplicity", a->multiplicity},
            {"working_bits", a->working_bits},
            {"center", {{"re", rational_json(a->center.re)}, {"im", rational_json(a->center.im)}}},
            {"center_decimal", {to_double(a->center.re), to_double(a->center.im)}},
            {"radius", rational_json(a->radius)},
            {"description", describe(place)}};
  }
  if (const auto* p = std::get_if<PAdicPlace>(&place)) {
    return {{"type", "p-adic"}, {"prime", to_string(p->prime)}, {"valuation", rational_json(p->slope)},
            {"description", describe(place)}};
  }
  const auto& t = std::get<TAdicPlace>(place);
  return {{"type", "t-adic"},
          {"center", t.center ? rational_json(*t.center) : json(nullptr)},
          {"description", describe(place)}};
}

Place place_from_json(const RingPtr& ring, const json& j) {
  const std::string type = field(j, "type").get<std::string>();
  if (type == "archimedean") {
    const auto index = field(j, "index").get<std::size_t>();
    auto places = archimedean_places(ring);
    if (index >= places.size()) bad("archimedean index out of range");
    return places[index];
  }
  if (type == "p-adic") {
    mpq_class p = rational_from_json(field(j, "prime"));
    if (p.get_den() != 1 || p <= 1) bad("invalid prime");
    return PAdicPlace{p.get_num(), rational_from_json(field(j, "valuation"))};
  }
  if (type == "t-adic") {
    const json& c = field(j, "center");
    return TAdicPlace{c.is_null() ? std::nullopt : std::optional<mpq_class>(rational_from_json(c))};
  }
  bad("unknown place type '" + type + "'");
}

json certificate_json(const PingPongCertificate& c, int precision_bits) {
  json out{{"pair", {map_json(c.first), map_json(c.second)}}, {"place", place_json(c.place)}};
  out["ratio_bounds"] = c.ratio_bounds
                            ? json{enclosure_json(c.ratio_bounds->first), enclosure_json(c.ratio_bounds->second)}
                            : json(nullptr);
  out["valuations"] = c.valuations
                          ? json{rational_json(c.valuations->first), rational_json(c.valuations->second)}
                          : json(nullptr);
  out["fixed_points"] = {element_json(c.fixed_points.first), element_json(c.fixed_points.second)};
  out["margin"] = c.margin ? dual_json(*c.margin) : json(nullptr);
  out["precision_bits"] = precision_bits;
  return out;
}

json witness_json(const RelationWitness& w) {
  const std::vector<std::string> names{"a", "b"};
  return {{"u", w.u.to_string(names)}, {"v", w.v.to_string(names)}, {"letters", names}};
}

RelationWitness witness_from_json(const json& j) {
  const std::vector<std::string> names{"a", "b"};
  try {
    return {Word::parse(field(j, "u").get<std::string>(), names), Word::parse(field(j, "v").get<std::string>(), names)};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArtifact) throw;
    bad(std::string("invalid witness: ") + e.what());
  }
}

json verdict_json(const FreenessVerdict& v, int precision_bits) {
  json rep{{"relation_len_searched", v.report.relation_len_searched},
           {"places_tried", v.report.places_tried},
           {"memory_budget_hit", v.report.memory_budget_hit},
           {"factorization_budget_hit", v.report.factorization_budget_hit},
           {"note", v.report.note}};
  return {{"verdict", to_string(v.tag)},
          {"certificate", v.certificate ? certificate_json(*v.certificate, precision_bits) : json(nullptr)},
          {"witness", v.witness ? witness_json(*v.witness) : json(nullptr)},
          {"report", rep}};
}

json growth_rows_json(const GrowthTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"n", r.n},
                    {"ball_size", r.ball_size},
                    {"upper_bound_bits", finite_or_null(r.upper_bound_bits())},
                    {"dplus_status", to_string(r.dplus_status)}});
  }
  return rows;
}

json entropy_json(const EntropyBounds& e) {
  json lower;
  if (e.lower_denominator) {
    lower = {{"expression", "log(2)/" + std::to_string(*e.lower_denominator)}, {"bits", e.lower_bits()}};
  } else {
    lower = {{"expression", "0"}, {"bits", 0.0}};
  }
  json uppers = json::array();
  for (double u : e.upper_bits) uppers.push_back(finite_or_null(u));
  return {{"entropy_lower", lower},
          {"entropy_upper_best_bits", finite_or_null(e.best_upper_bits())},
          {"upper_bits", uppers},
          {"lower_le_every_upper", e.lower_le_every_upper}};
}

json dplus_upper_json(const DplusUpper& d, const std::vector<std::string>& names, int precision_bits) {
  return {{"n", d.n},
          {"words", {d.first_word.to_string(names), d.second_word.to_string(names)}},
          {"certificate", certificate_json(d.certificate, precision_bits)}};
}

json dplus_lower_json(const DplusLower& d, const std::vector<std::string>& names) {
  json elements = json::array();
  for (std::size_t i = 0; i < d.elements.size(); ++i)
    elements.push_back({{"word", d.words[i].to_string(names)}, {"map", d.elements[i].to_string()}});
  json refs = json::array();
  for (const auto& r : d.log) {
    refs.push_back({{"radius", r.radius},
                    {"first", r.first},
                    {"second", r.second},
                    {"reason", r.reason},
                    {"pair", {map_json(d.elements[r.first]), map_json(d.elements[r.second])}},
                    {"witness", r.witness ? witness_json(*r.witness) : json(nullptr)}});
  }
  json resisting = nullptr;
  if (d.resisting)
    resisting = {{"radius", d.resisting_radius},
                 {"pair", {d.resisting->first.to_string(), d.resisting->second.to_string()}}};
  return {{"m", d.m},
          {"implies_dplus_at_least", d.m + 1},
          {"elements", elements},
          {"refutations", refs},
          {"resisting", resisting}};
}

json mahler_json(const MahlerResult& m) {
  json roots = json::array();
  for (const auto& r : m.per_root)
    roots.push_back({{"place", place_json(r.root)}, {"modulus", enclosure_json(r.modulus)},
                     {"factor", enclosure_json(r.factor)}});
  return {{"measure", enclosure_json(m.measure)},
          {"numeric_measure", enclosure_json(m.numeric_measure)},
          {"abs_root_product", enclosure_json(m.abs_root_product)},
          {"is_kronecker", m.is_kronecker},
          {"stripped_x_power", m.stripped_x_power},
          {"roots", roots}};
}

json ct_json(const CtReport& r) {
  json rels = json::array();
  for (const auto& x : r.verified_relations)
    rels.push_back({{"p", x.p},
                    {"q", x.q},
                    {"identity", x.identity},
                    {"holds_by_powers", x.holds_by_powers},
                    {"holds_by_words", x.holds_by_words}});
  const std::vector<std::string> raw_names{"A", "B"};
  json out{{"n", r.n},
           {"ring", ring_json(r.ring)},
           {"base_relation", r.base_relation},
           {"relations", rels},
           {"all_hold", r.all_hold()},
           {"dplus_lower_claim", r.dplus_lower_claim}};
  if (r.symmetrized_lower) {
    auto [a, b] = gamma_generators(r.ring);
    GeneratingSet sigma = GeneratingSet::from({a, b});
    out["symmetrized_lower"] = dplus_lower_json(*r.symmetrized_lower, sigma.symmetrized_names(raw_names));
  } else {
    out["symmetrized_lower"] = nullptr;
  }
  out["raw_lower"] = r.raw_lower ? dplus_lower_json(*r.raw_lower, raw_names) : json(nullptr);
  return out;
}

json lehmer_json(const LehmerReport& r, int precision_bits) {
  json checks = json::array();
  for (const auto& [n, ok] : r.doubling_checks) checks.push_back({{"n", n}, {"holds", ok}});
  return {{"mahler", mahler_json(r.mahler)},
          {"log_m", {{"lo", r.log_m_lo}, {"hi", r.log_m_hi}}},
          {"implied_dplus_lower", r.implied_dplus_lower ? json(*r.implied_dplus_lower) : json(nullptr)},
          {"rows", growth_rows_json(r.growth)},
          {"truncated", r.growth.truncated},
          {"entropy", entropy_json(r.entropy)},
          {"doubling_checks", checks},
          {"certificate_radius_searched", r.certificate_radius_searched},
          {"certificate", r.certificate ? certificate_json(r.certificate->certificate, precision_bits) : json(nullptr)},
          {"certificate_radius", r.certificate ? json(r.certificate->n) : json(nullptr)},
          {"claim_consistent", r.claim_consistent},
          {"polynomial_trend", r.polynomial_trend}};
}

std::string growth_csv(const GrowthTable& t) {
  std::ostringstream out;
  out << "n,ball_size,upper_bound_bits,dplus_status\n";
  for (const auto& r : t.rows) {
    out << r.n << ',' << r.ball_size << ',';
    if (r.n > 0) out << std::fixed << std::setprecision(10) << r.upper_bound_bits();
    out << ',' << to_string(r.dplus_status) << '\n';
  }
  return out.str();
}

bool certificate_rechecks(const RingPtr& ring, const json& cert, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  try {
    const json& pair = field(cert, "pair");
    if (!pair.is_array() || pair.size() != 2) return fail("certificate pair must have two maps");
    AffineMap f = map_from_json(ring, pair[0]);
    AffineMap g = map_from_json(ring, pair[1]);
    Place place = place_from_json(ring, field(cert, "place"));
    const int bits = field(cert, "precision_bits").get<int>();
    auto again = check_pingpong(f, g, place, bits);
    if (!again) return fail("ping-pong check fails at the recorded place");
    if (again->fixed_points.first == again->fixed_points.second) return fail("fixed points coincide");
    if (certificate_json(*again, bits) != cert) return fail("re-derived certificate differs");
    return true;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

}  // namespace affgrow
