#include "affgrow_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "affgrow/artifacts.hpp"
#include "affgrow/error.hpp"

namespace affgrow::cli {
namespace {

struct Options {
  std::string ring, gens, pair, poly, poly_file, out, csv, check_file;
  std::optional<std::size_t> nmax, dplus_nmax, lower_probe, max_degree, dplus_radius;
  std::optional<long> n;
  std::optional<int> bits;
  bool json_flag = false;
  bool no_lower = false;
  unsigned workers = 0;

  std::optional<int> precision_bits;
  std::optional<std::size_t> relation_max_len, memory_budget;
  std::optional<long> trial_division_bound;
};

void add_budget(CLI::App* cmd, Options& o) {
  cmd->add_option("--precision-bits", o.precision_bits, "Working precision for archimedean checks")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--relation-max-len", o.relation_max_len, "Longest word searched for relations")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--memory-budget", o.memory_budget, "Maximum stored elements")->check(CLI::PositiveNumber);
  cmd->add_option("--trial-division-bound", o.trial_division_bound, "Largest trial divisor")
      ->check(CLI::Range(2L, 1L << 40));
  cmd->add_option("--workers", o.workers, "Worker threads (0: all cores); output does not depend on it");
}

void add_output(CLI::App* cmd, Options& o) {
  cmd->add_flag("--json", o.json_flag, "Print the JSON artifact on stdout (the default without --out)");
  cmd->add_option("--out", o.out, "Write the JSON artifact to this file");
}

void add_setting(CLI::App* cmd, Options& o) {
  cmd->add_option("--ring", o.ring, "Modulus such as \"x^3+x+1\" or \"1,1,0,1\", or Q(t)")->required();
  cmd->add_option("--gens", o.gens, "Generators \"a|b; a|b\" or the preset gamma");
}

std::string read_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot read " + path);
  std::string text, line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    text += line;
  }
  text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }),
             text.end());
  if (text.empty()) throw Error(ErrorCode::Parse, path + " holds no polynomial");
  return text;
}

template <typename T>
void put(json& in, const char* key, const std::optional<T>& v) {
  if (v) in[key] = *v;
}

json build_input(const std::string& kind, const Options& o) {
  json in = json::object();
  if (!o.ring.empty()) in["ring"] = o.ring;
  if (!o.gens.empty()) in["gens"] = o.gens;
  if (kind == "decide" && !o.pair.empty()) in["pair"] = o.pair;
  if (kind == "mahler" || kind == "lehmer") {
    if (!o.poly.empty() && !o.poly_file.empty()) throw Error(ErrorCode::Parse, "give --poly or --poly-file, not both");
    if (!o.poly_file.empty()) in["poly"] = read_poly_file(o.poly_file);
    else if (!o.poly.empty()) in["poly"] = o.poly;
    else throw Error(ErrorCode::Parse, "--poly or --poly-file is required");
  }
  put(in, "nmax", o.nmax);
  put(in, "dplus_nmax", o.dplus_nmax);
  put(in, "lower_probe", o.lower_probe);
  put(in, "n", o.n);
  put(in, "max_degree", o.max_degree);
  put(in, "dplus_radius", o.dplus_radius);
  put(in, "bits", o.bits);
  if (kind == "verify-ct" && o.no_lower) in["run_lower"] = false;
  if (kind != "mahler" && kind != "classify") {
    put(in, "precision_bits", o.precision_bits);
    put(in, "relation_max_len", o.relation_max_len);
    put(in, "memory_budget", o.memory_budget);
    put(in, "trial_division_bound", o.trial_division_bound);
  }
  return in;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Parse, "cannot write " + path);
  f << text;
  if (!f) throw Error(ErrorCode::Parse, "write failed for " + path);
}

int emit(const Artifact& a, const Options& o, std::ostream& out) {
  const std::string text = a.doc.dump(2) + "\n";
  if (!o.out.empty()) write_file(o.out, text);
  if (o.out.empty() || o.json_flag) out << text;
  if (!o.csv.empty()) write_file(o.csv, a.csv);
  switch (a.status) {
    case ArtifactStatus::Ok: return kOk;
    case ArtifactStatus::Unknown: return kUnknown;
    case ArtifactStatus::Failed: return kInputError;
  }
  return kInputError;
}

int run_check(const Options& o, std::ostream& out) {
  json doc;
  try {
    if (o.check_file == "-") {
      doc = json::parse(std::cin);
    } else {
      std::ifstream f(o.check_file);
      if (!f) throw Error(ErrorCode::Parse, "cannot read " + o.check_file);
      doc = json::parse(f);
    }
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidArtifact, std::string("not JSON: ") + e.what());
  }
  CheckReport r = check_artifact(doc, o.workers);
  json rep{{"v", kSchemaVersion},
           {"kind", "check"},
           {"file", o.check_file},
           {"ok", r.ok},
           {"certificates", r.certificates},
           {"witnesses", r.witnesses},
           {"problems", r.problems}};
  out << rep.dump(2) << "\n";
  return r.ok ? kOk : kInputError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Growth, freeness and Mahler-measure experiments for affine groups over number fields"};
  app.name("affgrow");
  app.require_subcommand(1);
  Options o;

  auto* growth = app.add_subcommand("growth", "Ball sizes, entropy bounds and d+ bracket");
  add_setting(growth, o);
  growth->add_option("--nmax", o.nmax, "Largest radius")->check(CLI::PositiveNumber);
  growth->add_option("--dplus-nmax", o.dplus_nmax, "Radius searched for a free pair");
  growth->add_option("--lower-probe", o.lower_probe, "Radius probed for d+ refutations");
  growth->add_option("--csv", o.csv, "Write the growth table as CSV");
  add_budget(growth, o);
  add_output(growth, o);

  auto* dplus = app.add_subcommand("dplus", "Bracket d+ from above (certificate) and below (refutations)");
  add_setting(dplus, o);
  dplus->add_option("--nmax", o.nmax, "Radius searched for a free pair")->check(CLI::PositiveNumber);
  dplus->add_option("--lower-probe", o.lower_probe, "Radius probed for refutations");
  add_budget(dplus, o);
  add_output(dplus, o);

  auto* decide = app.add_subcommand("decide", "Decide freeness of one pair");
  add_setting(decide, o);
  decide->add_option("--pair", o.pair, "Two words in the generators (\"A,B\") or two maps \"a|b; a|b\"");
  add_budget(decide, o);
  add_output(decide, o);

  auto* mahler = app.add_subcommand("mahler", "Certified Mahler measure");
  mahler->add_option("--poly", o.poly, "Monic integer polynomial");
  mahler->add_option("--poly-file", o.poly_file, "File holding the polynomial ('#' starts a comment)");
  mahler->add_option("--bits", o.bits, "Starting precision")->check(CLI::PositiveNumber);
  add_output(mahler, o);

  auto* ct = app.add_subcommand("verify-ct", "Verify the counterexample family relations at index n");
  ct->add_option("--n", o.n, "Family index")->required()->check(CLI::PositiveNumber);
  ct->add_option("--max-degree", o.max_degree, "Refuse rings above this degree");
  ct->add_flag("--no-lower", o.no_lower, "Skip the d+ lower-bound probe");
  add_budget(ct, o);
  add_output(ct, o);

  auto* classify = app.add_subcommand("classify", "Structure class of the generated group");
  add_setting(classify, o);
  add_output(classify, o);

  auto* lehmer = app.add_subcommand("lehmer", "Mahler measure against growth and d+ for one polynomial");
  lehmer->add_option("--poly", o.poly, "Monic integer polynomial");
  lehmer->add_option("--poly-file", o.poly_file, "File holding the polynomial ('#' starts a comment)");
  lehmer->add_option("--nmax", o.nmax, "Largest radius of the growth table")->check(CLI::PositiveNumber);
  lehmer->add_option("--dplus-radius", o.dplus_radius, "Radius searched for a certificate");
  lehmer->add_option("--bits", o.bits, "Starting precision")->check(CLI::PositiveNumber);
  lehmer->add_option("--csv", o.csv, "Write the growth table as CSV");
  add_budget(lehmer, o);
  add_output(lehmer, o);

  auto* check = app.add_subcommand("check", "Re-validate an artifact (use - for stdin)");
  check->add_option("file", o.check_file, "Artifact JSON")->required();
  check->add_option("--workers", o.workers, "Worker threads");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (check->parsed()) return run_check(o, out);
    CLI::App* sub = app.get_subcommands().front();
    const std::string kind = sub->get_name();
    Artifact a = run_artifact(kind, build_input(kind, o), o.workers);
    if (kind != "growth" && kind != "lehmer" && !o.csv.empty())
      throw Error(ErrorCode::Parse, "--csv applies to growth and lehmer only");
    return emit(a, o, out);
  } catch (const std::exception& e) {
    err << "affgrow: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace affgrow::cli
