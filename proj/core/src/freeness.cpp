#include "affgrow/freeness.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "affgrow/error.hpp"
#include "affgrow/rational.hpp"

namespace affgrow {

std::string to_string(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::Free: return "free";
    case VerdictTag::NotFree: return "notfree";
    case VerdictTag::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

std::optional<RingElement> fixed_point_of(const AffineMap& f) {
  MapClass c;
  try {
    c = classify_map(f);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ZeroDivisor) return std::nullopt;
    throw;
  }
  if (c.tag != MapTag::Homothety)
    throw Error(ErrorCode::NotHomothety, f.to_string() + " is not a homothety");
  return c.fixed_point;
}

const mpq_class& one_third() {
  static const mpq_class t(1, 3);
  return t;
}

}  // namespace

std::optional<PingPongCertificate> check_pingpong(const AffineMap& f, const AffineMap& g,
                                                  const Place& place, int precision_bits) {
  const RingPtr& ring = f.ring();
  if (!ring->same_as(*g.ring())) throw Error(ErrorCode::MixedParents, "pair from different rings");
  auto pf = fixed_point_of(f);
  auto pg = fixed_point_of(g);
  if (!pf || !pg || *pf == *pg) return std::nullopt;

  PingPongCertificate cert{f, g, place, std::nullopt, std::nullopt, {*pf, *pg}, std::nullopt};
  if (const auto* arch = std::get_if<ArchimedeanPlace>(&place)) {
    if (!ring->is_number_ring() || arch->modulus != ring->modulus())
      throw Error(ErrorCode::PlaceRingMismatch, "archimedean place of another modulus");
    AbsEnclosure e1 = abs_arch(f.ratio(), *arch, precision_bits);
    if (e1.hi > one_third()) return std::nullopt;
    AbsEnclosure e2 = abs_arch(g.ratio(), *arch, precision_bits);
    if (e2.hi > one_third()) return std::nullopt;
    // Distinct in K is not enough when pi is reducible: they must differ at
    // this root too.
    if (abs_arch(*pf - *pg, *arch, precision_bits).lo <= 0) return std::nullopt;
    cert.margin = one_third() - std::max(e1.hi, e2.hi);
    cert.ratio_bounds = std::make_pair(std::move(e1), std::move(e2));
    return cert;
  }
  if (const auto* pad = std::get_if<PAdicPlace>(&place)) {
    if (!ring->is_number_ring()) throw Error(ErrorCode::PlaceRingMismatch, "p-adic place over Q(t)");
    if (!ring->is_field()) return std::nullopt;
    const auto v1 = newton_polygon_valuations(f.ratio(), pad->prime);
    const auto v2 = newton_polygon_valuations(g.ratio(), pad->prime);
    mpq_class a, b;
    if (f.ratio() == g.ratio()) {
      a = b = v1.back();
    } else {
      a = v1.front();
      b = v2.front();
    }
    if (a <= 0 || b <= 0) return std::nullopt;
    cert.place = PAdicPlace{pad->prime, std::min(a, b)};
    cert.valuations = std::make_pair(a, b);
    return cert;
  }
  const auto& tad = std::get<TAdicPlace>(place);
  if (ring->is_number_ring()) throw Error(ErrorCode::PlaceRingMismatch, "t-adic place over a number ring");
  const long o1 = t_adic_order(f.ratio(), tad.center);
  const long o2 = t_adic_order(g.ratio(), tad.center);
  if (o1 <= 0 || o2 <= 0) return std::nullopt;
  cert.valuations = std::make_pair(mpq_class(o1), mpq_class(o2));
  return cert;
}

std::optional<PingPongCertificate> search_freeness_certificate(const AffineMap& f,
                                                               const AffineMap& g,
                                                               const SearchBudget& budget,
                                                               BudgetReport* report) {
  BudgetReport local;
  BudgetReport& rep = report ? *report : local;
  try {
    if (classify_map(f).tag != MapTag::Homothety || classify_map(g).tag != MapTag::Homothety)
      return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
  auto attempt = [&](const Place& place) -> std::optional<PingPongCertificate> {
    ++rep.places_tried;
    return check_pingpong(f, g, place, budget.precision_bits);
  };
  const RingPtr& ring = f.ring();
  if (ring->is_number_ring()) {
    for (const auto& place : archimedean_places(ring))
      if (auto c = attempt(place)) return c;
    if (!ring->is_field()) return std::nullopt;
    bool complete1 = true, complete2 = true;
    auto primes = candidate_primes(f.ratio(), budget.trial_division_bound, &complete1);
    auto more = candidate_primes(g.ratio(), budget.trial_division_bound, &complete2);
    if (!complete1 || !complete2) rep.factorization_budget_hit = true;
    primes.insert(primes.end(), more.begin(), more.end());
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (const auto& p : primes)
      if (auto c = attempt(PAdicPlace{p, 0})) return c;
    return std::nullopt;
  }
  std::vector<std::optional<mpq_class>> centers{mpq_class(0)};
  for (const AffineMap* m : {&f, &g}) {
    bool complete = true;
    for (const auto& r : rational_roots(m->ratio().numerator(), budget.trial_division_bound, &complete))
      if (r != 0) centers.emplace_back(r);
    if (!complete) rep.factorization_budget_hit = true;
  }
  std::sort(centers.begin() + 1, centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
  centers.emplace_back(std::nullopt);
  for (const auto& c : centers)
    if (auto cert = attempt(TAdicPlace{c})) return cert;
  return std::nullopt;
}

namespace {

// Positive-word BFS node: value, parent node, last letter.
struct Node {
  AffineMap value;
  std::size_t parent;
  std::size_t letter;
};

Word word_of(const std::vector<Node>& nodes, std::size_t idx) {
  std::vector<std::size_t> gens;
  while (idx != static_cast<std::size_t>(-1)) {
    gens.push_back(nodes[idx].letter);
    idx = nodes[idx].parent;
  }
  std::reverse(gens.begin(), gens.end());
  return Word::positive(gens);
}

}  // namespace

std::optional<RelationWitness> find_relation(const AffineMap& f, const AffineMap& g,
                                             std::size_t max_len, std::size_t memory_budget) {
  if (!f.ring()->same_as(*g.ring())) throw Error(ErrorCode::MixedParents, "pair from different rings");
  const AffineMap gens[2] = {f, g};
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
  std::vector<Node> nodes;
  std::unordered_map<AffineMap, std::size_t, AffineMapHash> seen;
  std::vector<std::size_t> frontier;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::size_t> next;
    const std::size_t parents = len == 1 ? 1 : frontier.size();
    for (std::size_t k = 0; k < parents; ++k) {
      const std::size_t parent = len == 1 ? kRoot : frontier[k];
      for (std::size_t l = 0; l < 2; ++l) {
        AffineMap value = parent == kRoot ? gens[l] : compose(nodes[parent].value, gens[l]);
        auto it = seen.find(value);
        if (it != seen.end()) {
          nodes.push_back({std::move(value), parent, l});
          return RelationWitness{word_of(nodes, it->second), word_of(nodes, nodes.size() - 1)};
        }
        if (nodes.size() >= memory_budget)
          throw Error(ErrorCode::MemoryBudget, "relation search exceeded " + std::to_string(memory_budget) + " elements");
        nodes.push_back({value, parent, l});
        seen.emplace(std::move(value), nodes.size() - 1);
        next.push_back(nodes.size() - 1);
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::vector<std::size_t> count_positive_words(const AffineMap& f, const AffineMap& g,
                                              std::size_t n_max, std::size_t memory_budget) {
  if (!f.ring()->same_as(*g.ring())) throw Error(ErrorCode::MixedParents, "pair from different rings");
  std::vector<std::size_t> counts;
  std::vector<AffineMap> level;
  std::size_t stored = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::unordered_set<AffineMap, AffineMapHash> next;
    if (n == 1) {
      next.insert(f);
      next.insert(g);
    } else {
      for (const auto& v : level) {
        next.insert(compose(v, f));
        next.insert(compose(v, g));
      }
    }
    stored += next.size();
    if (stored > memory_budget)
      throw Error(ErrorCode::MemoryBudget, "word count exceeded " + std::to_string(memory_budget) + " elements");
    counts.push_back(next.size());
    level.assign(next.begin(), next.end());
  }
  return counts;
}

RelationWitness translation_relation(const std::vector<mpz_class>& pi) {
  if (pi.empty()) throw Error(ErrorCode::EmptyModulus, "empty polynomial");
  std::vector<Letter> u, v;
  const std::size_t d = pi.size() - 1;
  for (std::size_t i = 0; i <= d; ++i) {
    const mpz_class& c = pi[i];
    const unsigned long n = mpz_class(abs(c)).get_ui();
    auto& target = c > 0 ? u : v;
    for (unsigned long k = 0; k < n; ++k) target.push_back({1, 1});
    if (i < d) {
      u.push_back({0, 1});
      v.push_back({0, 1});
    }
  }
  return {Word(std::move(u)), Word(std::move(v))};
}

std::optional<RelationWitness> translation_pair_relation(const AffineMap& f, const AffineMap& g,
                                                         std::size_t max_letters) {
  if (!g.is_translation()) return std::nullopt;
  const RingElement& alpha = f.ratio();
  std::vector<mpq_class> poly;
  if (f.ring()->is_number_ring()) {
    poly = charpoly(alpha);
  } else if (auto r = alpha.as_rational()) {
    poly = {-*r, mpq_class(1)};
  } else {
    return std::nullopt;
  }
  mpz_class den = 1;
  for (const auto& c : poly) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class letters = 2 * static_cast<unsigned long>(poly.size());
  for (const auto& c : poly) {
    mpq_class s = c * den;
    ints.push_back(s.get_num());
    letters += abs(s.get_num());
  }
  if (letters > max_letters) return std::nullopt;
  RelationWitness w = translation_relation(ints);
  if (!verify_relation(w, f, g)) return std::nullopt;
  return w;
}

bool verify_relation(const RelationWitness& w, const AffineMap& f, const AffineMap& g) {
  if (w.u == w.v) return false;
  const std::vector<AffineMap> gens{f, g};
  for (const Word* word : {&w.u, &w.v})
    for (const Letter& l : word->letters())
      if (l.gen > 1) return false;
  return eval_word(w.u, gens) == eval_word(w.v, gens);
}

std::pair<RingElement, RingElement> ratio_reduce(const AffineMap& f, const AffineMap& g) {
  MapClass cf = classify_map(f);
  MapClass cg = classify_map(g);
  if (cf.tag != MapTag::Homothety || cg.tag != MapTag::Homothety)
    throw Error(ErrorCode::NotTwoHomotheties, "ratio_reduce needs two homotheties");
  if (*cf.fixed_point == *cg.fixed_point)
    throw Error(ErrorCode::EqualFixedPoints, "both maps fix " + cf.fixed_point->to_string());
  return {f.ratio(), g.ratio()};
}

FreenessVerdict decide_pair(const AffineMap& f, const AffineMap& g, const SearchBudget& budget) {
  FreenessVerdict out;
  auto not_free = [&](RelationWitness w, std::string note) {
    out.tag = VerdictTag::NotFree;
    out.witness = std::move(w);
    out.report.note = std::move(note);
    return out;
  };
  if (f == g) return not_free({Word::positive({0}), Word::positive({1})}, "equal elements");
  if (commute(f, g)) return not_free({Word::positive({0, 1}), Word::positive({1, 0})}, "commuting pair");

  if (auto cert = search_freeness_certificate(f, g, budget, &out.report)) {
    out.tag = VerdictTag::Free;
    out.certificate = std::move(cert);
    return out;
  }
  if (g.is_translation()) {
    if (auto w = translation_pair_relation(f, g)) return not_free(std::move(*w), "translation relation");
  } else if (f.is_translation()) {
    if (auto w = translation_pair_relation(g, f)) {
      auto swap = [](const Word& word) {
        std::vector<Letter> ls = word.letters();
        for (auto& l : ls) l.gen = 1 - l.gen;
        return Word(std::move(ls));
      };
      return not_free({swap(w->u), swap(w->v)}, "translation relation");
    }
  }
  try {
    if (auto w = find_relation(f, g, budget.relation_max_len, budget.memory_budget)) {
      out.report.relation_len_searched = w->v.size();
      return not_free(std::move(*w), "relation search");
    }
    out.report.relation_len_searched = budget.relation_max_len;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::MemoryBudget) throw;
    out.report.memory_budget_hit = true;
  }
  out.tag = VerdictTag::Unknown;
  out.report.note = "no certificate and no relation within budget";
  return out;
}

}  // namespace affgrow
