#include "affgrow/growth.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "affgrow/error.hpp"
#include "affgrow/rational.hpp"

namespace affgrow {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

unsigned resolve_workers(unsigned workers) {
  if (workers != 0) return workers;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace

GeneratingSet GeneratingSet::from(const std::vector<AffineMap>& raw) {
  if (raw.empty()) throw Error(ErrorCode::Precondition, "empty generating set");
  GeneratingSet s;
  s.raw = raw;
  std::vector<AffineMap> all{AffineMap::identity(raw.front().ring())};
  for (const auto& g : raw) {
    all.push_back(g);
    all.push_back(invert(g));
  }
  std::sort(all.begin(), all.end(), [](const AffineMap& a, const AffineMap& b) { return a.compare(b) < 0; });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  s.symmetrized = std::move(all);
  return s;
}

std::vector<std::string> GeneratingSet::symmetrized_names(const std::vector<std::string>& raw_names) const {
  std::vector<std::string> out;
  for (const auto& g : symmetrized) {
    std::string name;
    if (g.is_identity()) name = "e";
    for (std::size_t i = 0; i < raw.size() && name.empty(); ++i) {
      const std::string base = i < raw_names.size() ? raw_names[i] : "g" + std::to_string(i);
      if (g == raw[i]) name = base;
      else if (g == invert(raw[i])) name = base + "^-1";
    }
    out.push_back(name);
  }
  return out;
}

Word Ball::word(std::size_t idx) const {
  std::vector<std::size_t> gens;
  while (idx != kNone && elements[idx].gen != kNone) {
    gens.push_back(elements[idx].gen);
    idx = elements[idx].parent;
  }
  std::reverse(gens.begin(), gens.end());
  return Word::positive(gens);
}

Ball grow_ball(const std::vector<AffineMap>& generators, std::size_t n_max, bool include_identity,
               std::size_t memory_budget, unsigned workers) {
  if (generators.empty()) throw Error(ErrorCode::Precondition, "empty generating set");
  workers = resolve_workers(workers);
  Ball ball;
  ball.generators = generators;
  std::unordered_set<AffineMap, AffineMapHash> seen;
  if (include_identity) {
    AffineMap e = AffineMap::identity(generators.front().ring());
    seen.insert(e);
    ball.elements.push_back({std::move(e), 0, kNone, kNone});
  }
  ball.radius_end.push_back(ball.elements.size());

  struct Candidate {
    AffineMap value;
    std::size_t parent;
    std::size_t gen;
  };
  for (std::size_t r = 1; r <= n_max; ++r) {
    std::vector<std::size_t> parents;
    const std::size_t begin = r >= 2 ? ball.radius_end[r - 2] : 0;
    const std::size_t end = ball.radius_end[r - 1];
    if (r == 1 && !include_identity) {
      parents.push_back(kNone);
    } else {
      for (std::size_t i = begin; i < end; ++i) parents.push_back(i);
    }
    if (parents.empty()) {
      ball.radius_end.push_back(ball.elements.size());
      continue;
    }
    const std::size_t chunks = std::min<std::size_t>(workers, parents.size());
    std::vector<std::vector<Candidate>> produced(chunks);
    auto work = [&](std::size_t c) {
      const std::size_t lo = parents.size() * c / chunks;
      const std::size_t hi = parents.size() * (c + 1) / chunks;
      auto& out = produced[c];
      out.reserve((hi - lo) * generators.size());
      for (std::size_t k = lo; k < hi; ++k) {
        const std::size_t p = parents[k];
        for (std::size_t s = 0; s < generators.size(); ++s) {
          if (p == kNone) out.push_back({generators[s], kNone, s});
          else out.push_back({compose(ball.elements[p].value, generators[s]), p, s});
        }
      }
    };
    if (chunks == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t c = 0; c < chunks; ++c) pool.emplace_back(work, c);
      for (auto& t : pool) t.join();
    }
    std::vector<BallElement> layer;
    bool over = false;
    for (auto& chunk : produced) {
      for (auto& cand : chunk) {
        if (seen.count(cand.value)) continue;
        if (ball.elements.size() + layer.size() >= memory_budget) {
          over = true;
          break;
        }
        seen.insert(cand.value);
        layer.push_back({std::move(cand.value), r, cand.parent, cand.gen});
      }
      if (over) break;
    }
    if (over) {
      ball.truncated = true;
      break;
    }
    std::sort(layer.begin(), layer.end(),
              [](const BallElement& a, const BallElement& b) { return a.value.compare(b.value) < 0; });
    for (auto& e : layer) ball.elements.push_back(std::move(e));
    ball.radius_end.push_back(ball.elements.size());
  }
  return ball;
}

std::string to_string(DplusStatus s) {
  switch (s) {
    case DplusStatus::CertFound: return "CertFound";
    case DplusStatus::AllRefuted: return "AllRefuted";
    case DplusStatus::Mixed: return "Mixed";
    case DplusStatus::Unexplored: return "Unexplored";
  }
  return "Unexplored";
}

double GrowthRow::upper_bound_bits() const {
  if (n == 0) return std::nan("");
  return std::log2(static_cast<double>(ball_size)) / static_cast<double>(n);
}

GrowthTable ball_sizes(const GeneratingSet& sigma, std::size_t n_max, std::size_t memory_budget,
                       unsigned workers) {
  if (n_max < 1) throw Error(ErrorCode::Precondition, "n_max must be at least 1");
  Ball ball = grow_ball(sigma.symmetrized, n_max, true, memory_budget, workers);
  GrowthTable t;
  t.truncated = ball.truncated;
  for (std::size_t n = 0; n < ball.radius_end.size(); ++n) t.rows.push_back({n, ball.radius_end[n]});
  return t;
}

bool entropy_lower_le_upper(std::size_t d, std::size_t n, std::size_t ball_size) {
  mpz_class lhs, rhs;
  mpz_ui_pow_ui(lhs.get_mpz_t(), 2, n);
  mpz_ui_pow_ui(rhs.get_mpz_t(), ball_size, d);
  return lhs <= rhs;
}

bool doubling_bound_holds(std::size_t n_ball, std::size_t two_n_ball) {
  return mpz_class(two_n_ball) <= mpz_class(n_ball) * n_ball;
}

bool submultiplicative(const GrowthTable& table) {
  const auto& rows = table.rows;
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a; a + b < rows.size(); ++b)
      if (mpz_class(rows[a + b].ball_size) > mpz_class(rows[a].ball_size) * rows[b].ball_size) return false;
  return true;
}

double EntropyBounds::lower_bits() const {
  return lower_denominator ? 1.0 / static_cast<double>(*lower_denominator) : 0.0;
}

double EntropyBounds::best_upper_bits() const {
  double best = std::numeric_limits<double>::infinity();
  for (double u : upper_bits) best = std::min(best, u);
  return best;
}

EntropyBounds entropy_bounds(const GrowthTable& table, std::optional<std::size_t> dplus_upper_radius) {
  if (table.rows.empty()) throw Error(ErrorCode::Precondition, "empty growth table");
  EntropyBounds e;
  e.lower_denominator = dplus_upper_radius;
  for (const auto& row : table.rows) {
    if (row.n == 0) continue;
    e.upper_bits.push_back(row.upper_bound_bits());
    if (dplus_upper_radius && !entropy_lower_le_upper(*dplus_upper_radius, row.n, row.ball_size))
      e.lower_le_every_upper = false;
  }
  return e;
}

// --- d+ upper bound ----------------------------------------------------------

namespace {

// Places where one ratio contracts, in the certificate search order.
struct ContractingSet {
  std::vector<std::size_t> arch;
  std::vector<std::optional<mpq_class>> tadic;
  struct PAdic {
    mpz_class p;
    mpq_class min_val;
    mpq_class max_val;
  };
  std::vector<PAdic> padic;
  bool empty() const { return arch.empty() && tadic.empty() && padic.empty(); }
};

ContractingSet contracting_set(const RingElement& r, const std::vector<ArchimedeanPlace>& places,
                               const SearchBudget& budget) {
  ContractingSet s;
  const mpq_class third(1, 3);
  const RingPtr& ring = r.ring();
  if (ring->is_number_ring()) {
    for (const auto& p : places)
      if (abs_arch(r, p, budget.precision_bits).hi <= third) s.arch.push_back(p.index);
    if (ring->is_field()) {
      for (const auto& p : candidate_primes(r, budget.trial_division_bound)) {
        auto vals = newton_polygon_valuations(r, p);
        if (vals.back() > 0) s.padic.push_back({p, vals.front(), vals.back()});
      }
    }
    return s;
  }
  if (t_adic_order(r, mpq_class(0)) > 0) s.tadic.emplace_back(mpq_class(0));
  for (const auto& root : rational_roots(r.numerator(), budget.trial_division_bound))
    if (root != 0) s.tadic.emplace_back(root);
  if (t_adic_order(r, std::nullopt) > 0) s.tadic.emplace_back(std::nullopt);
  return s;
}

bool share_place(const ContractingSet& a, const ContractingSet& b, bool equal_ratios) {
  for (auto i : a.arch)
    if (std::find(b.arch.begin(), b.arch.end(), i) != b.arch.end()) return true;
  for (const auto& c : a.tadic)
    if (std::find(b.tadic.begin(), b.tadic.end(), c) != b.tadic.end()) return true;
  for (const auto& x : a.padic)
    for (const auto& y : b.padic)
      if (x.p == y.p && (equal_ratios ? x.max_val > 0 : (x.min_val > 0 && y.min_val > 0))) return true;
  return false;
}

}  // namespace

std::optional<DplusUpper> dplus_upper(const GeneratingSet& sigma, std::size_t n_max,
                                      const SearchBudget& budget, unsigned workers) {
  Ball ball = grow_ball(sigma.symmetrized, n_max, true, budget.memory_budget, workers);
  const RingPtr& ring = sigma.symmetrized.front().ring();
  const auto places = archimedean_places(ring);

  struct Info {
    std::size_t idx;
    RingElement fixed_point;
    const ContractingSet* places;
  };
  std::unordered_map<RingElement, ContractingSet, RingElementHash> by_ratio;
  std::vector<Info> usable;
  for (std::size_t i = 0; i < ball.elements.size(); ++i) {
    const AffineMap& h = ball.elements[i].value;
    if (h.is_translation()) continue;
    MapClass mc;
    try {
      mc = classify_map(h);
    } catch (const Error&) {
      continue;
    }
    auto it = by_ratio.find(h.ratio());
    if (it == by_ratio.end()) it = by_ratio.emplace(h.ratio(), contracting_set(h.ratio(), places, budget)).first;
    if (it->second.empty()) continue;
    usable.push_back({i, *mc.fixed_point, &it->second});
  }

  for (std::size_t n = 1; n <= ball.complete_radius(); ++n) {
    struct Pair {
      bool equal_ratio;
      std::size_t a, b;  // positions in `usable`
    };
    std::vector<Pair> pairs;
    for (std::size_t a = 0; a < usable.size(); ++a) {
      for (std::size_t b = a + 1; b < usable.size(); ++b) {
        const auto& ea = ball.elements[usable[a].idx];
        const auto& eb = ball.elements[usable[b].idx];
        if (std::max(ea.radius, eb.radius) != n) continue;
        if (usable[a].fixed_point == usable[b].fixed_point) continue;
        const bool eq = ea.value.ratio() == eb.value.ratio();
        if (!share_place(*usable[a].places, *usable[b].places, eq)) continue;
        pairs.push_back({eq, a, b});
      }
    }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const Pair& x, const Pair& y) { return x.equal_ratio && !y.equal_ratio; });
    for (const auto& pr : pairs) {
      const std::size_t ia = usable[pr.a].idx, ib = usable[pr.b].idx;
      const AffineMap& f = ball.elements[ia].value;
      const AffineMap& g = ball.elements[ib].value;
      if (auto cert = search_freeness_certificate(f, g, budget))
        return DplusUpper{n, f, g, ball.word(ia), ball.word(ib), std::move(*cert)};
    }
  }
  return std::nullopt;
}

// --- d+ lower bound ----------------------------------------------------------

namespace {

Word swap_letters(const Word& w) {
  std::vector<Letter> ls = w.letters();
  for (auto& l : ls) l.gen = 1 - l.gen;
  return Word(std::move(ls));
}

Word expand(const Word& w, std::size_t a_reps, std::size_t b_reps) {
  std::vector<std::size_t> gens;
  for (const Letter& l : w.letters()) gens.insert(gens.end(), l.gen == 0 ? a_reps : b_reps, l.gen);
  return Word::positive(gens);
}

}  // namespace

std::optional<Refutation> refute_pair(const AffineMap& f, const AffineMap& g, const SearchBudget& budget,
                                      const LowerOptions& options) {
  auto done = [&](std::string reason, RelationWitness w) -> std::optional<Refutation> {
    if (!verify_relation(w, f, g)) return std::nullopt;
    return Refutation{0, 0, 0, std::move(reason), std::move(w)};
  };
  if (f == g) return done("equal", {Word::positive({0}), Word::positive({1})});
  if (commute(f, g)) return done("commute", {Word::positive({0, 1}), Word::positive({1, 0})});
  if (g.is_translation()) {
    if (auto w = translation_pair_relation(f, g)) return done("translation", std::move(*w));
    return std::nullopt;
  }
  if (f.is_translation()) {
    if (auto w = translation_pair_relation(g, f)) return done("translation", {swap_letters(w->u), swap_letters(w->v)});
    return std::nullopt;
  }

  const std::size_t E = options.power_bound;
  const RingElement& r1 = f.ratio();
  const RingElement& r2 = g.ratio();
  std::vector<RingElement> p1;
  std::unordered_map<RingElement, std::size_t, RingElementHash> p2, p2inv;
  {
    RingElement a = r1, b = r2, bi = inv(r2);
    RingElement bacc = b, biacc = bi;
    for (std::size_t i = 1; i <= E; ++i) {
      p1.push_back(a);
      p2.emplace(bacc, i);
      p2inv.emplace(biacc, i);
      a = a * r1;
      bacc = bacc * b;
      biacc = biacc * bi;
    }
  }
  // r1^i r2^j = 1: f^i g^j and g^j f^i are translations, which commute.
  for (std::size_t i = 1; i <= E; ++i) {
    auto it = p2inv.find(p1[i - 1]);
    if (it == p2inv.end()) continue;
    const std::size_t j = it->second;
    std::vector<std::size_t> u, v;
    u.insert(u.end(), i, 0);
    u.insert(u.end(), 2 * j, 1);
    u.insert(u.end(), i, 0);
    v.insert(v.end(), j, 1);
    v.insert(v.end(), 2 * i, 0);
    v.insert(v.end(), j, 1);
    if (auto r = done("inverse-powers", {Word::positive(u), Word::positive(v)})) return r;
    break;
  }
  // r1^i = r2^j: search short relations between f^{ik} and g^{jk}.
  for (std::size_t i = 1; i <= E; ++i) {
    auto it = p2.find(p1[i - 1]);
    if (it == p2.end()) continue;
    const std::size_t j = it->second;
    for (std::size_t k = 1; k <= options.power_pair_reps; ++k) {
      AffineMap F = map_pow(f, static_cast<long>(i * k));
      AffineMap G = map_pow(g, static_cast<long>(j * k));
      std::optional<RelationWitness> w;
      try {
        w = find_relation(F, G, options.power_pair_len, budget.memory_budget);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::MemoryBudget) throw;
      }
      if (!w) continue;
      if (auto r = done("power-pair", {expand(w->u, i * k, j * k), expand(w->v, i * k, j * k)})) return r;
    }
    break;
  }
  try {
    if (auto w = find_relation(f, g, budget.relation_max_len, budget.memory_budget))
      return done("relation", std::move(*w));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::MemoryBudget) throw;
  }
  return std::nullopt;
}

DplusLower dplus_lower(const GeneratingSet& sigma, std::size_t n_probe, const SearchBudget& budget,
                       const LowerOptions& options, unsigned workers) {
  const auto& gens = options.symmetrize ? sigma.symmetrized : sigma.raw;
  Ball ball = grow_ball(gens, n_probe, options.symmetrize, budget.memory_budget, workers);
  DplusLower out;
  for (std::size_t i = 0; i < ball.elements.size(); ++i) {
    out.elements.push_back(ball.elements[i].value);
    out.words.push_back(ball.word(i));
  }
  const std::size_t top = std::min(n_probe, ball.complete_radius());
  for (std::size_t m = 1; m <= top; ++m) {
    const std::size_t end = ball.radius_end[m];
    const std::size_t layer_begin = ball.radius_end[m - 1];
    for (std::size_t b = layer_begin; b < end; ++b) {
      for (std::size_t a = 0; a < b; ++a) {
        const AffineMap& f = ball.elements[a].value;
        const AffineMap& g = ball.elements[b].value;
        auto r = refute_pair(f, g, budget, options);
        if (!r) {
          out.resisting = std::make_pair(f, g);
          out.resisting_radius = m;
          return out;
        }
        r->radius = m;
        r->first = a;
        r->second = b;
        out.log.push_back(std::move(*r));
      }
    }
    out.m = m;
  }
  return out;
}

}  // namespace affgrow
