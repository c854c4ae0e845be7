#include "affgrow/mahler.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "affgrow/error.hpp"
#include "affgrow/rational.hpp"

namespace affgrow {

namespace {

AbsEnclosure modulus_from_disc(const ArchimedeanPlace& p, int bits) {
  mpq_class lo, hi;
  if (p.real || p.center.im == 0) {
    lo = hi = abs(p.center.re);
  } else {
    mpq_class s = norm_sq(p.center);
    lo = sqrt_lower(s, bits);
    hi = sqrt_upper(s, bits);
  }
  lo -= p.radius;
  hi += p.radius;
  if (lo < 0) lo = 0;
  return {lo, hi};
}

AbsEnclosure times(const AbsEnclosure& a, const AbsEnclosure& b) {
  return {a.lo * b.lo, a.hi * b.hi, a.budget_exhausted || b.budget_exhausted};
}

constexpr int kMaxRefineBits = 1 << 14;

}  // namespace

bool is_kronecker(const std::vector<mpz_class>& pi) {
  std::size_t low = 0;
  while (low < pi.size() && pi[low] == 0) ++low;
  if (low == pi.size()) throw Error(ErrorCode::EmptyModulus, "zero polynomial");
  QPoly r = QPoly::from_integers(std::vector<mpz_class>(pi.begin() + static_cast<long>(low), pi.end()));
  if (r.degree() <= 0) return true;
  const long bound = root_of_unity_search_bound(static_cast<std::size_t>(r.degree()));
  for (long k = 1; k <= bound && r.degree() > 0; ++k) {
    const QPoly xk = QPoly::monomial(1, static_cast<std::size_t>(k)) - QPoly::constant(1);
    for (QPoly g = gcd(r, xk); g.degree() > 0; g = gcd(r, xk)) r = r / g;
  }
  return r.degree() == 0;
}

MahlerResult mahler_measure(const std::vector<mpz_class>& pi, int precision_bits) {
  if (pi.empty() || pi.back() != 1) throw Error(ErrorCode::NonMonic, "Mahler measure needs a monic polynomial");
  MahlerResult out;
  std::size_t low = 0;
  while (pi[low] == 0) ++low;
  out.stripped_x_power = low;
  std::vector<mpz_class> core(pi.begin() + static_cast<long>(low), pi.end());
  out.is_kronecker = is_kronecker(core);
  if (core.size() == 1) {
    out.measure = out.numeric_measure = out.abs_root_product = {1, 1};
    return out;
  }

  std::vector<ArchimedeanPlace> roots = isolate_roots(core, precision_bits);
  const mpq_class target = pow2(-precision_bits);
  for (;;) {
    out.per_root.clear();
    AbsEnclosure m{1, 1}, prod{1, 1};
    int bits = precision_bits;
    for (const auto& r : roots) bits = std::max(bits, r.working_bits);
    for (const auto& r : roots) {
      AbsEnclosure mod = modulus_from_disc(r, bits + 16);
      AbsEnclosure fac{std::max(mpq_class(1), mod.lo), std::max(mpq_class(1), mod.hi)};
      for (int k = 0; k < r.multiplicity; ++k) {
        m = times(m, fac);
        prod = times(prod, mod);
      }
      out.per_root.push_back({r, mod, fac});
    }
    out.numeric_measure = m;
    out.abs_root_product = prod;
    if (m.width() <= target) break;
    if (bits >= kMaxRefineBits) {
      out.numeric_measure.budget_exhausted = true;
      break;
    }
    for (auto& r : roots) r = refine_place(r, r.working_bits * 2);
  }
  out.measure = out.is_kronecker ? AbsEnclosure{1, 1} : out.numeric_measure;
  return out;
}

std::pair<AffineMap, AffineMap> gamma_generators(const RingPtr& ring) {
  const RingElement x = RingElement::generator(ring);
  return {AffineMap(x, RingElement::zero(ring)), AffineMap(x, RingElement::one(ring))};
}

namespace {

long factorial(long n) {
  long f = 1;
  for (long k = 2; k <= n; ++k) f *= k;
  return f;
}

std::string power_text(const char* name, long e, long exp) {
  std::ostringstream s;
  s << name << "(x^" << e << ")^" << exp;
  return s.str();
}

}  // namespace

std::vector<CtRelation> ct_relations_in(const RingPtr& ring, long n) {
  const long nf = factorial(n);
  const RingElement x = RingElement::generator(ring);
  std::vector<CtRelation> out;
  for (long p = -n; p <= n; ++p) {
    if (p == 0) continue;
    for (long q = -n; q <= n; ++q) {
      if (q == 0) continue;
      const AffineMap a(pow(x, q), RingElement::zero(ring));
      const AffineMap b(pow(x, p), RingElement::one(ring));
      const long ea = nf / q, eb = nf / p;
      CtRelation rel;
      rel.p = p;
      rel.q = q;
      rel.identity = power_text("A", q, 4 * ea) + " = " + power_text("B", p, 2 * eb) + " " +
                     power_text("A", q, ea) + " " + power_text("B", p, eb);
      const AffineMap lhs = map_pow(a, 4 * ea);
      const AffineMap rhs = compose(compose(map_pow(b, 2 * eb), map_pow(a, ea)), map_pow(b, eb));
      rel.holds_by_powers = lhs == rhs;
      const Word u = Word::power(0, 4 * ea);
      const Word v = Word::power(1, 2 * eb) * Word::power(0, ea) * Word::power(1, eb);
      const std::vector<AffineMap> gens{a, b};
      rel.holds_by_words = u != v && eval_word(u, gens) == eval_word(v, gens);
      out.push_back(std::move(rel));
    }
  }
  return out;
}

bool CtReport::all_hold() const {
  if (!base_relation) return false;
  for (const auto& r : verified_relations)
    if (!r.holds_by_powers || !r.holds_by_words) return false;
  return true;
}

CtReport ct_family_verify(long n, const CtOptions& options) {
  if (n < 1) throw Error(ErrorCode::Precondition, "n must be at least 1");
  if (n > 6) throw Error(ErrorCode::DegreeBudget, "n! too large");
  const long nf = factorial(n);
  const std::size_t degree = static_cast<std::size_t>(3 * nf);
  if (degree > options.max_degree)
    throw Error(ErrorCode::DegreeBudget, "degree " + std::to_string(degree) + " exceeds budget " +
                                             std::to_string(options.max_degree));
  std::vector<mpz_class> coeffs(degree + 1, 0);
  coeffs[0] = 1;
  coeffs[static_cast<std::size_t>(nf)] = 1;
  coeffs[degree] = 1;
  CtReport rep;
  rep.n = n;
  rep.ring = number_ring(std::move(coeffs));
  rep.dplus_lower_claim = n;

  const RingElement y = pow(RingElement::generator(rep.ring), nf);
  const AffineMap A(y, RingElement::zero(rep.ring)), B(y, RingElement::one(rep.ring));
  rep.base_relation = map_pow(A, 4) == compose(compose(map_pow(B, 2), A), B);
  rep.verified_relations = ct_relations_in(rep.ring, n);

  if (options.run_lower) {
    auto [a, b] = gamma_generators(rep.ring);
    GeneratingSet sigma = GeneratingSet::from({a, b});
    LowerOptions lo;
    rep.symmetrized_lower = dplus_lower(sigma, static_cast<std::size_t>(n - 1), options.budget, lo, options.workers);
    lo.symmetrize = false;
    rep.raw_lower = dplus_lower(sigma, static_cast<std::size_t>(n - 1), options.budget, lo, options.workers);
  }
  return rep;
}

std::optional<std::size_t> implied_dplus_bound(const AbsEnclosure& measure) {
  if (measure.lo <= 1) return std::nullopt;
  mpq_class acc = measure.hi;
  for (std::size_t k = 1; k <= 100000; ++k) {
    if (acc >= 2) return k;
    acc *= measure.hi;
  }
  return std::nullopt;
}

LehmerReport lehmer_experiment(const std::vector<mpz_class>& pi, const LehmerOptions& options) {
  if (pi.empty()) throw Error(ErrorCode::EmptyModulus, "empty polynomial");
  if (pi.front() == 0) throw Error(ErrorCode::ZeroConstantTerm, "pi(0) = 0");
  if (pi.front() != 1 && pi.front() != -1) throw Error(ErrorCode::Precondition, "pi(0) must be +-1");
  RingPtr ring = number_ring(pi);
  if (ring->irreducible_hint() == Tristate::No) throw Error(ErrorCode::Precondition, "pi is reducible");

  LehmerReport rep;
  rep.mahler = mahler_measure(pi, options.precision_bits);
  const double inf = std::numeric_limits<double>::infinity();
  rep.log_m_lo = std::nextafter(std::nextafter(std::log(to_double(rep.mahler.measure.lo)), -inf), -inf);
  rep.log_m_hi = std::nextafter(std::nextafter(std::log(to_double(rep.mahler.measure.hi)), inf), inf);
  if (rep.log_m_lo < 0) rep.log_m_lo = 0;
  rep.implied_dplus_lower = implied_dplus_bound(rep.mahler.measure);

  auto [a, b] = gamma_generators(ring);
  GeneratingSet sigma = GeneratingSet::from({a, b});
  rep.growth = ball_sizes(sigma, options.n_max, options.budget.memory_budget, options.workers);
  rep.certificate = dplus_upper(sigma, options.dplus_radius, options.budget, options.workers);
  rep.certificate_radius_searched = options.dplus_radius;
  std::optional<std::size_t> radius;
  if (rep.certificate) radius = rep.certificate->n;
  rep.entropy = entropy_bounds(rep.growth, radius);
  const auto& rows = rep.growth.rows;
  for (std::size_t n = 1; 2 * n < rows.size(); ++n)
    rep.doubling_checks.emplace_back(n, doubling_bound_holds(rows[n].ball_size, rows[2 * n].ball_size));
  if (rep.certificate && rep.implied_dplus_lower && rep.certificate->n < *rep.implied_dplus_lower)
    rep.claim_consistent = false;
  if (rep.mahler.is_kronecker) {
    const mpz_class cap = mpz_class(1) << (ring->degree() + 1);
    rep.polynomial_trend = true;
    for (std::size_t n = 2; 2 * n < rows.size(); ++n)
      if (mpz_class(rows[2 * n].ball_size) > cap * rows[n].ball_size) rep.polynomial_trend = false;
  }
  return rep;
}

}  // namespace affgrow
