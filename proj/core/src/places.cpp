#include "affgrow/places.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "affgrow/error.hpp"
#include "affgrow/rational.hpp"

namespace affgrow {

ComplexQ operator+(const ComplexQ& a, const ComplexQ& b) { return {a.re + b.re, a.im + b.im}; }
ComplexQ operator-(const ComplexQ& a, const ComplexQ& b) { return {a.re - b.re, a.im - b.im}; }
ComplexQ operator*(const ComplexQ& a, const ComplexQ& b) {
  if (a.im == 0 && b.im == 0) return {a.re * b.re, 0};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
mpq_class norm_sq(const ComplexQ& z) { return z.re * z.re + z.im * z.im; }

std::string describe(const Place& place) {
  std::ostringstream out;
  if (const auto* a = std::get_if<ArchimedeanPlace>(&place)) {
    out << "archimedean#" << a->index << (a->real ? " (real root ~ " : " (root ~ ")
        << to_double(a->center.re);
    if (!a->real) out << (a->center.im < 0 ? " - " : " + ") << std::fabs(to_double(a->center.im)) << "i";
    out << ")";
  } else if (const auto* p = std::get_if<PAdicPlace>(&place)) {
    out << p->prime.get_str() << "-adic (valuation " << to_string(p->slope) << ")";
  } else {
    const auto& t = std::get<TAdicPlace>(place);
    out << "t-adic at " << (t.center ? to_string(*t.center) : std::string("infinity"));
  }
  return out.str();
}

// --- root isolation ---------------------------------------------------------

namespace {

using CLD = std::complex<long double>;

ComplexQ round_c(const ComplexQ& z, int bits) {
  return {round_dyadic(z.re, bits), round_dyadic(z.im, bits)};
}

ComplexQ eval_c(const QPoly& f, const ComplexQ& z) {
  ComplexQ acc{0, 0};
  const auto& c = f.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * z;
    acc.re += c[k];
  }
  return acc;
}

// a / b rounded to `bits`; b nonzero.
ComplexQ div_round(const ComplexQ& a, const ComplexQ& b, int bits) {
  mpq_class den = norm_sq(b);
  ComplexQ q{(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
  return round_c(q, bits);
}

// Ehrlich-Aberth in long double; only a starting point for the exact stage.
std::vector<CLD> aberth_float(const QPoly& f) {
  const std::size_t n = static_cast<std::size_t>(f.degree());
  std::vector<long double> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = static_cast<long double>(f.coeffs()[i].get_d());
  long double bound = 0;
  for (std::size_t i = 0; i < n; ++i)
    bound = std::max(bound, std::pow(std::fabs(c[i]), 1.0L / static_cast<long double>(n - i)));
  const long double radius = std::max<long double>(2 * bound, 0.5L);
  std::vector<CLD> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    long double ang = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                          static_cast<long double>(n) + 0.4L;
    z[k] = std::polar(radius, ang);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      CLD p = c[n], dp = 0;
      for (std::size_t i = n; i-- > 0;) {
        dp = dp * z[k] + p;
        p = p * z[k] + c[i];
      }
      if (p == CLD(0)) continue;
      CLD ratio = p / dp;
      CLD s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) s += CLD(1) / (z[k] - z[j]);
      CLD w = ratio / (CLD(1) - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / std::max<long double>(1, std::abs(z[k])));
    }
    if (worst < 1e-19L) break;
  }
  return z;
}

struct Disc {
  ComplexQ center;
  mpq_class radius;
  bool real = false;
};

// Dyadic Aberth refinement at `bits`, starting from `z`.
void aberth_exact(const QPoly& f, std::vector<ComplexQ>& z, int bits) {
  const QPoly fp = f.derivative();
  const std::size_t n = z.size();
  const mpq_class tol = pow2(-2L * bits - 4);
  for (auto& zi : z) zi = round_c(zi, bits);
  for (int iter = 0; iter < 64; ++iter) {
    bool done = true;
    for (std::size_t i = 0; i < n; ++i) {
      ComplexQ F = eval_c(f, z[i]);
      if (F.re == 0 && F.im == 0) continue;
      ComplexQ D = eval_c(fp, z[i]);
      if (D.re == 0 && D.im == 0) {
        done = false;
        continue;
      }
      ComplexQ w = div_round(F, D, 2 * bits);
      ComplexQ s{0, 0};
      bool clash = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        ComplexQ diff = z[i] - z[j];
        if (diff.re == 0 && diff.im == 0) {
          clash = true;
          break;
        }
        s = s + div_round(ComplexQ{1, 0}, diff, 2 * bits);
      }
      ComplexQ delta = w;
      if (!clash) {
        ComplexQ den = ComplexQ{1, 0} - w * s;
        if (den.re != 0 || den.im != 0) delta = div_round(w, den, 2 * bits);
      }
      ComplexQ next = round_c(z[i] - delta, bits);
      if (norm_sq(delta) > tol) done = false;
      z[i] = std::move(next);
    }
    if (done) break;
  }
}

// Forces exact conjugate symmetry: near-real centers go onto the axis,
// the rest are paired with their nearest conjugate partner.
void symmetrize(std::vector<ComplexQ>& z, int bits) {
  const mpq_class eps = pow2(-(bits / 2));
  std::vector<bool> used(z.size(), false);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (abs(z[i].im) <= eps) {
      z[i].im = 0;
      used[i] = true;
    }
  }
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (used[i] || z[i].im < 0) continue;
    std::optional<std::size_t> best;
    mpq_class best_d;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (used[j] || j == i || z[j].im >= 0) continue;
      mpq_class d = norm_sq(ComplexQ{z[j].re - z[i].re, z[j].im + z[i].im});
      if (!best || d < best_d) {
        best = j;
        best_d = d;
      }
    }
    if (!best) continue;
    used[i] = used[*best] = true;
    z[*best] = ComplexQ{z[i].re, -z[i].im};
  }
}

// Weierstrass inclusion: with W_i = f(z_i) / prod_{j!=i}(z_i - z_j) for monic
// f of degree n, the discs |z - z_i| <= n |W_i| cover the roots and every
// connected component of k discs holds exactly k roots. Pairwise disjoint
// discs therefore isolate one root each.
std::optional<std::vector<Disc>> certify(const QPoly& f, const std::vector<ComplexQ>& z, int bits) {
  const std::size_t n = z.size();
  std::vector<Disc> out(n);
  const int sqrt_bits = 2 * bits + 8;
  for (std::size_t i = 0; i < n; ++i) {
    ComplexQ F = eval_c(f, z[i]);
    out[i].center = z[i];
    out[i].real = (z[i].im == 0);
    if (F.re == 0 && F.im == 0) {
      out[i].radius = 0;
      continue;
    }
    ComplexQ prod{1, 0};
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      prod = prod * (z[i] - z[j]);
    }
    mpq_class pn = norm_sq(prod);
    if (pn == 0) return std::nullopt;
    mpq_class w2 = norm_sq(F) / pn;
    out[i].radius = sqrt_upper(w2, sqrt_bits) * static_cast<unsigned long>(n);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      mpq_class r = out[i].radius + out[j].radius;
      if (r * r >= norm_sq(out[i].center - out[j].center)) return std::nullopt;
    }
  }
  return out;
}

struct RootCache {
  std::mutex mu;
  std::map<std::pair<std::string, int>, std::vector<Disc>> discs;
  std::map<std::string, std::vector<ComplexQ>> seeds;
};

RootCache& cache() {
  static RootCache c;
  return c;
}

}  // namespace

void clear_root_cache() {
  std::lock_guard<std::mutex> lock(cache().mu);
  cache().discs.clear();
  cache().seeds.clear();
}

namespace {

std::string poly_key(const QPoly& f) {
  std::string key;
  for (const auto& c : f.coeffs()) key += to_string(c) + ",";
  return key;
}

std::vector<ComplexQ> float_seeds(const QPoly& f) {
  const std::string key = poly_key(f);
  {
    std::lock_guard<std::mutex> lock(cache().mu);
    auto it = cache().seeds.find(key);
    if (it != cache().seeds.end()) return it->second;
  }
  std::vector<ComplexQ> z;
  for (const CLD& c : aberth_float(f))
    z.push_back({mpq_class(static_cast<double>(c.real())), mpq_class(static_cast<double>(c.imag()))});
  std::lock_guard<std::mutex> lock(cache().mu);
  cache().seeds.emplace(key, z);
  return z;
}

// Isolating discs of a monic squarefree f at working precision `bits`.
std::optional<std::vector<Disc>> isolate_at(const QPoly& f, int bits) {
  const auto key = std::make_pair(poly_key(f), bits);
  {
    std::lock_guard<std::mutex> lock(cache().mu);
    auto it = cache().discs.find(key);
    if (it != cache().discs.end()) return it->second;
  }
  std::vector<ComplexQ> z = float_seeds(f);
  aberth_exact(f, z, bits);
  symmetrize(z, bits);
  auto discs = certify(f, z, bits);
  if (!discs) return std::nullopt;
  std::lock_guard<std::mutex> lock(cache().mu);
  cache().discs.emplace(key, *discs);
  return discs;
}

constexpr int kBaseBits = 128;
constexpr int kMaxBits = 1 << 15;

bool discs_meet(const ComplexQ& c1, const mpq_class& r1, const ComplexQ& c2, const mpq_class& r2) {
  mpq_class r = r1 + r2;
  return norm_sq(c1 - c2) <= r * r;
}

std::vector<ArchimedeanPlace> base_places(const std::vector<mpz_class>& pi) {
  QPoly full = QPoly::from_integers(pi);
  if (full.degree() < 1) return {};
  auto yun = squarefree_factorization(full);
  QPoly sq = QPoly::constant(1);
  for (const auto& [g, k] : yun) sq = sq * g;
  sq = sq.monic();

  std::vector<Disc> discs;
  int bits = kBaseBits;
  for (;; bits *= 2) {
    if (bits > kMaxBits) throw Error(ErrorCode::Precondition, "root isolation did not certify");
    if (auto d = isolate_at(sq, bits)) {
      discs = std::move(*d);
      break;
    }
  }
  std::vector<std::size_t> order(discs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    int c = cmp(discs[a].center.re, discs[b].center.re);
    if (c != 0) return c < 0;
    return discs[a].center.im < discs[b].center.im;
  });

  std::vector<ArchimedeanPlace> places;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Disc& d = discs[order[k]];
    ArchimedeanPlace p;
    p.index = k;
    p.center = d.center;
    p.radius = d.radius;
    p.real = d.real;
    p.working_bits = bits;
    p.modulus = pi;
    p.squarefree = sq;
    places.push_back(std::move(p));
  }
  for (auto& p : places) {
    if (p.real) continue;
    for (const auto& q : places) {
      if (q.index != p.index && q.center.re == p.center.re && q.center.im == -p.center.im) {
        p.conjugate = q.index;
        break;
      }
    }
  }
  // Multiplicities: the Yun factor vanishing at each root.
  if (yun.size() == 1) {
    for (auto& p : places) p.multiplicity = yun.front().second;
  } else {
    for (auto& p : places) {
      int found = 0;
      for (int round = 0; round < 8 && found == 0; ++round) {
        ArchimedeanPlace cur = round == 0 ? p : refine_place(p, p.working_bits << round);
        std::vector<int> candidates;
        for (const auto& [g, k] : yun) {
          // |g(lambda)| > 0 is certified when the Taylor bound excludes 0.
          ComplexQ v = eval_c(g, cur.center);
          mpq_class bound = 0, rpow = 1;
          // |g(z) - g(c)| <= sum_j |g^(j)(c)/j!| r^j
          QPoly der = g;
          mpq_class fact = 1;
          for (long j = 1; j <= g.degree(); ++j) {
            der = der.derivative();
            fact *= j;
            rpow *= cur.radius;
            ComplexQ dj = eval_c(der, cur.center);
            bound += sqrt_upper(norm_sq(dj), cur.working_bits + 8) / fact * rpow;
          }
          mpq_class vlo = sqrt_lower(norm_sq(v), cur.working_bits + 8);
          if (vlo <= bound) candidates.push_back(k);
        }
        if (candidates.size() == 1) found = candidates.front();
      }
      if (found == 0) throw Error(ErrorCode::Precondition, "could not attribute a root multiplicity");
      p.multiplicity = found;
    }
  }
  return places;
}

}  // namespace

ArchimedeanPlace refine_place(const ArchimedeanPlace& place, int working_bits) {
  for (int bits = std::max(working_bits, place.working_bits); bits <= kMaxBits; bits *= 2) {
    auto discs = isolate_at(place.squarefree, bits);
    if (!discs) continue;
    std::optional<std::size_t> hit;
    bool unique = true;
    for (std::size_t j = 0; j < discs->size(); ++j) {
      if (!discs_meet((*discs)[j].center, (*discs)[j].radius, place.center, place.radius)) continue;
      if (hit) unique = false;
      hit = j;
    }
    if (!hit || !unique) continue;
    ArchimedeanPlace out = place;
    out.center = (*discs)[*hit].center;
    out.radius = (*discs)[*hit].radius;
    out.working_bits = bits;
    if (out.real) out.center.im = 0;
    return out;
  }
  return place;
}

std::vector<ArchimedeanPlace> isolate_roots(const std::vector<mpz_class>& pi, int precision_bits) {
  std::vector<ArchimedeanPlace> places = base_places(pi);
  const mpq_class target = pow2(-precision_bits);
  for (auto& p : places) {
    while (p.radius > target && p.working_bits < kMaxBits) {
      ArchimedeanPlace next = refine_place(p, p.working_bits * 2);
      if (next.working_bits == p.working_bits) break;
      p = std::move(next);
    }
  }
  return places;
}

std::vector<ArchimedeanPlace> archimedean_places(const RingPtr& ring, int precision_bits) {
  if (!ring->is_number_ring()) return {};
  return isolate_roots(ring->modulus(), precision_bits);
}

// --- absolute values ----------------------------------------------------------

namespace {

// One-shot enclosure of |g(lambda)| from the place's current disc.
AbsEnclosure enclosure_at(const QPoly& g, const ArchimedeanPlace& place, int precision_bits) {
  if (g.is_zero()) return {0, 0};
  if (g.degree() == 0) {
    mpq_class v = abs(g.coeffs()[0]);
    return {v, v};
  }
  const int sbits = std::max(place.working_bits, precision_bits) + 16;
  const std::size_t n = static_cast<std::size_t>(g.degree());
  std::vector<ComplexQ> t(n + 1);
  for (std::size_t i = 0; i <= n; ++i) t[i] = {g.coeffs()[i], 0};
  // Taylor shift: t[k] becomes g^(k)(c)/k!.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = n; j-- > k;) t[j] = t[j] + place.center * t[j + 1];

  auto modulus_bounds = [&](const ComplexQ& z) -> std::pair<mpq_class, mpq_class> {
    if (z.im == 0) return {abs(z.re), abs(z.re)};
    if (z.re == 0) return {abs(z.im), abs(z.im)};
    mpq_class s = norm_sq(z);
    return {sqrt_lower(s, sbits), sqrt_upper(s, sbits)};
  };
  mpq_class err = 0, rpow = 1;
  if (place.radius != 0) {
    for (std::size_t j = 1; j <= n; ++j) {
      rpow *= place.radius;
      err += modulus_bounds(t[j]).second * rpow;
    }
  }
  auto [lo, hi] = modulus_bounds(t[0]);
  lo -= err;
  hi += err;
  if (lo < 0) lo = 0;
  return {lo, hi};
}

AbsEnclosure intersect(const AbsEnclosure& a, const AbsEnclosure& b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi), false};
}

}  // namespace

AbsEnclosure abs_arch(const RingElement& alpha, const ArchimedeanPlace& place, int precision_bits) {
  if (!alpha.ring()->is_number_ring() || alpha.ring()->modulus() != place.modulus)
    throw Error(ErrorCode::PlaceRingMismatch, "place belongs to a different modulus");
  const QPoly g = alpha.lift();
  const mpq_class target = pow2(-precision_bits);
  ArchimedeanPlace cur = place;
  AbsEnclosure enc = enclosure_at(g, cur, precision_bits);
  while (enc.width() > target) {
    if (cur.working_bits >= kMaxBits) {
      enc.budget_exhausted = true;
      break;
    }
    ArchimedeanPlace next = refine_place(cur, cur.working_bits * 2);
    if (next.working_bits == cur.working_bits) {
      enc.budget_exhausted = true;
      break;
    }
    cur = std::move(next);
    enc = intersect(enc, enclosure_at(g, cur, precision_bits));
  }
  return enc;
}

// --- non-archimedean ------------------------------------------------------------

std::vector<mpq_class> newton_polygon_valuations(const RingElement& alpha, const mpz_class& p) {
  if (!alpha.ring()->is_number_ring())
    throw Error(ErrorCode::FunctionFieldUnsupported, "Newton polygons over Q(t)");
  if (!alpha.ring()->is_field())
    throw Error(ErrorCode::RequiresField, alpha.ring()->describe() + " is not known to be a field");
  if (alpha.is_zero()) throw Error(ErrorCode::ZeroInput, "valuation of zero");
  CharPoly cp = charpoly(alpha);
  std::vector<std::pair<long, long>> pts;  // (i, v_p(c_i))
  for (std::size_t i = 0; i < cp.size(); ++i)
    if (cp[i] != 0) pts.emplace_back(static_cast<long>(i), valuation(cp[i], p));
  // Lower convex hull (monotone chain).
  std::vector<std::pair<long, long>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // drop b if it lies on or above segment a -> pt
      const long cross = (b.first - a.first) * (pt.second - a.second) -
                         (b.second - a.second) * (pt.first - a.first);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    hull.push_back(pt);
  }
  std::vector<mpq_class> vals;
  for (std::size_t k = 1; k < hull.size(); ++k) {
    const long len = hull[k].first - hull[k - 1].first;
    mpq_class slope(hull[k].second - hull[k - 1].second, len);
    slope.canonicalize();
    for (long i = 0; i < len; ++i) vals.push_back(-slope);
  }
  std::sort(vals.begin(), vals.end());
  return vals;
}

long t_adic_order(const RingElement& f, const std::optional<mpq_class>& center) {
  if (f.ring()->is_number_ring())
    throw Error(ErrorCode::Precondition, "t-adic order needs the function field");
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "order of zero");
  if (!center) return f.denominator().degree() - f.numerator().degree();
  const QPoly lin({-*center, 1});
  auto order = [&](QPoly p) {
    long k = 0;
    for (;;) {
      auto [q, r] = divmod(p, lin);
      if (!r.is_zero()) return k;
      p = std::move(q);
      ++k;
    }
  };
  return order(f.numerator()) - order(f.denominator());
}

TrialFactorization trial_factor(const mpz_class& n, long bound) {
  TrialFactorization out;
  mpz_class m = n < 0 ? mpz_class(-n) : n;
  if (m <= 1) return out;
  auto take = [&](unsigned long p) {
    if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) return;
    out.primes.emplace_back(p);
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
  };
  take(2);
  unsigned long p = 3;
  for (; static_cast<long>(p) <= bound && m > 1; p += 2) {
    if (mpz_class(p) * p > m) break;
    take(p);
  }
  if (m > 1) {
    if (mpz_class(p) * p > m || m <= mpz_class(bound) * bound) out.primes.push_back(m);
    else out.complete = false;
  }
  std::sort(out.primes.begin(), out.primes.end());
  return out;
}

std::vector<mpq_class> rational_roots(const QPoly& f, long bound, bool* complete) {
  if (complete) *complete = true;
  std::vector<mpq_class> roots;
  if (f.degree() < 1) return roots;
  std::vector<mpz_class> z = primitive_integer_form(f);
  std::size_t low = 0;
  while (z[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (low + 1 == z.size()) return roots;
  auto divisors = [&](const mpz_class& n) {
    std::vector<mpz_class> ds{1};
    TrialFactorization tf = trial_factor(n, bound);
    if (!tf.complete && complete) *complete = false;
    mpz_class m = n < 0 ? mpz_class(-n) : n;
    for (const auto& p : tf.primes) {
      std::size_t cur = ds.size();
      mpz_class pk = 1;
      while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        pk *= p;
        for (std::size_t i = 0; i < cur; ++i) ds.push_back(ds[i] * pk);
      }
    }
    return ds;
  };
  const QPoly g(std::vector<mpq_class>(f.coeffs().begin() + static_cast<long>(low), f.coeffs().end()));
  for (const auto& num : divisors(z[low]))
    for (const auto& den : divisors(z.back()))
      for (int s : {1, -1}) {
        mpq_class r(num * s, den);
        r.canonicalize();
        if (g.eval(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<mpz_class> candidate_primes(const RingElement& alpha, long bound, bool* complete) {
  CharPoly cp = charpoly(alpha);
  std::vector<mpz_class> primes;
  bool ok = true;
  auto collect = [&](const mpz_class& n) {
    TrialFactorization tf = trial_factor(n, bound);
    if (!tf.complete) ok = false;
    primes.insert(primes.end(), tf.primes.begin(), tf.primes.end());
  };
  collect(cp[0].get_num());
  for (std::size_t i = 1; i + 1 < cp.size(); ++i) collect(cp[i].get_den());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  if (complete) *complete = ok;
  return primes;
}

ContractingPlaceSearch find_contracting_place(const RingElement& alpha, ContractMode mode,
                                              long trial_division_bound, int precision_bits) {
  if (alpha.is_zero()) throw Error(ErrorCode::ZeroInput, "contracting place for zero");
  ContractingPlaceSearch out;
  const RingPtr& ring = alpha.ring();
  if (mode == ContractMode::ArchThird) {
    if (!ring->is_number_ring()) return out;
    const mpq_class third(1, 3);
    for (const auto& place : archimedean_places(ring)) {
      AbsEnclosure e = abs_arch(alpha, place, precision_bits);
      if (e.hi <= third) {
        out.place = place;
        return out;
      }
    }
    return out;
  }
  if (!ring->is_number_ring()) {
    bool complete = true;
    if (t_adic_order(alpha, mpq_class(0)) > 0) {
      out.place = TAdicPlace{mpq_class(0)};
      return out;
    }
    for (const auto& r : rational_roots(alpha.numerator(), trial_division_bound, &complete)) {
      if (r == 0) continue;
      out.place = TAdicPlace{r};
      return out;
    }
    if (t_adic_order(alpha, std::nullopt) > 0) {
      out.place = TAdicPlace{std::nullopt};
      return out;
    }
    out.factorization_budget_hit = !complete;
    return out;
  }
  bool complete = true;
  const auto primes = candidate_primes(alpha, trial_division_bound, &complete);
  out.factorization_budget_hit = !complete;
  for (const auto& p : primes) {
    auto vals = newton_polygon_valuations(alpha, p);
    if (!vals.empty() && vals.back() > 0) {
      out.place = PAdicPlace{p, vals.back()};
      return out;
    }
  }
  return out;
}

std::optional<Contraction> contraction_exponent(const RingElement& alpha, long n_max,
                                                int precision_bits) {
  const RingPtr& ring = alpha.ring();
  if (!ring->is_number_ring())
    throw Error(ErrorCode::FunctionFieldUnsupported, "archimedean contraction over Q(t)");
  if (is_root_of_unity(alpha))
    throw Error(ErrorCode::Precondition, alpha.to_string() + " is a root of unity");
  const auto places = archimedean_places(ring);
  const mpq_class third(1, 3);
  const RingElement alpha_inv = inv(alpha);
  RingElement up = RingElement::one(ring), down = RingElement::one(ring);
  for (long n = 1; n <= n_max; ++n) {
    up = up * alpha;
    down = down * alpha_inv;
    for (int sign : {-1, 1}) {
      const RingElement& beta = sign < 0 ? down : up;
      for (const auto& place : places) {
        AbsEnclosure e = abs_arch(beta, place, precision_bits);
        if (e.hi <= third) return Contraction{n, place, sign, e};
      }
    }
  }
  return std::nullopt;
}

}  // namespace affgrow
