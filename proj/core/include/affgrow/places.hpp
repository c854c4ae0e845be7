#ifndef AFFGROW_PLACES_HPP_
#define AFFGROW_PLACES_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "affgrow/poly.hpp"
#include "affgrow/ring.hpp"

namespace affgrow {

struct ComplexQ {
  mpq_class re;
  mpq_class im;
  friend bool operator==(const ComplexQ&, const ComplexQ&) = default;
};

ComplexQ operator+(const ComplexQ& a, const ComplexQ& b);
ComplexQ operator-(const ComplexQ& a, const ComplexQ& b);
ComplexQ operator*(const ComplexQ& a, const ComplexQ& b);
mpq_class norm_sq(const ComplexQ& z);

// Certified enclosure of an absolute value: the true value lies in [lo, hi].
struct AbsEnclosure {
  mpq_class lo;
  mpq_class hi;
  bool budget_exhausted = false;

  mpq_class width() const { return hi - lo; }
  bool contains(const mpq_class& v) const { return lo <= v && v <= hi; }
  bool within(const AbsEnclosure& outer) const { return outer.lo <= lo && hi <= outer.hi; }
};

// A complex root lambda of the modulus, given by a closed disc that contains
// exactly one root of the squarefree part; evaluation x -> lambda is a ring
// homomorphism Q[x]/(pi) -> C even when pi is reducible.
struct ArchimedeanPlace {
  std::size_t index = 0;
  ComplexQ center;
  mpq_class radius;
  bool real = false;                      // the root is real (center on the axis)
  std::optional<std::size_t> conjugate;   // index of the complex-conjugate root
  int multiplicity = 1;                   // multiplicity of the root in pi
  int working_bits = 0;                   // precision the disc was certified at
  std::vector<mpz_class> modulus;         // pi, ascending
  QPoly squarefree;                       // monic squarefree part of pi

  // Axis-aligned box [re-r, re+r] x [im-r, im+r] (im-interval [0,0] if real).
  mpq_class box_re_lo() const { return center.re - radius; }
  mpq_class box_re_hi() const { return center.re + radius; }
  mpq_class box_im_lo() const { return real ? mpq_class(0) : mpq_class(center.im - radius); }
  mpq_class box_im_hi() const { return real ? mpq_class(0) : mpq_class(center.im + radius); }
};

struct PAdicPlace {
  mpz_class prime;
  mpq_class slope;  // valuation of the chosen conjugate block
};

struct TAdicPlace {
  std::optional<mpq_class> center;  // nullopt: the place at infinity
};

using Place = std::variant<ArchimedeanPlace, PAdicPlace, TAdicPlace>;

std::string describe(const Place& place);

// Certified isolation of the distinct complex roots of pi, ordered by the
// centers of the first certified isolation (real part, then imaginary
// part). Every disc has radius <= 2^-precision_bits.
std::vector<ArchimedeanPlace> isolate_roots(const std::vector<mpz_class>& pi, int precision_bits);
std::vector<ArchimedeanPlace> archimedean_places(const RingPtr& ring, int precision_bits = 64);

// Isolations are memoized process-wide; this drops the memo (benchmarks).
void clear_root_cache();

// Same root, disc recertified at a higher working precision.
ArchimedeanPlace refine_place(const ArchimedeanPlace& place, int working_bits);

// |sigma(alpha)| at an archimedean place, refined until the width is at most
// 2^-precision_bits or the refinement budget runs out (flagged). Enclosures
// for a fixed place are nested: a larger precision_bits returns a subset.
// Errors: PlaceRingMismatch.
AbsEnclosure abs_arch(const RingElement& alpha, const ArchimedeanPlace& place, int precision_bits);

// The d valuations (with multiplicity, ascending) of the conjugates of alpha
// at the places above p: negated Newton-polygon slopes of charpoly(alpha).
std::vector<mpq_class> newton_polygon_valuations(const RingElement& alpha, const mpz_class& p);

// Order of a rational function at t = center (nullopt: at infinity).
long t_adic_order(const RingElement& f, const std::optional<mpq_class>& center);

enum class ContractMode { StrictNonArch, ArchThird };

struct ContractingPlaceSearch {
  std::optional<Place> place;
  bool factorization_budget_hit = false;  // NormFactorizationBudget
};

ContractingPlaceSearch find_contracting_place(const RingElement& alpha, ContractMode mode,
                                              long trial_division_bound = 1000000,
                                              int precision_bits = 64);

struct Contraction {
  long exponent;         // n0
  ArchimedeanPlace place;
  int sign;              // alpha^(sign * n0) contracts
  AbsEnclosure enclosure;
};

// Smallest n0 <= n_max and sign with |sigma(alpha^(sign n0))| <= 1/3 at some
// archimedean place (sign -1 tried first). Errors: Precondition when alpha is
// a root of unity.
std::optional<Contraction> contraction_exponent(const RingElement& alpha, long n_max,
                                                int precision_bits = 64);

// Primes dividing |n| by trial division up to bound; `complete` is false
// when an unfactored cofactor remains.
struct TrialFactorization {
  std::vector<mpz_class> primes;
  bool complete = true;
};
TrialFactorization trial_factor(const mpz_class& n, long bound);

// Primes p at which some conjugate of alpha can have nonzero valuation:
// divisors of the norm's numerator and of the denominators of the middle
// charpoly coefficients. Sorted, unique.
std::vector<mpz_class> candidate_primes(const RingElement& alpha, long bound, bool* complete = nullptr);

// Rational roots of f, ascending (rational root theorem over trial-factored
// divisors).
std::vector<mpq_class> rational_roots(const QPoly& f, long bound, bool* complete = nullptr);

}  // namespace affgrow

#endif  // AFFGROW_PLACES_HPP_
