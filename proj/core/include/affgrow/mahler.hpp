#ifndef AFFGROW_MAHLER_HPP_
#define AFFGROW_MAHLER_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affgrow/affine.hpp"
#include "affgrow/growth.hpp"
#include "affgrow/places.hpp"

namespace affgrow {

struct RootFactor {
  ArchimedeanPlace root;
  AbsEnclosure modulus;   // |lambda|
  AbsEnclosure factor;    // max(1, |lambda|)
};

struct MahlerResult {
  AbsEnclosure measure;          // prod max(1, |lambda_i|) with multiplicity
  AbsEnclosure numeric_measure;  // same, from root enclosures only
  AbsEnclosure abs_root_product; // prod |lambda_i|, should contain |pi(0)|
  std::vector<RootFactor> per_root;
  bool is_kronecker = false;
  std::size_t stripped_x_power = 0;  // X^k factor removed before measuring
};

// Certified enclosure of width <= 2^-precision_bits (unless flagged). For
// products of cyclotomics the measure is exactly [1, 1]; the numeric
// enclosure is kept alongside. A factor X^k is stripped first and recorded.
// Errors: NonMonic.
MahlerResult mahler_measure(const std::vector<mpz_class>& pi, int precision_bits = 64);

// Exact: pi is X^j times a product of cyclotomic polynomials.
bool is_kronecker(const std::vector<mpz_class>& pi);

// A = (x, 0), B = (x, 1).
std::pair<AffineMap, AffineMap> gamma_generators(const RingPtr& ring);

struct CtRelation {
  long p;
  long q;
  std::string identity;
  bool holds_by_powers;  // via map_pow
  bool holds_by_words;   // via eval_word on the expanded words
};

struct CtReport {
  long n;
  RingPtr ring;
  bool base_relation;  // A(y)^4 = B(y)^2 A(y) B(y), y = x^{n!}
  std::vector<CtRelation> verified_relations;  // sorted by (p, q)
  long dplus_lower_claim;                      // from the ratio argument: n
  // Direct refutation climbs; nullopt when not requested.
  std::optional<DplusLower> symmetrized_lower;
  std::optional<DplusLower> raw_lower;
  bool all_hold() const;
};

struct CtOptions {
  std::size_t max_degree = 18;
  bool run_lower = true;  // run dplus_lower with n_probe = n - 1
  SearchBudget budget{};
  unsigned workers = 1;
};

// Errors: Precondition (n < 1), DegreeBudget (3 n! > max_degree).
CtReport ct_family_verify(long n, const CtOptions& options = {});
// Same relations checked in a caller-chosen ring (negative controls).
std::vector<CtRelation> ct_relations_in(const RingPtr& ring, long n);

struct LehmerReport {
  MahlerResult mahler;
  double log_m_lo = 0;  // outward-rounded natural logs of the measure bounds
  double log_m_hi = 0;
  std::optional<std::size_t> implied_dplus_lower;  // min k with m_hi^k >= 2
  GrowthTable growth;
  EntropyBounds entropy;
  std::vector<std::pair<std::size_t, bool>> doubling_checks;  // (n, N_2n <= N_n^2)
  std::optional<DplusUpper> certificate;
  std::size_t certificate_radius_searched = 0;
  bool claim_consistent = true;  // no certificate below the implied bound
  bool polynomial_trend = false; // Kronecker case
};

struct LehmerOptions {
  std::size_t n_max = 8;
  std::size_t dplus_radius = 2;
  int precision_bits = 64;
  SearchBudget budget{};
  unsigned workers = 1;
};

// Errors: Precondition (constant term not +-1 or pi known reducible).
LehmerReport lehmer_experiment(const std::vector<mpz_class>& pi, const LehmerOptions& options = {});

// Smallest k >= 1 with hi^k >= 2, when lo > 1.
std::optional<std::size_t> implied_dplus_bound(const AbsEnclosure& measure);

}  // namespace affgrow

#endif  // AFFGROW_MAHLER_HPP_
