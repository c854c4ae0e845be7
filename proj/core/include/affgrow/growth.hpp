#ifndef AFFGROW_GROWTH_HPP_
#define AFFGROW_GROWTH_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "affgrow/affine.hpp"
#include "affgrow/freeness.hpp"

namespace affgrow {

// raw as given; symmetrized = raw, inverses and the identity, deduplicated
// and sorted by AffineMap::compare (so independent of input order).
struct GeneratingSet {
  std::vector<AffineMap> raw;
  std::vector<AffineMap> symmetrized;

  static GeneratingSet from(const std::vector<AffineMap>& raw);
  // Names for the symmetrized list: "e", raw names, and "name^-1".
  std::vector<std::string> symmetrized_names(const std::vector<std::string>& raw_names) const;
};

struct BallElement {
  AffineMap value;
  std::size_t radius;
  std::size_t parent;  // npos for radius-0 / radius-1 roots
  std::size_t gen;     // index into the generator list used to build the ball
};

// Elements of the ball in canonical order: by radius, then AffineMap::compare.
// With include_identity the identity sits alone at radius 0 and the ball of
// radius n is Sigma^n; otherwise radius n holds products of exactly n
// generators not seen at smaller radius.
struct Ball {
  std::vector<AffineMap> generators;
  std::vector<BallElement> elements;
  std::vector<std::size_t> radius_end;  // radius_end[n]: elements with radius <= n
  bool truncated = false;               // memory budget hit; last radius incomplete

  std::size_t complete_radius() const { return radius_end.empty() ? 0 : radius_end.size() - 1; }
  std::size_t size_at(std::size_t n) const { return radius_end.at(n); }
  Word word(std::size_t idx) const;
};

// Errors: none; the memory budget truncates (flagged). workers == 0 uses
// the machine's parallelism. Output does not depend on workers.
Ball grow_ball(const std::vector<AffineMap>& generators, std::size_t n_max, bool include_identity,
               std::size_t memory_budget = 10'000'000, unsigned workers = 1);

enum class DplusStatus { CertFound, AllRefuted, Mixed, Unexplored };
std::string to_string(DplusStatus s);

struct GrowthRow {
  std::size_t n;
  std::size_t ball_size;
  DplusStatus dplus_status = DplusStatus::Unexplored;
  // (1/n) log2 #Sigma^n, rendering only; the exact data is (ball_size, n).
  double upper_bound_bits() const;
};

struct GrowthTable {
  std::vector<GrowthRow> rows;  // n = 0, 1, ..., complete radius
  bool truncated = false;
};

GrowthTable ball_sizes(const GeneratingSet& sigma, std::size_t n_max,
                       std::size_t memory_budget = 10'000'000, unsigned workers = 1);

// Exact checks behind the entropy inequalities.
// log2 / d <= (1/n) log N  <=>  2^n <= N^d.
bool entropy_lower_le_upper(std::size_t d, std::size_t n, std::size_t ball_size);
// (1/2n) log N_2n <= (1/n) log N_n  <=>  N_2n <= N_n^2.
bool doubling_bound_holds(std::size_t n_ball, std::size_t two_n_ball);
// N_{a+b} <= N_a N_b over every tabulated a, b.
bool submultiplicative(const GrowthTable& table);

struct EntropyBounds {
  std::optional<std::size_t> lower_denominator;  // lower = log 2 / d; none: lower = 0
  std::vector<double> upper_bits;                // per row n >= 1: (1/n) log2 N_n
  bool lower_le_every_upper = true;              // checked exactly
  double lower_bits() const;
  double best_upper_bits() const;
};

EntropyBounds entropy_bounds(const GrowthTable& table, std::optional<std::size_t> dplus_upper_radius);

struct DplusUpper {
  std::size_t n;
  AffineMap first;
  AffineMap second;
  Word first_word;   // over the symmetrized generators
  Word second_word;
  PingPongCertificate certificate;
};

// Smallest n <= n_max with a certified pair in Sigma^n; equal-ratio pairs
// first at each radius, then canonical element order.
std::optional<DplusUpper> dplus_upper(const GeneratingSet& sigma, std::size_t n_max,
                                      const SearchBudget& budget = {}, unsigned workers = 1);

struct Refutation {
  std::size_t radius;
  std::size_t first;   // element indices in the ball
  std::size_t second;
  std::string reason;  // equal, commute, translation, inverse-powers, power-pair, relation
  std::optional<RelationWitness> witness;  // over {0: first, 1: second}
};

struct DplusLower {
  std::size_t m = 0;  // every pair in Sigma^m refuted, so d+ >= m + 1
  std::vector<AffineMap> elements;  // the ball that was probed, canonical order
  std::vector<Word> words;          // over the generators used (symmetrized or raw)
  std::vector<Refutation> log;      // indices refer to `elements`
  std::optional<std::pair<AffineMap, AffineMap>> resisting;  // the pair that halted the climb
  std::size_t resisting_radius = 0;
};

struct LowerOptions {
  bool symmetrize = true;
  std::size_t power_bound = 24;     // i, j in ratio power matching
  std::size_t power_pair_len = 8;   // BFS length on power pairs
  std::size_t power_pair_reps = 12; // k in (f^{ik}, g^{jk})
};

DplusLower dplus_lower(const GeneratingSet& sigma, std::size_t n_probe, const SearchBudget& budget = {},
                       const LowerOptions& options = {}, unsigned workers = 1);

// A refutation for one pair (f, g) using the dplus_lower strategies, or
// none. The returned witness re-verifies on (f, g).
std::optional<Refutation> refute_pair(const AffineMap& f, const AffineMap& g, const SearchBudget& budget,
                                      const LowerOptions& options = {});

}  // namespace affgrow

#endif  // AFFGROW_GROWTH_HPP_
