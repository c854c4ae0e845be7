#ifndef AFFGROW_FREENESS_HPP_
#define AFFGROW_FREENESS_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affgrow/affine.hpp"
#include "affgrow/places.hpp"
#include "affgrow/ring.hpp"

namespace affgrow {

struct SearchBudget {
  int precision_bits = 64;
  std::size_t relation_max_len = 14;
  std::size_t memory_budget = 10'000'000;
  long trial_division_bound = 1'000'000;
};

// Both ratios contract at `place` and the fixed points differ, so the pair
// plays ping-pong there and freely generates a free semigroup.
struct PingPongCertificate {
  AffineMap first;
  AffineMap second;
  Place place;
  // Archimedean places: certified |sigma(ratio)| enclosures.
  std::optional<std::pair<AbsEnclosure, AbsEnclosure>> ratio_bounds;
  // Non-archimedean places: exact valuations (p-adic) or orders (t-adic).
  std::optional<std::pair<mpq_class, mpq_class>> valuations;
  std::pair<RingElement, RingElement> fixed_points;
  std::optional<mpq_class> margin;  // 1/3 - max hi, archimedean only
};

// Two distinct words over the letters {0: first, 1: second} with equal
// values.
struct RelationWitness {
  Word u;
  Word v;
};

enum class VerdictTag { Free, NotFree, Unknown };
std::string to_string(VerdictTag tag);

struct BudgetReport {
  std::size_t relation_len_searched = 0;
  std::size_t places_tried = 0;
  bool memory_budget_hit = false;
  bool factorization_budget_hit = false;
  std::string note;
};

struct FreenessVerdict {
  VerdictTag tag = VerdictTag::Unknown;
  std::optional<PingPongCertificate> certificate;
  std::optional<RelationWitness> witness;
  BudgetReport report;
};

// Errors: NotHomothety, PlaceRingMismatch.
std::optional<PingPongCertificate> check_pingpong(const AffineMap& f, const AffineMap& g,
                                                  const Place& place, int precision_bits = 64);

// Places in fixed order: archimedean by index, t-adic (0, rational roots,
// infinity), p-adic by prime. First certificate wins.
std::optional<PingPongCertificate> search_freeness_certificate(const AffineMap& f,
                                                               const AffineMap& g,
                                                               const SearchBudget& budget = {},
                                                               BudgetReport* report = nullptr);

// Shortlex BFS over positive words (letter 0 before 1) with exact dedup.
// The witness is the first word whose value was already seen, paired with
// the earlier word. Errors: MemoryBudget.
std::optional<RelationWitness> find_relation(const AffineMap& f, const AffineMap& g,
                                             std::size_t max_len,
                                             std::size_t memory_budget = 10'000'000);

// Distinct values of positive words of each length 1..n_max.
// Errors: MemoryBudget.
std::vector<std::size_t> count_positive_words(const AffineMap& f, const AffineMap& g,
                                              std::size_t n_max,
                                              std::size_t memory_budget = 10'000'000);

FreenessVerdict decide_pair(const AffineMap& f, const AffineMap& g, const SearchBudget& budget = {});

// Errors: NotTwoHomotheties, EqualFixedPoints.
std::pair<RingElement, RingElement> ratio_reduce(const AffineMap& f, const AffineMap& g);

// Words over {a = 0, b = 1} built from the split pi = P - Q into
// nonnegative parts: u = b^{P0} a b^{P1} ... a b^{Pd}, v likewise from Q.
// For a = (alpha, *) and b any translation, both words have ratio alpha^d
// and differ in translation by a multiple of pi(alpha).
RelationWitness translation_relation(const std::vector<mpz_class>& pi);

// Relation for a homothety-or-not f and a translation g, from the
// characteristic polynomial of f's ratio (cleared to integers). Letters:
// 0 = f, 1 = g. None when the words would exceed max_letters or g is not a
// translation. Number rings only.
std::optional<RelationWitness> translation_pair_relation(const AffineMap& f, const AffineMap& g,
                                                         std::size_t max_letters = 100'000);

// True iff u != v and both evaluate to the same map.
bool verify_relation(const RelationWitness& w, const AffineMap& f, const AffineMap& g);

}  // namespace affgrow

#endif  // AFFGROW_FREENESS_HPP_
