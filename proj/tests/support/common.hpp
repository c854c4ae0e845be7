#ifndef AFFGROW_TESTS_COMMON_HPP_
#define AFFGROW_TESTS_COMMON_HPP_

#include <random>
#include <string>
#include <vector>

#include "affgrow/affine.hpp"
#include "affgrow/error.hpp"
#include "affgrow/parse.hpp"
#include "affgrow/ring.hpp"
#include "oracles.hpp"

namespace testing {

using namespace affgrow;

inline RingElement el(const RingPtr& r, const std::string& text) { return parse_element(r, text); }

inline AffineMap map(const RingPtr& r, const std::string& a, const std::string& b) {
  return AffineMap(el(r, a), el(r, b));
}

inline oracle::Quotient quotient(const RingPtr& r) {
  oracle::Quotient q;
  for (const auto& c : r->modulus()) q.pi.emplace_back(c);
  return q;
}

inline oracle::Map naive(const AffineMap& f) { return {f.ratio().coeffs(), f.shift().coeffs()}; }

// Small random element: integer coefficients in [-k, k].
inline RingElement random_element(const RingPtr& r, std::mt19937_64& rng, int k = 3) {
  std::uniform_int_distribution<int> coef(-k, k);
  std::vector<mpq_class> c;
  for (std::size_t i = 0; i < r->degree(); ++i) c.emplace_back(coef(rng));
  return RingElement::from_poly(r, QPoly(c));
}

inline RingElement random_unit_like(const RingPtr& r, std::mt19937_64& rng, int k = 3) {
  for (;;) {
    RingElement e = random_element(r, rng, k);
    if (e.is_zero()) continue;
    try {
      (void)inv(e);
      return e;
    } catch (const Error&) {
    }
  }
}

inline AffineMap random_map(const RingPtr& r, std::mt19937_64& rng, int k = 3) {
  return AffineMap(random_unit_like(r, rng, k), random_element(r, rng, k));
}

}  // namespace testing

#endif  // AFFGROW_TESTS_COMMON_HPP_
