#ifndef AFFGROW_PARSE_HPP_
#define AFFGROW_PARSE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "affgrow/affine.hpp"
#include "affgrow/poly.hpp"
#include "affgrow/ring.hpp"

namespace affgrow {

// Polynomial text: either an ascending coefficient list "c0,c1,...,cd" or a
// human form such as "x^3+x+1" / "X^10 + X^9 - X^7". Both are exact.
QPoly parse_qpoly(std::string_view text, char var = 'x');

// Modulus coefficients; rejects non-integer coefficients
// (NonIntegerModulus). Monicity is checked by ring_new.
std::vector<mpz_class> parse_modulus(std::string_view text);

// "Q(t)" (also "QQ(t)", "t") selects the function field; anything else is a
// modulus for Q[x]/(pi).
RingPtr parse_ring(std::string_view text);

// Arithmetic expression evaluated in the ring: + - * / ^ (integer
// exponents, negative allowed), parentheses, rationals, the ring variable.
RingElement parse_element(const RingPtr& ring, std::string_view text);

// Generator set text "a|b; a|b; ..." or the preset "gamma" /
// "gamma(pi)" which yields {A(x), B(x)} = {(x,0), (x,1)}. Names are
// "A","B" for the preset, otherwise "g0","g1",...
struct NamedGenerators {
  std::vector<AffineMap> maps;
  std::vector<std::string> names;
};
NamedGenerators parse_generators(const RingPtr& ring, std::string_view text);

}  // namespace affgrow

#endif  // AFFGROW_PARSE_HPP_
