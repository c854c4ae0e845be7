#ifndef AFFGROW_POLY_HPP_
#define AFFGROW_POLY_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace affgrow {

// Dense univariate polynomial over Q, ascending coefficients. The zero
// polynomial has no coefficients; otherwise the leading coefficient is
// nonzero.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> coeffs);
  static QPoly constant(const mpq_class& c);
  static QPoly monomial(const mpq_class& c, std::size_t degree);
  static QPoly from_integers(const std::vector<mpz_class>& coeffs);

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
  const mpq_class& leading() const { return c_.back(); }

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const mpq_class& s);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const mpq_class& s) { return a *= s; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  mpq_class eval(const mpq_class& x) const;
  QPoly derivative() const;
  QPoly monic() const;
  // Shifts by X^k (k >= 0).
  QPoly shifted(std::size_t k) const;
  bool has_integer_coeffs() const;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

// Euclidean division; divisor must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly operator/(const QPoly& a, const QPoly& b);  // exact quotient part
QPoly operator%(const QPoly& a, const QPoly& b);

// Monic gcd (zero iff both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);

struct ExtendedGcd {
  QPoly g;  // monic
  QPoly s;
  QPoly t;  // s*a + t*b == g
};
ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b);

// a = prod_k factors[k].first ^ factors[k].second, factors monic, squarefree,
// pairwise coprime (Yun). Input must be nonzero; the leading coefficient is
// dropped.
std::vector<std::pair<QPoly, int>> squarefree_factorization(const QPoly& a);

// Monic squarefree part a / gcd(a, a').
QPoly squarefree_part(const QPoly& a);

// Scales to a primitive integer polynomial with positive leading
// coefficient.
std::vector<mpz_class> primitive_integer_form(const QPoly& a);

}  // namespace affgrow

#endif  // AFFGROW_POLY_HPP_
