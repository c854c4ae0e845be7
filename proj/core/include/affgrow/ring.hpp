#ifndef AFFGROW_RING_HPP_
#define AFFGROW_RING_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "affgrow/poly.hpp"

namespace affgrow {

enum class RingKind { NumberRing, FunctionField };
enum class Tristate { Yes, No, Unknown };

std::string to_string(Tristate t);

class ModulusRing;
class RingElement;
using RingPtr = std::shared_ptr<const ModulusRing>;

// Either Q[X]/(pi) for a monic integer pi (possibly reducible), or Q(t).
// Immutable once built; shared by every element living in it.
class ModulusRing {
 public:
  RingKind kind() const { return kind_; }
  bool is_number_ring() const { return kind_ == RingKind::NumberRing; }
  // Ascending integer coefficients c0..cd with cd == 1 (NumberRing only).
  const std::vector<mpz_class>& modulus() const { return modulus_; }
  const QPoly& modulus_poly() const { return modulus_poly_; }
  // d = deg pi for a NumberRing, 0 for the function field.
  std::size_t degree() const { return degree_; }
  Tristate irreducible_hint() const { return hint_; }
  // NumberRing with irreducible_hint == Yes, or the function field.
  bool is_field() const;
  char variable() const { return kind_ == RingKind::NumberRing ? 'x' : 't'; }

  // Same kind and modulus; the hint is not part of a ring's identity.
  bool same_as(const ModulusRing& other) const;
  std::string describe() const;

 private:
  friend RingPtr ring_new(RingKind, std::vector<mpz_class>);
  friend RingPtr with_irreducible_hint(const RingPtr&, Tristate);
  ModulusRing() = default;

  RingKind kind_ = RingKind::NumberRing;
  std::vector<mpz_class> modulus_;
  std::vector<mpq_class> modulus_q_;
  QPoly modulus_poly_;
  std::size_t degree_ = 0;
  Tristate hint_ = Tristate::Unknown;

  friend class RingElement;
  friend RingElement operator*(const RingElement& a, const RingElement& b);
};

// Errors: EmptyModulus, NonMonic (NumberRing). The hint is upgraded
// automatically where cheap: degree 1, rational roots, degree <= 3, and
// irreducibility modulo a small prime.
RingPtr ring_new(RingKind kind, std::vector<mpz_class> modulus_coeffs = {});
RingPtr number_ring(std::vector<mpz_class> modulus_coeffs);
RingPtr number_ring(std::initializer_list<long> modulus_coeffs);
RingPtr function_field();
// Copy of the ring with a caller-asserted hint.
RingPtr with_irreducible_hint(const RingPtr& ring, Tristate hint);

Tristate detect_irreducible(const std::vector<mpz_class>& monic_coeffs);

class RingElement {
 public:
  static RingElement zero(RingPtr ring);
  static RingElement one(RingPtr ring);
  // x in Q[X]/(pi), t in Q(t).
  static RingElement generator(RingPtr ring);
  static RingElement constant(RingPtr ring, const mpq_class& c);
  // NumberRing: any polynomial, reduced mod pi. FunctionField: polynomial in t.
  static RingElement from_poly(RingPtr ring, const QPoly& p);
  // FunctionField only; den must be nonzero.
  static RingElement fraction(RingPtr ring, const QPoly& num, const QPoly& den);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_constant() const;
  // Rational value if the element is a constant.
  std::optional<mpq_class> as_rational() const;

  // NumberRing: exactly d coefficients of 1, x, ..., x^{d-1}.
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  // NumberRing: the canonical lift of degree < d. FunctionField: numerator.
  QPoly lift() const;
  const QPoly& numerator() const { return num_; }
  const QPoly& denominator() const { return den_; }

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend bool operator==(const RingElement& a, const RingElement& b);
  friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

  std::size_t hash() const noexcept;
  // Total order on canonical forms (same ring).
  int compare(const RingElement& o) const;
  std::string to_string() const;

 private:
  RingElement() = default;
  void check_same_ring(const RingElement& o) const;
  void normalize_fraction();

  RingPtr ring_;
  std::vector<mpq_class> coeffs_;
  QPoly num_;
  QPoly den_;
};

struct RingElementHash {
  std::size_t operator()(const RingElement& e) const noexcept { return e.hash(); }
};

enum class ArithOp { Add, Sub, Mul, Neg };
RingElement arith(ArithOp op, const RingElement& a, const RingElement& b);

// Errors: ZeroInput for a == 0, ZeroDivisor when a shares a factor with pi.
RingElement inv(const RingElement& a);
RingElement pow(const RingElement& a, long k);

// Characteristic polynomial of multiplication-by-a on Q^d; monic, degree d,
// ascending coefficients. Errors: FunctionFieldUnsupported.
using CharPoly = std::vector<mpq_class>;
CharPoly charpoly(const RingElement& a);

// Matrix of multiplication by a in the basis 1, x, ..., x^{d-1}
// (column j holds a * x^j).
std::vector<std::vector<mpq_class>> multiplication_matrix(const RingElement& a);

// Field-only predicates (Errors: RequiresField, FunctionFieldUnsupported).
bool is_algebraic_integer(const RingElement& a);
bool is_unit(const RingElement& a);
// Smallest k <= root_of_unity_search_bound(d) with a^k == 1.
std::optional<long> is_root_of_unity(const RingElement& a);
long root_of_unity_search_bound(std::size_t degree);

}  // namespace affgrow

#endif  // AFFGROW_RING_HPP_
