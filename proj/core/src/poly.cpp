#include "affgrow/poly.hpp"

#include <sstream>

#include "affgrow/error.hpp"
#include "affgrow/rational.hpp"

namespace affgrow {

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const mpq_class& c) { return QPoly({c}); }

QPoly QPoly::monomial(const mpq_class& c, std::size_t degree) {
  std::vector<mpq_class> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

QPoly QPoly::from_integers(const std::vector<mpz_class>& coeffs) {
  std::vector<mpq_class> v;
  v.reserve(coeffs.size());
  for (const auto& z : coeffs) v.emplace_back(z);
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const mpq_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(r));
}

mpq_class QPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return QPoly(std::move(r));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  QPoly r = *this;
  mpq_class inv = 1 / leading();
  r *= inv;
  return r;
}

QPoly QPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<mpq_class> r(k, mpq_class(0));
  r.insert(r.end(), c_.begin(), c_.end());
  return QPoly(std::move(r));
}

bool QPoly::has_integer_coeffs() const {
  for (const auto& c : c_)
    if (c.get_den() != 1) return false;
  return true;
}

std::string QPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const mpq_class& c = c_[k];
    if (c == 0) continue;
    mpq_class mag = affgrow::abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? "-" : "+");
    }
    first = false;
    const bool unit = (mag == 1);
    if (k == 0) {
      out << affgrow::to_string(mag);
      continue;
    }
    if (!unit) out << affgrow::to_string(mag) << "*";
    out << var;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroInput, "polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly{}, a};
  std::vector<mpq_class> rem = a.coeffs();
  const long db = b.degree();
  std::vector<mpq_class> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const mpq_class inv_lead = 1 / b.leading();
  for (long k = a.degree(); k >= db; --k) {
    const mpq_class& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    mpq_class factor = top * inv_lead;
    quo[static_cast<std::size_t>(k - db)] = factor;
    for (long i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(k - db + i)] -= factor * b.coeffs()[static_cast<std::size_t>(i)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly operator/(const QPoly& a, const QPoly& b) { return divmod(a, b).first; }
QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = QPoly::constant(1), s1;
  QPoly t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    QPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {QPoly{}, QPoly{}, QPoly{}};
  mpq_class inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::vector<std::pair<QPoly, int>> squarefree_factorization(const QPoly& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInput, "squarefree factorization of zero");
  std::vector<std::pair<QPoly, int>> out;
  QPoly f = a.monic();
  if (f.degree() == 0) return out;
  QPoly fp = f.derivative();
  QPoly g = gcd(f, fp);
  QPoly b = f / g;
  // Yun: c = f'/g, d = c - b'.
  QPoly c = fp / g;
  QPoly d = c - b.derivative();
  int k = 1;
  while (b.degree() > 0) {
    QPoly h = gcd(b, d);
    if (h.degree() > 0) out.emplace_back(h, k);
    b = b / h;
    c = d / h;
    d = c - b.derivative();
    ++k;
  }
  return out;
}

QPoly squarefree_part(const QPoly& a) {
  QPoly f = a.monic();
  if (f.degree() <= 0) return f;
  return (f / gcd(f, f.derivative())).monic();
}

std::vector<mpz_class> primitive_integer_form(const QPoly& a) {
  std::vector<mpz_class> out;
  if (a.is_zero()) return out;
  mpz_class l = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  out.reserve(a.coeffs().size());
  mpz_class g = 0;
  for (const auto& c : a.coeffs()) {
    mpq_class s = c * l;
    out.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (out.back() < 0) g = -g;
  for (auto& z : out) z /= g;
  return out;
}

}  // namespace affgrow
