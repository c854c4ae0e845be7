#include "affgrow/rational.hpp"

#include <cctype>

#include "affgrow/error.hpp"

namespace affgrow {

std::string to_string(const mpq_class& q) { return q.get_str(10); }
std::string to_string(const mpz_class& z) { return z.get_str(10); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-')
    throw Error(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'");
  mpz_class d = parse_integer(den);
  if (d == 0) throw Error(ErrorCode::Parse, "zero denominator: '" + std::string(text) + "'");
  mpq_class q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

std::size_t hash_value(const mpz_class& z) noexcept {
  const mpz_srcptr p = z.get_mpz_t();
  std::size_t seed = static_cast<std::size_t>(p->_mp_size);
  const std::size_t n = mpz_size(p);
  for (std::size_t i = 0; i < n; ++i)
    hash_combine(seed, static_cast<std::size_t>(mpz_getlimbn(p, i)));
  return seed;
}

std::size_t hash_value(const mpq_class& q) noexcept {
  std::size_t seed = hash_value(q.get_num());
  hash_combine(seed, hash_value(q.get_den()));
  return seed;
}

mpq_class floor_dyadic(const mpq_class& q, int bits) {
  mpz_class scaled = q.get_num();
  if (bits >= 0)
    scaled <<= bits;
  mpz_class den = q.get_den();
  if (bits < 0) den <<= -bits;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  return mpq_class(fl) * pow2(-static_cast<long>(bits));
}

mpq_class round_dyadic(const mpq_class& q, int bits) {
  return floor_dyadic(q + pow2(-static_cast<long>(bits) - 1), bits);
}

namespace {

// floor(sqrt(q * 4^bits)) together with an exactness flag.
mpz_class scaled_isqrt(const mpq_class& q, int bits, bool& exact) {
  if (q < 0) throw Error(ErrorCode::Precondition, "sqrt of a negative rational");
  mpz_class num = q.get_num();
  num <<= 2 * bits;
  mpz_class fl, rem;
  mpz_fdiv_qr(fl.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  mpz_class s, srem;
  mpz_sqrtrem(s.get_mpz_t(), srem.get_mpz_t(), fl.get_mpz_t());
  exact = (rem == 0 && srem == 0);
  return s;
}

}  // namespace

mpq_class sqrt_lower(const mpq_class& q, int bits) {
  bool exact = false;
  mpz_class s = scaled_isqrt(q, bits, exact);
  return mpq_class(s) * pow2(-bits);
}

mpq_class sqrt_upper(const mpq_class& q, int bits) {
  bool exact = false;
  mpz_class s = scaled_isqrt(q, bits, exact);
  if (!exact) s += 1;
  return mpq_class(s) * pow2(-bits);
}

mpq_class pow2(long k) {
  mpz_class one = 1;
  if (k >= 0) {
    mpz_class r = one << static_cast<unsigned long>(k);
    return mpq_class(r);
  }
  mpz_class d = one << static_cast<unsigned long>(-k);
  return mpq_class(mpz_class(1), d);
}

mpq_class abs(const mpq_class& q) { return q < 0 ? mpq_class(-q) : q; }

long valuation(const mpq_class& q, const mpz_class& p) {
  if (q == 0) throw Error(ErrorCode::ZeroInput, "valuation of zero");
  auto count = [&](mpz_class z) {
    long v = 0;
    if (z < 0) z = -z;
    while (mpz_divisible_p(z.get_mpz_t(), p.get_mpz_t())) {
      z /= p;
      ++v;
    }
    return v;
  };
  return count(q.get_num()) - count(q.get_den());
}

double to_double(const mpq_class& q) { return q.get_d(); }

}  // namespace affgrow
