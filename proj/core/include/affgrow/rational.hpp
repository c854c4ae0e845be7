#ifndef AFFGROW_RATIONAL_HPP_
#define AFFGROW_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace affgrow {

// Exact rationals are gmp's mpq_class throughout; these are the few helpers
// the rest of the library needs on top of it.

std::string to_string(const mpq_class& q);
std::string to_string(const mpz_class& z);

// Accepts "p", "-p", "p/q". Throws Error(Parse) otherwise.
mpq_class parse_rational(std::string_view text);

std::size_t hash_value(const mpz_class& z) noexcept;
std::size_t hash_value(const mpq_class& q) noexcept;

inline void hash_combine(std::size_t& seed, std::size_t h) noexcept {
  seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

// Largest multiple of 2^-bits that is <= q.
mpq_class floor_dyadic(const mpq_class& q, int bits);
// Nearest multiple of 2^-bits (ties toward +inf).
mpq_class round_dyadic(const mpq_class& q, int bits);

// Certified bounds on sqrt(q) for q >= 0, as multiples of 2^-bits.
// sqrt_lower(q) <= sqrt(q) <= sqrt_upper(q); both exact when q is a perfect
// dyadic square at this resolution.
mpq_class sqrt_lower(const mpq_class& q, int bits);
mpq_class sqrt_upper(const mpq_class& q, int bits);

// 2^k as a rational (k may be negative).
mpq_class pow2(long k);

mpq_class abs(const mpq_class& q);

// Exact p-adic valuation of a nonzero rational.
long valuation(const mpq_class& q, const mpz_class& p);

double to_double(const mpq_class& q);

}  // namespace affgrow

#endif  // AFFGROW_RATIONAL_HPP_
