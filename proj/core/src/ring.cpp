#include "affgrow/ring.hpp"

#include <algorithm>
#include <utility>

#include "affgrow/error.hpp"
#include "affgrow/rational.hpp"

namespace affgrow {

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::Yes: return "yes";
    case Tristate::No: return "no";
    case Tristate::Unknown: return "unknown";
  }
  return "unknown";
}

bool ModulusRing::is_field() const {
  return kind_ == RingKind::FunctionField || hint_ == Tristate::Yes;
}

bool ModulusRing::same_as(const ModulusRing& other) const {
  return kind_ == other.kind_ && modulus_ == other.modulus_;
}

std::string ModulusRing::describe() const {
  if (kind_ == RingKind::FunctionField) return "Q(t)";
  return "Q[x]/(" + modulus_poly_.to_string('x') + ")";
}

// --- irreducibility hints ---------------------------------------------------

namespace {

using FpPoly = std::vector<long>;

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long fp_inv(long a, long p) {
  long r = 1, e = p - 2, b = a % p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

FpPoly fp_mod(FpPoly a, const FpPoly& m, long p) {
  fp_trim(a);
  const long inv_lead = fp_inv(m.back(), p);
  while (a.size() >= m.size()) {
    long c = a.back() * inv_lead % p;
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    fp_trim(a);
  }
  return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, long p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return fp_mod(std::move(r), m, p);
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f (monic mod p, degree d) is irreducible iff
// gcd(f, X^{p^i} - X) = 1 for all 1 <= i <= d/2.
bool irreducible_mod_p(const std::vector<mpz_class>& f, long p) {
  FpPoly m;
  for (const auto& c : f) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
    m.push_back(r.get_si());
  }
  fp_trim(m);
  const std::size_t d = m.size() - 1;
  FpPoly h = {0, 1};
  for (std::size_t i = 1; i <= d / 2; ++i) {
    // h <- h^p mod m
    FpPoly acc = {1}, base = h;
    long e = p;
    while (e > 0) {
      if (e & 1) acc = fp_mulmod(acc, base, m, p);
      base = fp_mulmod(base, base, m, p);
      e >>= 1;
    }
    h = acc;
    FpPoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    fp_trim(diff);
    if (diff.empty()) return false;
    FpPoly g = fp_gcd(m, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

bool has_integer_root(const std::vector<mpz_class>& f) {
  if (f[0] == 0) return true;
  QPoly q = QPoly::from_integers(f);
  mpz_class c = f[0] < 0 ? mpz_class(-f[0]) : f[0];
  if (c > mpz_class("1000000000000")) return false;  // too costly to enumerate; caller keeps Unknown
  for (mpz_class r = 1; r * r <= c; ++r) {
    if (!mpz_divisible_p(c.get_mpz_t(), r.get_mpz_t())) continue;
    const mpz_class co = c / r;
    for (const mpz_class& cand : {r, mpz_class(-r), co, mpz_class(-co)})
      if (q.eval(mpq_class(cand)) == 0) return true;
  }
  return false;
}

}  // namespace

Tristate detect_irreducible(const std::vector<mpz_class>& f) {
  const std::size_t d = f.size() - 1;
  if (d == 1) return Tristate::Yes;
  const bool small_const = f[0] == 0 || (f[0] < 0 ? mpz_class(-f[0]) : f[0]) <= mpz_class("1000000000000");
  if (small_const && has_integer_root(f)) return Tristate::No;
  if (d <= 3 && small_const) return Tristate::Yes;
  static constexpr long kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                     43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  for (long p : kPrimes)
    if (irreducible_mod_p(f, p)) return Tristate::Yes;
  return Tristate::Unknown;
}

// --- rings ------------------------------------------------------------------

RingPtr ring_new(RingKind kind, std::vector<mpz_class> coeffs) {
  std::shared_ptr<ModulusRing> r(new ModulusRing());
  r->kind_ = kind;
  if (kind == RingKind::FunctionField) {
    r->hint_ = Tristate::Yes;
    return r;
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.size() < 2) throw Error(ErrorCode::EmptyModulus, "modulus must have degree >= 1");
  if (coeffs.back() != 1) throw Error(ErrorCode::NonMonic, "modulus leading coefficient must be 1");
  r->degree_ = coeffs.size() - 1;
  r->modulus_poly_ = QPoly::from_integers(coeffs);
  for (const auto& c : coeffs) r->modulus_q_.emplace_back(c);
  r->hint_ = detect_irreducible(coeffs);
  r->modulus_ = std::move(coeffs);
  return r;
}

RingPtr number_ring(std::vector<mpz_class> coeffs) {
  return ring_new(RingKind::NumberRing, std::move(coeffs));
}

RingPtr number_ring(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> v;
  for (long c : coeffs) v.emplace_back(c);
  return number_ring(std::move(v));
}

RingPtr function_field() { return ring_new(RingKind::FunctionField); }

RingPtr with_irreducible_hint(const RingPtr& ring, Tristate hint) {
  std::shared_ptr<ModulusRing> r(new ModulusRing(*ring));
  if (r->kind_ == RingKind::NumberRing) r->hint_ = hint;
  return r;
}

// --- elements ---------------------------------------------------------------

RingElement RingElement::zero(RingPtr ring) { return constant(std::move(ring), 0); }
RingElement RingElement::one(RingPtr ring) { return constant(std::move(ring), 1); }

RingElement RingElement::constant(RingPtr ring, const mpq_class& c) {
  RingElement e;
  e.ring_ = std::move(ring);
  if (e.ring_->is_number_ring()) {
    e.coeffs_.assign(e.ring_->degree(), mpq_class(0));
    e.coeffs_[0] = c;
  } else {
    e.num_ = QPoly::constant(c);
    e.den_ = QPoly::constant(1);
  }
  return e;
}

RingElement RingElement::generator(RingPtr ring) {
  return from_poly(std::move(ring), QPoly::monomial(1, 1));
}

RingElement RingElement::from_poly(RingPtr ring, const QPoly& p) {
  RingElement e;
  e.ring_ = std::move(ring);
  if (e.ring_->is_number_ring()) {
    QPoly r = p.degree() >= static_cast<long>(e.ring_->degree()) ? p % e.ring_->modulus_poly() : p;
    e.coeffs_.assign(e.ring_->degree(), mpq_class(0));
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) e.coeffs_[i] = r.coeffs()[i];
  } else {
    e.num_ = p;
    e.den_ = QPoly::constant(1);
  }
  return e;
}

RingElement RingElement::fraction(RingPtr ring, const QPoly& num, const QPoly& den) {
  if (ring->is_number_ring())
    throw Error(ErrorCode::Precondition, "fraction() is for the function field");
  if (den.is_zero()) throw Error(ErrorCode::ZeroInput, "zero denominator");
  RingElement e;
  e.ring_ = std::move(ring);
  e.num_ = num;
  e.den_ = den;
  e.normalize_fraction();
  return e;
}

void RingElement::normalize_fraction() {
  if (num_.is_zero()) {
    den_ = QPoly::constant(1);
    return;
  }
  QPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  mpq_class lead = den_.leading();
  if (lead != 1) {
    mpq_class inv_lead = 1 / lead;
    num_ *= inv_lead;
    den_ *= inv_lead;
  }
}

bool RingElement::is_zero() const {
  if (ring_->is_number_ring())
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return c == 0; });
  return num_.is_zero();
}

bool RingElement::is_one() const {
  if (ring_->is_number_ring()) {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const mpq_class& c) { return c == 0; });
  }
  return den_.degree() == 0 && num_.degree() == 0 && num_.coeffs()[0] == 1;
}

bool RingElement::is_constant() const {
  if (ring_->is_number_ring())
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const mpq_class& c) { return c == 0; });
  return num_.degree() <= 0 && den_.degree() == 0;
}

std::optional<mpq_class> RingElement::as_rational() const {
  if (!is_constant()) return std::nullopt;
  if (ring_->is_number_ring()) return coeffs_[0];
  return num_.is_zero() ? mpq_class(0) : num_.coeffs()[0];
}

QPoly RingElement::lift() const {
  if (ring_->is_number_ring()) return QPoly(coeffs_);
  return num_;
}

void RingElement::check_same_ring(const RingElement& o) const {
  if (ring_ != o.ring_ && !ring_->same_as(*o.ring_))
    throw Error(ErrorCode::MixedParents, ring_->describe() + " vs " + o.ring_->describe());
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  if (ring_->is_number_ring()) {
    for (auto& c : r.coeffs_) c = -c;
  } else {
    r.num_ = -r.num_;
  }
  return r;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  check_same_ring(o);
  if (ring_->is_number_ring()) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  } else if (den_ == o.den_) {
    num_ += o.num_;
    normalize_fraction();
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize_fraction();
  }
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) { return *this += -o; }

RingElement operator*(const RingElement& a, const RingElement& b) {
  a.check_same_ring(b);
  RingElement r;
  r.ring_ = a.ring_;
  if (!a.ring_->is_number_ring()) {
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
    r.normalize_fraction();
    return r;
  }
  const std::size_t d = a.ring_->degree();
  std::vector<mpq_class> prod(2 * d - 1, mpq_class(0));
  mpq_class t;
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      prod[i + j] += t;
    }
  }
  // x^d = -(c0 + c1 x + ... + c_{d-1} x^{d-1})
  const auto& m = a.ring_->modulus_q_;
  for (std::size_t k = 2 * d - 1; k-- > d;) {
    if (prod[k] == 0) continue;
    for (std::size_t i = 0; i < d; ++i) {
      if (m[i] == 0) continue;
      mpq_mul(t.get_mpq_t(), prod[k].get_mpq_t(), m[i].get_mpq_t());
      prod[k - d + i] -= t;
    }
  }
  prod.resize(d);
  r.coeffs_ = std::move(prod);
  return r;
}

bool operator==(const RingElement& a, const RingElement& b) {
  a.check_same_ring(b);
  if (a.ring_->is_number_ring()) return a.coeffs_ == b.coeffs_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::size_t RingElement::hash() const noexcept {
  std::size_t seed = 0x51ed27;
  if (ring_->is_number_ring()) {
    for (const auto& c : coeffs_) hash_combine(seed, hash_value(c));
  } else {
    for (const auto& c : num_.coeffs()) hash_combine(seed, hash_value(c));
    hash_combine(seed, 0xdeadbeef);
    for (const auto& c : den_.coeffs()) hash_combine(seed, hash_value(c));
  }
  return seed;
}

namespace {

int compare_vectors(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

}  // namespace

int RingElement::compare(const RingElement& o) const {
  check_same_ring(o);
  if (ring_->is_number_ring()) return compare_vectors(coeffs_, o.coeffs_);
  int c = compare_vectors(den_.coeffs(), o.den_.coeffs());
  if (c != 0) return c;
  return compare_vectors(num_.coeffs(), o.num_.coeffs());
}

std::string RingElement::to_string() const {
  const char v = ring_->variable();
  if (ring_->is_number_ring()) return QPoly(coeffs_).to_string(v);
  if (den_.degree() == 0) return num_.to_string(v);
  return "(" + num_.to_string(v) + ")/(" + den_.to_string(v) + ")";
}

// --- operations -------------------------------------------------------------

RingElement arith(ArithOp op, const RingElement& a, const RingElement& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Neg: return -a;
  }
  return a;
}

RingElement inv(const RingElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInput, "inverse of zero");
  const RingPtr& ring = a.ring();
  if (!ring->is_number_ring()) return RingElement::fraction(ring, a.denominator(), a.numerator());
  if (auto q = a.as_rational()) return RingElement::constant(ring, 1 / *q);
  ExtendedGcd eg = extended_gcd(a.lift(), ring->modulus_poly());
  if (eg.g.degree() > 0)
    throw Error(ErrorCode::ZeroDivisor,
                a.to_string() + " shares the factor " + eg.g.to_string() + " with the modulus");
  return RingElement::from_poly(ring, eg.s);
}

RingElement pow(const RingElement& a, long k) {
  RingElement base = k < 0 ? inv(a) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  RingElement acc = RingElement::one(a.ring());
  while (e > 0) {
    if (e & 1UL) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

std::vector<std::vector<mpq_class>> multiplication_matrix(const RingElement& a) {
  if (!a.ring()->is_number_ring())
    throw Error(ErrorCode::FunctionFieldUnsupported, "multiplication matrix over Q(t)");
  const std::size_t d = a.ring()->degree();
  std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d));
  RingElement col = a;
  const RingElement x = RingElement::generator(a.ring());
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coeffs()[i];
    if (j + 1 < d) col = col * x;
  }
  return m;
}

CharPoly charpoly(const RingElement& a) {
  auto h = multiplication_matrix(a);
  const std::size_t n = h.size();
  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h[piv][m - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][m]);
    }
    const mpq_class pivot_inv = 1 / h[m][m - 1];
    for (std::size_t j = m + 1; j < n; ++j) {
      if (h[j][m - 1] == 0) continue;
      const mpq_class u = h[j][m - 1] * pivot_inv;
      for (std::size_t c = 0; c < n; ++c) h[j][c] -= u * h[m][c];
      for (std::size_t r = 0; r < n; ++r) h[r][m] += u * h[r][j];
    }
  }
  // p_{m+1} = (X - h[m][m]) p_m - sum_{i<m} h[i][m] (prod_{k=i+1..m} h[k][k-1]) p_i
  std::vector<QPoly> p(n + 1);
  p[0] = QPoly::constant(1);
  const QPoly x = QPoly::monomial(1, 1);
  for (std::size_t m = 0; m < n; ++m) {
    QPoly next = (x - QPoly::constant(h[m][m])) * p[m];
    mpq_class t = 1;
    for (std::size_t i = m; i-- > 0;) {
      t *= h[i + 1][i];
      if (t == 0) break;
      next -= p[i] * (t * h[i][m]);
    }
    p[m + 1] = std::move(next);
  }
  CharPoly out = p[n].coeffs();
  out.resize(n + 1, mpq_class(0));
  return out;
}

namespace {

void require_field(const RingElement& a) {
  if (!a.ring()->is_number_ring())
    throw Error(ErrorCode::FunctionFieldUnsupported, "algebraic predicates over Q(t)");
  if (a.ring()->irreducible_hint() != Tristate::Yes)
    throw Error(ErrorCode::RequiresField,
                a.ring()->describe() + " is not known to be a field (irreducible_hint=" +
                    to_string(a.ring()->irreducible_hint()) + ")");
}

}  // namespace

bool is_algebraic_integer(const RingElement& a) {
  require_field(a);
  for (const auto& c : charpoly(a))
    if (c.get_den() != 1) return false;
  return true;
}

bool is_unit(const RingElement& a) {
  if (!is_algebraic_integer(a)) return false;
  const mpq_class c0 = charpoly(a)[0];
  return c0 == 1 || c0 == -1;
}

long root_of_unity_search_bound(std::size_t degree) {
  const long d = static_cast<long>(degree);
  return std::max(2 * d * d, 36L);
}

std::optional<long> is_root_of_unity(const RingElement& a) {
  require_field(a);
  if (a.is_zero()) return std::nullopt;
  const long bound = root_of_unity_search_bound(a.ring()->degree());
  RingElement p = a;
  for (long k = 1; k <= bound; ++k) {
    if (p.is_one()) return k;
    p = p * a;
  }
  return std::nullopt;
}

}  // namespace affgrow
