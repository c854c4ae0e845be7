#include "doctest.h"

#include "affgrow/error.hpp"
#include "affgrow/places.hpp"
#include "affgrow/rational.hpp"
#include "support/common.hpp"

using namespace affgrow;
using testing::el;

namespace {

RingPtr gold() { return number_ring({-1, -1, 1}); }

// Newton on x^2 - x - 1 from 2, then a certified bracket of half-width eps.
std::pair<mpq_class, mpq_class> phi_oracle(int bits) {
  mpq_class x = 2;
  for (int i = 0; i < 12; ++i) x = (x * x + 1) / (2 * x - 1);
  mpq_class eps = pow2(-bits);
  oracle::Vec p{-1, -1, 1};
  REQUIRE(sgn(oracle::poly_eval(p, x - eps)) < 0);
  REQUIRE(sgn(oracle::poly_eval(p, x + eps)) > 0);
  return {x - eps, x + eps};
}

bool box_contains(const ArchimedeanPlace& p, const mpq_class& lo, const mpq_class& hi) {
  return p.box_re_lo() <= lo && hi <= p.box_re_hi();
}

}  // namespace

TEST_CASE("isolate_roots: golden ratio") {
  auto places = isolate_roots({-1, -1, 1}, 64);
  REQUIRE(places.size() == 2);
  oracle::Vec p{-1, -1, 1};
  auto neg = oracle::bisect(p, -1, 0, 200);
  auto pos = oracle::bisect(p, 1, 2, 200);
  CHECK(places[0].real);
  CHECK(places[1].real);
  CHECK(box_contains(places[0], neg.first, neg.second));
  CHECK(box_contains(places[1], pos.first, pos.second));
  CHECK(places[0].radius <= pow2(-64));
  CHECK(places[0].index == 0);
  CHECK(places[1].index == 1);
}

TEST_CASE("isolate_roots: rational and imaginary roots") {
  auto two = isolate_roots({-2, 1}, 64);
  REQUIRE(two.size() == 1);
  CHECK(two[0].center.re == 2);
  CHECK(two[0].center.im == 0);
  CHECK(two[0].real);

  RingPtr gi = number_ring({1, 0, 1});
  auto ii = archimedean_places(gi, 64);
  REQUIRE(ii.size() == 2);
  CHECK_FALSE(ii[0].real);
  CHECK(ii[0].conjugate == 1);
  CHECK(ii[1].conjugate == 0);
  for (const auto& pl : ii) CHECK(abs_arch(el(gi, "x"), pl, 64).contains(1));

  auto rep = isolate_roots({1, -2, 1}, 64);  // (x - 1)^2
  REQUIRE(rep.size() == 1);
  CHECK(rep[0].multiplicity == 2);
}

TEST_CASE("abs_arch against the Newton oracle") {
  RingPtr g = gold();
  auto places = archimedean_places(g, 64);
  auto [lo, hi] = phi_oracle(200);
  AbsEnclosure e = abs_arch(el(g, "x"), places[1], 64);
  CHECK(e.lo <= lo);
  CHECK(hi <= e.hi);
  CHECK(e.width() <= mpq_class(1, 1000000000));
  CHECK_FALSE(e.budget_exhausted);

  AbsEnclosure one = abs_arch(RingElement::one(g), places[0], 64);
  CHECK(one.lo == 1);
  CHECK(one.hi == 1);

  AbsEnclosure inv3 = abs_arch(el(g, "x^-3"), places[1], 64);
  mpq_class olo = 1 / (hi * hi * hi), ohi = 1 / (lo * lo * lo);
  CHECK(inv3.lo <= olo);
  CHECK(ohi <= inv3.hi);
  CHECK(inv3.hi < mpq_class(1, 3));
  CHECK(to_double(inv3.lo) == doctest::Approx(0.2360679775).epsilon(1e-9));

  RingPtr other = number_ring({1, 1, 0, 1});
  CHECK_THROWS_AS(abs_arch(el(other, "x"), places[0], 64), Error);
}

TEST_CASE("Newton polygon valuations") {
  RingPtr q = number_ring({-1, 1});
  CHECK(newton_polygon_valuations(el(q, "2"), 2) == std::vector<mpq_class>{1});
  CHECK(newton_polygon_valuations(el(q, "1/2"), 2) == std::vector<mpq_class>{-1});
  RingPtr r2 = number_ring({-2, 0, 1});
  CHECK(newton_polygon_valuations(el(r2, "x"), 2) == std::vector<mpq_class>{mpq_class(1, 2), mpq_class(1, 2)});
  RingPtr r = number_ring({6, 0, 1});
  auto v3 = newton_polygon_valuations(el(r, "x + 3"), 3);
  CHECK(v3.size() == 2);
}

TEST_CASE("contracting places") {
  RingPtr q = number_ring({-1, 1});
  auto p2 = find_contracting_place(el(q, "2"), ContractMode::StrictNonArch);
  REQUIRE(p2.place);
  REQUIRE(std::holds_alternative<PAdicPlace>(*p2.place));
  CHECK(std::get<PAdicPlace>(*p2.place).prime == 2);
  CHECK(std::get<PAdicPlace>(*p2.place).slope == 1);

  RingPtr t = function_field();
  auto pt = find_contracting_place(el(t, "t"), ContractMode::StrictNonArch);
  REQUIRE(pt.place);
  REQUIRE(std::holds_alternative<TAdicPlace>(*pt.place));
  CHECK(std::get<TAdicPlace>(*pt.place).center == mpq_class(0));
  CHECK(t_adic_order(el(t, "t"), mpq_class(0)) == 1);
  CHECK(t_adic_order(el(t, "t^2/(t+1)"), std::nullopt) == -1);
  CHECK(t_adic_order(el(t, "(t-1)^3"), mpq_class(1)) == 3);

  RingPtr g = gold();
  auto pa = find_contracting_place(el(g, "x^-3"), ContractMode::ArchThird);
  REQUIRE(pa.place);
  REQUIRE(std::holds_alternative<ArchimedeanPlace>(*pa.place));
  CHECK(std::get<ArchimedeanPlace>(*pa.place).index == 1);
}

TEST_CASE("contraction exponent") {
  RingPtr g = gold();
  auto c = contraction_exponent(el(g, "x"), 10);
  REQUIRE(c);
  CHECK(c->exponent == 3);
  CHECK(c->sign == -1);
  CHECK(c->place.index == 1);
  CHECK(c->enclosure.hi <= mpq_class(1, 3));
  // Minimality by exhaustion over both signs and both places.
  for (long k : {-2L, -1L, 1L, 2L})
    for (const auto& pl : archimedean_places(g, 64))
      CHECK(abs_arch(pow(el(g, "x"), k), pl, 64).lo > mpq_class(1, 3));

  RingPtr q = number_ring({-1, 1});
  auto c2 = contraction_exponent(el(q, "2"), 10);
  REQUIRE(c2);
  CHECK(c2->exponent == 2);
  CHECK(c2->sign == -1);
  CHECK(c2->enclosure.hi == mpq_class(1, 4));

  try {
    contraction_exponent(el(number_ring({1, 1, 1}), "x"), 10);
    FAIL("root of unity accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Precondition);
  }
}

TEST_CASE("trial factoring and rational roots") {
  auto f = trial_factor(mpz_class(360), 100);
  CHECK(f.complete);
  CHECK(f.primes == std::vector<mpz_class>{2, 3, 5});
  auto big = trial_factor(mpz_class(1000003) * 1000033, 1000);
  CHECK_FALSE(big.complete);
  auto roots = rational_roots(parse_qpoly("2*x^3 - 3*x^2 - 3*x + 2"), 1000);
  CHECK(roots == std::vector<mpq_class>{-1, mpq_class(1, 2), 2});
}

TEST_CASE("place properties") {
  std::mt19937_64 rng(3);
  std::vector<RingPtr> rings{gold(), number_ring({1, 1, 0, 1}), number_ring({-2, 0, 1}), number_ring({1, 0, 1}),
                             number_ring({3, -1, 0, 0, 1})};
  for (const RingPtr& r : rings) {
    auto places = archimedean_places(r, 64);
    for (int i = 0; i < 12; ++i) {
      RingElement a = testing::random_unit_like(r, rng, 4);
      const mpq_class norm = abs(charpoly(a)[0]);
      mpq_class lo = 1, hi = 1;
      for (const auto& pl : places) {
        AbsEnclosure e = abs_arch(a, pl, 64);
        lo *= e.lo;
        hi *= e.hi;
      }
      CHECK(lo <= norm);
      CHECK(norm <= hi);

      for (long p : {2L, 3L, 5L}) {
        auto vs = newton_polygon_valuations(a, p);
        mpq_class sum = 0;
        for (const auto& v : vs) sum += v;
        CHECK(sum == valuation(charpoly(a)[0], p));
      }

      const auto& pl = places[rng() % places.size()];
      AbsEnclosure e32 = abs_arch(a, pl, 32);
      AbsEnclosure e64 = abs_arch(a, pl, 64);
      AbsEnclosure e160 = abs_arch(a, pl, 160);
      CHECK(e64.within(e32));
      CHECK(e160.within(e64));
      CHECK(e160.width() <= pow2(-160));
    }
  }
}

TEST_CASE("integral units have no strictly contracting finite place") {
  std::mt19937_64 rng(9);
  for (RingPtr r : {gold(), number_ring({1, 1, 0, 1}), number_ring({-1, 0, 0, 1, 1})}) {
    RingElement x = el(r, "x");
    for (int i = 0; i < 15; ++i) {
      long j = static_cast<long>(rng() % 9) - 4, k = static_cast<long>(rng() % 5) - 2;
      RingElement a = pow(x, j) * pow(x + RingElement::one(r), k);
      if (a.is_one()) continue;
      const bool inverse_integral = is_algebraic_integer(inv(a));
      auto found = find_contracting_place(a, ContractMode::StrictNonArch);
      const bool nonarch = found.place && !std::holds_alternative<ArchimedeanPlace>(*found.place);
      CHECK(nonarch == !inverse_integral);
    }
  }
}
