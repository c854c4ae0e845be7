#include "doctest.h"

#include "affgrow/affine.hpp"
#include "affgrow/error.hpp"
#include "affgrow/freeness.hpp"
#include "affgrow/mahler.hpp"
#include "support/common.hpp"

using namespace affgrow;
using testing::el;
using testing::map;

namespace {

RingPtr r331() { return number_ring({1, 1, 0, 1}); }
RingPtr gold() { return number_ring({-1, -1, 1}); }
RingPtr rat() { return number_ring({-1, 1}); }

std::vector<std::string> ab() { return {"a", "b"}; }

}  // namespace

TEST_CASE("the cubic relation holds exactly when x^3 + x + 1 = 0") {
  RingPtr r = r331();
  std::vector<AffineMap> gens{map(r, "x", "0"), map(r, "x", "1")};
  AffineMap lhs = eval_word(Word::parse("a a a a", ab()), gens);
  AffineMap rhs = eval_word(Word::parse("b b a b", ab()), gens);
  CHECK(lhs == rhs);
  CHECK(lhs == map(r, "x^4", "0"));

  RingPtr wrong = number_ring({2, 1, 0, 1});
  std::vector<AffineMap> g2{map(wrong, "x", "0"), map(wrong, "x", "1")};
  AffineMap l2 = eval_word(Word::parse("aaaa", ab()), g2);
  AffineMap r2 = eval_word(Word::parse("bbab", ab()), g2);
  CHECK(l2 != r2);
  CHECK(r2.shift() == el(wrong, "x^3+x+1"));
  CHECK(r2.shift() == el(wrong, "-1"));
}

TEST_CASE("compose, invert, powers") {
  RingPtr q = rat();
  AffineMap f = map(q, "2", "1");
  CHECK(compose(f, AffineMap::identity(q)) == f);
  CHECK(invert(f) == map(q, "1/2", "-1/2"));
  CHECK(map_pow(f, 0).is_identity());
  CHECK(map_pow(map(r331(), "x", "1"), 2) == map(r331(), "x^2", "x+1"));
  CHECK(map_pow(f, -2) == invert(compose(f, f)));
  CHECK_THROWS_AS(AffineMap(el(q, "0"), el(q, "1")), Error);
}

TEST_CASE("classify_map") {
  RingPtr g = gold();
  MapClass c = classify_map(map(g, "x", "1"));
  CHECK(c.tag == MapTag::Homothety);
  REQUIRE(c.fixed_point);
  CHECK(*c.fixed_point == inv(el(g, "1-x")));
  CHECK(el(g, "x") * *c.fixed_point + el(g, "1") == *c.fixed_point);
  CHECK(classify_map(map(g, "1", "5")).tag == MapTag::Translation);
  CHECK(classify_map(map(g, "1", "0")).tag == MapTag::Identity);
}

TEST_CASE("conjugation transports fixed points") {
  RingPtr q = rat();
  AffineMap f = map(q, "2", "0");
  AffineMap w = map(q, "1", "1");
  AffineMap c = conjugate(f, w);
  CHECK(c == map(q, "2", "-1"));
  CHECK(*classify_map(c).fixed_point == el(q, "1"));
  CHECK(conjugate(f, AffineMap::identity(q)) == f);

  RingPtr g = gold();
  AffineMap fg = map(g, "x", "0");
  AffineMap wg = map(g, "x", "1");
  AffineMap cg = conjugate(fg, wg);
  CHECK(cg.ratio() == el(g, "x"));
  CHECK(*classify_map(cg).fixed_point == el(g, "1"));
}

TEST_CASE("word evaluation") {
  RingPtr r = r331();
  std::vector<AffineMap> gens{map(r, "x", "0"), map(r, "1", "1")};
  AffineMap u = eval_word(Word::parse("b a b a a b", ab()), gens);
  CHECK(u == eval_word(Word::parse("a a a", ab()), gens));
  CHECK(u == map(r, "x^3", "0"));
  CHECK(eval_word(Word(), gens).is_identity());
  CHECK(eval_word(Word::parse("a a^-1", ab()), gens).is_identity());

  // Leftmost letter is applied last.
  std::vector<AffineMap> gg{map(r, "2", "0"), map(r, "1", "1")};
  AffineMap ba = eval_word(Word::parse("b a", ab()), gg);
  CHECK(ba(el(r, "5")) == el(r, "11"));
  CHECK(Word::parse("a*b^2", ab()) == Word::parse("a b b", ab()));
  CHECK_THROWS_AS(Word::parse("a c", ab()), Error);
  CHECK_THROWS_AS(eval_word(Word::parse("b", ab()), {gens[0]}), Error);
}

TEST_CASE("canonical_pair") {
  RingPtr q = rat();
  CanonicalPair c0 = canonical_pair(map(q, "2", "0"), map(q, "2", "-1"));
  CHECK(c0.first == map(q, "2", "0"));
  CHECK(c0.second == map(q, "2", "-1"));

  AffineMap f = map(q, "2", "1");
  AffineMap g = map(q, "3", "0");
  CanonicalPair c = canonical_pair(f, g);
  CHECK(c.first.ratio() == el(q, "2"));
  CHECK(c.second.ratio() == el(q, "3"));
  CHECK(classify_map(c.first).fixed_point->is_zero());
  CHECK(classify_map(c.second).fixed_point->is_one());
  // gamma(z) = z + 1 sends -1 to 0 and 0 to 1.
  CHECK(c.first == conjugate(f, map(q, "1", "1")));

  try {
    canonical_pair(map(q, "2", "0"), map(q, "3", "0"));
    FAIL("equal fixed points accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EqualFixedPoints);
  }
  CHECK_THROWS_AS(canonical_pair(map(q, "1", "1"), map(q, "3", "0")), Error);
}

TEST_CASE("classify_group") {
  auto gamma = [](const RingPtr& r) {
    auto [a, b] = gamma_generators(r);
    return std::vector<AffineMap>{a, b};
  };
  CHECK(classify_group(gamma(number_ring({1, 1, 1}))) == GroupClass::VirtuallyNilpotent);
  CHECK(classify_group(gamma(r331())) == GroupClass::PolycyclicNotVN);
  CHECK(classify_group(gamma(number_ring({-2, 1}))) == GroupClass::NotPolycyclic);
  CHECK(classify_group(gamma(function_field())) == GroupClass::Unknown);
  CHECK_THROWS_AS(classify_group(gamma(number_ring({2, -3, 1}))), Error);
}

TEST_CASE("affine properties on random inputs") {
  std::mt19937_64 rng(11);
  for (RingPtr r : {r331(), gold(), rat(), number_ring({2, 0, 1})}) {
    oracle::Quotient q = testing::quotient(r);
    for (int i = 0; i < 40; ++i) {
      AffineMap f = testing::random_map(r, rng);
      AffineMap g = testing::random_map(r, rng);
      AffineMap h = testing::random_map(r, rng);
      CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
      CHECK(compose(f, invert(f)).is_identity());
      CHECK(compose(invert(f), f).is_identity());
      CHECK(testing::naive(compose(f, g)) == oracle::compose(q, testing::naive(f), testing::naive(g)));

      AffineMap c = conjugate(f, g);
      MapClass before = classify_map(f);
      MapClass after = classify_map(c);
      CHECK(before.tag == after.tag);
      CHECK(c.ratio() == f.ratio());
      if (before.fixed_point) CHECK(*after.fixed_point == g(*before.fixed_point));

      // Words equal for a pair stay equal after conjugation, and conversely.
      if (before.tag == MapTag::Homothety && classify_map(g).tag == MapTag::Homothety &&
          *classify_map(g).fixed_point != *before.fixed_point) {
        CanonicalPair cp = canonical_pair(f, g);
        CHECK(classify_map(cp.first).fixed_point->is_zero());
        CHECK(classify_map(cp.second).fixed_point->is_one());
        CHECK(cp.first.ratio() == f.ratio());
        CHECK(cp.second.ratio() == g.ratio());
        auto w = find_relation(f, g, 6);
        auto wc = find_relation(cp.first, cp.second, 6);
        CHECK(w.has_value() == wc.has_value());
        if (w) CHECK(verify_relation(*w, cp.first, cp.second));
      }
    }
  }
}

TEST_CASE("classify_group is invariant under inverses and conjugation") {
  std::mt19937_64 rng(5);
  for (RingPtr r : {number_ring({1, 1, 1}), r331(), number_ring({-2, 1}), gold(), number_ring({1, 0, 1})}) {
    std::vector<AffineMap> gens{map(r, "x", "0"), map(r, "x", "1")};
    GroupClass base = classify_group(gens);
    CHECK(classify_group({invert(gens[0]), invert(gens[1])}) == base);
    for (int i = 0; i < 10; ++i) {
      AffineMap w = testing::random_map(r, rng);
      CHECK(classify_group({conjugate(gens[0], w), conjugate(gens[1], w)}) == base);
    }
  }
}
