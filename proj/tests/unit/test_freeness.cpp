#include "doctest.h"

#include "affgrow/error.hpp"
#include "affgrow/freeness.hpp"
#include "affgrow/mahler.hpp"
#include "support/common.hpp"

using namespace affgrow;
using testing::el;
using testing::map;

namespace {

RingPtr gold() { return number_ring({-1, -1, 1}); }
RingPtr r331() { return number_ring({1, 1, 0, 1}); }
RingPtr rat() { return number_ring({-1, 1}); }
std::vector<std::string> ab() { return {"a", "b"}; }

std::vector<mpz_class> zv(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("check_pingpong at a 2-adic place") {
  RingPtr q = rat();
  AffineMap f = map(q, "2", "0"), g = map(q, "2", "1");
  auto c = check_pingpong(f, g, PAdicPlace{2, 1});
  REQUIRE(c);
  REQUIRE(c->valuations);
  CHECK(c->valuations->first == 1);
  CHECK(c->valuations->second == 1);
  CHECK(c->fixed_points.first == el(q, "0"));
  CHECK(c->fixed_points.second == el(q, "-1"));
  CHECK(count_positive_words(f, g, 10).back() == 1024);

  CHECK_FALSE(check_pingpong(f, map(q, "3", "0"), PAdicPlace{2, 1}));
  CHECK_FALSE(check_pingpong(f, g, PAdicPlace{3, 0}));
  CHECK_THROWS_AS(check_pingpong(f, map(q, "1", "1"), PAdicPlace{2, 1}), Error);
}

TEST_CASE("check_pingpong at a t-adic place") {
  RingPtr t = function_field();
  AffineMap f = map(t, "t", "0");
  AffineMap g = conjugate(f, map(t, "1", "1"));
  auto c = check_pingpong(f, g, TAdicPlace{mpq_class(0)});
  REQUIRE(c);
  CHECK(c->valuations->first == 1);
  CHECK(c->fixed_points.second == el(t, "1"));
  CHECK_FALSE(check_pingpong(f, g, TAdicPlace{std::nullopt}));
}

TEST_CASE("search_freeness_certificate") {
  RingPtr q = rat();
  auto c = search_freeness_certificate(map(q, "2", "0"), map(q, "2", "1"));
  REQUIRE(c);
  CHECK(std::holds_alternative<PAdicPlace>(c->place));
  CHECK(std::get<PAdicPlace>(c->place).prime == 2);

  RingPtr g = gold();
  auto [A, B] = gamma_generators(g);
  CHECK_FALSE(search_freeness_certificate(A, B));
  CHECK_FALSE(search_freeness_certificate(invert(A), B));

  AffineMap z = map_pow(A, -3);
  AffineMap y = conjugate(z, B);
  auto arch = search_freeness_certificate(z, y);
  REQUIRE(arch);
  REQUIRE(std::holds_alternative<ArchimedeanPlace>(arch->place));
  CHECK(std::get<ArchimedeanPlace>(arch->place).index == 1);
  REQUIRE(arch->ratio_bounds);
  CHECK(arch->ratio_bounds->first.hi <= mpq_class(1, 3));
  CHECK(arch->ratio_bounds->first.width() <= mpq_class(1, 1000000000));
  REQUIRE(arch->margin);
  CHECK(*arch->margin > 0);
}

TEST_CASE("find_relation") {
  RingPtr r = r331();
  auto [A, B] = gamma_generators(r);
  auto w = find_relation(A, B, 8);
  REQUIRE(w);
  CHECK(w->u.to_string(ab()) == "a a a a");
  CHECK(w->v.to_string(ab()) == "b b a b");
  CHECK(verify_relation(*w, A, B));

  RingPtr q = rat();
  auto t = find_relation(map(q, "1", "1"), map(q, "1", "3"), 4);
  REQUIRE(t);
  CHECK(t->u.size() == 2);
  CHECK(t->v.size() == 2);

  CHECK_FALSE(find_relation(map(q, "2", "0"), map(q, "2", "1"), 12));
  CHECK_THROWS_AS(find_relation(map(q, "2", "0"), map(q, "2", "1"), 30, 1000), Error);
}

TEST_CASE("find_relation agrees with brute force on tiny cases") {
  std::mt19937_64 rng(21);
  for (RingPtr r : {rat(), gold(), r331(), number_ring({1, 1, 1})}) {
    oracle::Quotient q = testing::quotient(r);
    for (int i = 0; i < 12; ++i) {
      AffineMap f = testing::random_map(r, rng, 2);
      AffineMap g = testing::random_map(r, rng, 2);
      if (f.is_identity() || g.is_identity()) continue;
      const std::size_t len = 7;
      auto w = find_relation(f, g, len);
      CHECK(w.has_value() == oracle::brute_has_relation(q, testing::naive(f), testing::naive(g), len));
      if (w) CHECK(verify_relation(*w, f, g));
    }
  }
}

TEST_CASE("decide_pair") {
  RingPtr q = rat();
  auto free = decide_pair(map(q, "2", "0"), map(q, "2", "1"));
  CHECK(free.tag == VerdictTag::Free);
  CHECK(free.certificate.has_value());

  auto [A, B] = gamma_generators(r331());
  auto nf = decide_pair(A, B);
  CHECK(nf.tag == VerdictTag::NotFree);
  REQUIRE(nf.witness);
  CHECK(verify_relation(*nf.witness, A, B));

  RingPtr lehmer = number_ring({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
  auto [LA, LB] = gamma_generators(lehmer);
  SearchBudget small;
  small.relation_max_len = 8;
  auto unk = decide_pair(LA, LB, small);
  CHECK(unk.tag == VerdictTag::Unknown);
  CHECK(unk.report.relation_len_searched == 8);
}

TEST_CASE("ratio_reduce") {
  RingPtr g = gold();
  auto [A, B] = gamma_generators(g);
  auto rr = ratio_reduce(A, B);
  CHECK(rr.first == el(g, "x"));
  CHECK(rr.second == el(g, "x"));
  auto r2 = ratio_reduce(map(g, "x^2", "5"), map(g, "x^-1", "1"));
  CHECK(r2.first == el(g, "x^2"));
  CHECK(r2.second == el(g, "x^-1"));
  CHECK_THROWS_AS(ratio_reduce(map(g, "x", "0"), map(g, "x^2", "0")), Error);
}

TEST_CASE("translation relations") {
  RingPtr r = r331();
  RelationWitness w = translation_relation(zv({1, 1, 0, 1}));
  CHECK(w.u.to_string(ab()) == "b a b a a b");
  CHECK(w.v.to_string(ab()) == "a a a");
  AffineMap a = map(r, "x", "0"), b = map(r, "1", "1");
  CHECK(verify_relation(w, a, b));
  CHECK(eval_word(w.u, {a, b}) == map(r, "x^3", "0"));

  RelationWitness w1 = translation_relation(zv({-1, 1}));
  CHECK(w1.u.to_string(ab()) == "a b");
  CHECK(w1.v.to_string(ab()) == "b a");
  RingPtr q = rat();
  std::vector<AffineMap> g1{AffineMap::homothety(el(q, "x")), map(q, "1", "1")};
  CHECK(verify_relation(w1, g1[0], g1[1]));
  CHECK(eval_word(w1.u, g1) == map(q, "x", "1"));

  RingPtr r2 = number_ring({-2, 0, 1});
  RelationWitness w2 = translation_relation(zv({-2, 0, 1}));
  // P = X^2 contributes a trailing b^{P_2}.
  CHECK(w2.u.to_string(ab()) == "a a b");
  CHECK(w2.v.to_string(ab()) == "b b a a");
  CHECK(verify_relation(w2, map(r2, "x", "0"), map(r2, "1", "1")));
  CHECK(verify_relation(w2, map(r2, "x", "7/3"), map(r2, "1", "-5")));

  auto pairrel = translation_pair_relation(map(r, "x^2+1", "3"), map(r, "1", "2"));
  REQUIRE(pairrel);
  CHECK(verify_relation(*pairrel, map(r, "x^2+1", "3"), map(r, "1", "2")));
  CHECK_FALSE(translation_pair_relation(map(r, "x", "0"), map(r, "x", "1")));
}

TEST_CASE("translation relation shape on random moduli") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int i = 0; i < 30; ++i) {
    const int d = 1 + static_cast<int>(rng() % 5);
    std::vector<mpz_class> pi;
    for (int k = 0; k < d; ++k) pi.emplace_back(coef(rng));
    if (pi[0] == 0) pi[0] = 1;  // keep x invertible
    pi.emplace_back(1);
    RelationWitness w = translation_relation(pi);
    std::size_t au = 0, av = 0;
    for (const auto& l : w.u.letters()) au += l.gen == 0;
    for (const auto& l : w.v.letters()) av += l.gen == 0;
    CHECK(au == static_cast<std::size_t>(d));
    CHECK(av == static_cast<std::size_t>(d));
    RingPtr r = number_ring(pi);
    AffineMap a = AffineMap::homothety(el(r, "x"));
    AffineMap b = map(r, "1", "1");
    AffineMap fu = eval_word(w.u, {a, b}), fv = eval_word(w.v, {a, b});
    CHECK(fu.ratio() == fv.ratio());
    // In Q[t] (no reduction) the translation parts differ by pi(t).
    RingPtr t = function_field();
    AffineMap at = map(t, "t", "0"), bt = map(t, "1", "1");
    RingElement diff = eval_word(w.u, {at, bt}).shift() - eval_word(w.v, {at, bt}).shift();
    RingElement pit = RingElement::from_poly(t, QPoly::from_integers(pi));
    CHECK((diff == pit || diff == -pit));
    CHECK(fu == fv);
  }
}

TEST_CASE("verify_relation") {
  auto [A, B] = gamma_generators(r331());
  RelationWitness w{Word::parse("aaaa", ab()), Word::parse("bbab", ab())};
  CHECK(verify_relation(w, A, B));
  auto [A2, B2] = gamma_generators(number_ring({2, 1, 0, 1}));
  CHECK_FALSE(verify_relation(w, A2, B2));
  CHECK_FALSE(verify_relation({w.u, w.u}, A, B));
}

TEST_CASE("soundness: free pairs satisfy the positive-word count") {
  std::mt19937_64 rng(41);
  int certified = 0;
  for (RingPtr r : {rat(), number_ring({-3, 1}), number_ring({-2, 0, 1}), gold(), number_ring({2, 0, 1})}) {
    for (int i = 0; i < 25; ++i) {
      AffineMap f = testing::random_map(r, rng, 3);
      AffineMap g = testing::random_map(r, rng, 3);
      if (classify_map(f).tag != MapTag::Homothety || classify_map(g).tag != MapTag::Homothety) continue;
      auto cert = search_freeness_certificate(f, g);
      auto rel = find_relation(f, g, 9);
      CHECK_FALSE((cert && rel));
      if (rel) CHECK(verify_relation(*rel, f, g));
      if (cert) {
        ++certified;
        auto counts = count_positive_words(f, g, 12);
        for (std::size_t n = 1; n <= 12; ++n) CHECK(counts[n - 1] == (std::size_t{1} << n));
      }
    }
  }
  CHECK(certified > 5);
}

TEST_CASE("count_positive_words") {
  RingPtr q = rat();
  auto c = count_positive_words(map(q, "2", "0"), map(q, "2", "1"), 12);
  for (std::size_t n = 1; n <= 12; ++n) CHECK(c[n - 1] == (std::size_t{1} << n));
  auto [A, B] = gamma_generators(r331());
  CHECK(count_positive_words(A, B, 4)[3] < 16);
  auto same = count_positive_words(A, A, 6);
  for (auto v : same) CHECK(v == 1);
}
