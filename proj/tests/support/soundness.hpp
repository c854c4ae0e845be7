#ifndef AFFGROW_TESTS_SOUNDNESS_HPP_
#define AFFGROW_TESTS_SOUNDNESS_HPP_

// Randomized soundness sweep shared by the unit suite and the acceptance
// binary.

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "affgrow/artifacts.hpp"
#include "affgrow/freeness.hpp"
#include "affgrow/serialize.hpp"
#include "common.hpp"

namespace soundness {

using namespace affgrow;

struct Stats {
  std::size_t cases = 0;
  std::size_t free = 0, notfree = 0, unknown = 0;
  std::size_t witnesses = 0, certificates = 0, artifacts_checked = 0;
  std::size_t conjugations = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

inline const std::vector<std::string>& ring_texts() {
  static const std::vector<std::string> r{"x-2",   "x-3",     "x+1",   "x^2-x-1",   "x^3+x+1", "x^2+1",
                                          "x^2-2", "x^2+x+1", "x^3-2", "x^2-3*x+1", "Q(t)"};
  return r;
}

inline RingPtr ring_at(std::size_t i) {
  static std::vector<RingPtr> cache;
  if (cache.empty())
    for (const auto& t : ring_texts()) cache.push_back(parse_ring(t));
  return cache[i];
}

inline const std::string& ring_text(std::size_t i) { return ring_texts()[i]; }

inline RingElement small_element(const RingPtr& r, std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<int> coef(-2, 2);
  for (;;) {
    std::vector<mpq_class> num;
    const std::size_t d = r->is_number_ring() ? r->degree() : 2;
    for (std::size_t i = 0; i < d; ++i) num.emplace_back(coef(rng));
    RingElement e = RingElement::from_poly(r, QPoly(num));
    if (!r->is_number_ring() && rng() % 3 == 0) {
      std::vector<mpq_class> den{mpq_class(1 + static_cast<int>(rng() % 2)), 1};
      e = RingElement::fraction(r, QPoly(num), QPoly(den));
    }
    if (!nonzero) return e;
    if (e.is_zero()) continue;
    try {
      (void)inv(e);
      return e;
    } catch (const Error&) {
    }
  }
}

inline AffineMap small_map(const RingPtr& r, std::mt19937_64& rng) {
  return AffineMap(small_element(r, rng, true), small_element(r, rng, false));
}

inline std::string pair_text(const AffineMap& f, const AffineMap& g) {
  return f.ratio().to_string() + "|" + f.shift().to_string() + "; " + g.ratio().to_string() + "|" +
         g.shift().to_string();
}

inline std::vector<SearchBudget> schedules() {
  std::vector<SearchBudget> s(3);
  s[0].relation_max_len = 4;
  s[0].precision_bits = 32;
  s[1].relation_max_len = 8;
  s[1].precision_bits = 64;
  s[2].relation_max_len = 10;
  s[2].precision_bits = 128;
  return s;
}

// Independent re-evaluation of a witness with the naive oracle arithmetic.
inline bool oracle_agrees(const RelationWitness& w, const AffineMap& f, const AffineMap& g) {
  if (!f.ring()->is_number_ring()) return true;
  oracle::Quotient q = testing::quotient(f.ring());
  std::vector<oracle::Map> gens{testing::naive(f), testing::naive(g)};
  std::vector<oracle::Map> invs{oracle::invert(q, gens[0]), oracle::invert(q, gens[1])};
  auto eval = [&](const Word& word) {
    oracle::Map out{q.constant(1), q.constant(0)};
    for (const auto& l : word.letters()) out = oracle::compose(q, out, l.exp > 0 ? gens[l.gen] : invs[l.gen]);
    return out;
  };
  return !(w.u == w.v) && eval(w.u) == eval(w.v);
}

inline Stats run(std::size_t n_cases, std::uint64_t seed, std::size_t n_conjugators) {
  Stats st;
  std::mt19937_64 rng(seed);
  const auto sched = schedules();
  auto fail = [&](std::size_t i, const std::string& what) {
    std::ostringstream os;
    os << "case " << i << ": " << what;
    st.failures.push_back(os.str());
  };

  struct Decided {
    AffineMap f, g;
    FreenessVerdict v;
  };
  std::vector<Decided> decided;

  for (std::size_t i = 0; i < n_cases; ++i) {
    const std::size_t ri = rng() % ring_texts().size();
    RingPtr r = ring_at(ri);
    AffineMap f = small_map(r, rng);
    AffineMap g = small_map(r, rng);
    ++st.cases;

    bool saw_free = false, saw_notfree = false;
    std::optional<FreenessVerdict> last_decided;
    for (const auto& b : sched) {
      FreenessVerdict v;
      try {
        v = decide_pair(f, g, b);
      } catch (const Error& e) {
        fail(i, std::string("decide_pair threw ") + e.what());
        continue;
      }
      saw_free |= v.tag == VerdictTag::Free;
      saw_notfree |= v.tag == VerdictTag::NotFree;
      if (v.witness) {
        ++st.witnesses;
        if (!verify_relation(*v.witness, f, g)) fail(i, "witness does not re-verify");
        if (!oracle_agrees(*v.witness, f, g)) fail(i, "witness rejected by the oracle");
      }
      if (v.certificate) {
        ++st.certificates;
        std::string why;
        if (!certificate_rechecks(r, certificate_json(*v.certificate, b.precision_bits), &why))
          fail(i, "certificate does not re-check: " + why);
      }
      if (v.tag != VerdictTag::Unknown) last_decided = v;
    }
    if (saw_free && saw_notfree) fail(i, "both free and not free");
    if (saw_free) ++st.free;
    else if (saw_notfree) ++st.notfree;
    else ++st.unknown;

    if (last_decided) {
      decided.push_back({f, g, *last_decided});
      json input{{"ring", ring_text(ri)}, {"gens", pair_text(f, g)}, {"pair", "g0,g1"}, {"relation_max_len", 10},
                 {"precision_bits", 64}};
      try {
        Artifact a = run_artifact("decide", input);
        json round = json::parse(a.doc.dump());
        CheckReport rep = check_artifact(round);
        ++st.artifacts_checked;
        if (!rep.ok) fail(i, "artifact check failed: " + (rep.problems.empty() ? "" : rep.problems.front()));
        if (rep.certificates + rep.witnesses == 0 && a.status == ArtifactStatus::Ok)
          fail(i, "decided artifact carries no certificate or witness");
      } catch (const std::exception& e) {
        fail(i, std::string("artifact round trip threw ") + e.what());
      }
    }
  }

  // Conjugation invariance on decided pairs.
  for (std::size_t k = 0; k < n_conjugators && !decided.empty(); ++k) {
    const Decided& d = decided[k % decided.size()];
    AffineMap w = small_map(d.f.ring(), rng);
    AffineMap cf = conjugate(d.f, w), cg = conjugate(d.g, w);
    FreenessVerdict cv = decide_pair(cf, cg, sched.back());
    ++st.conjugations;
    if (cv.tag != VerdictTag::Unknown && cv.tag != d.v.tag) fail(k, "conjugation changed the verdict");
    if (d.v.witness && !verify_relation(*d.v.witness, cf, cg)) fail(k, "witness does not transport");
    if (cv.witness && !verify_relation(*cv.witness, d.f, d.g)) fail(k, "witness does not transport back");
  }
  return st;
}

}  // namespace soundness

#endif  // AFFGROW_TESTS_SOUNDNESS_HPP_
