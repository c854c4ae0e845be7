#include "affgrow/affine.hpp"

#include <cctype>
#include <sstream>

#include "affgrow/error.hpp"
#include "affgrow/rational.hpp"

namespace affgrow {

AffineMap::AffineMap(RingElement a, RingElement b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.ring() != b_.ring() && !a_.ring()->same_as(*b_.ring()))
    throw Error(ErrorCode::MixedParents, "ratio and translation live in different rings");
  (void)inv(a_);  // throws ZeroInput / ZeroDivisor
}

AffineMap AffineMap::identity(const RingPtr& ring) {
  return AffineMap(RingElement::one(ring), RingElement::zero(ring), Unchecked{});
}

AffineMap AffineMap::translation(const RingElement& b) {
  return AffineMap(RingElement::one(b.ring()), b, Unchecked{});
}

AffineMap AffineMap::homothety(const RingElement& a) {
  return AffineMap(a, RingElement::zero(a.ring()));
}

std::size_t AffineMap::hash() const noexcept {
  std::size_t seed = a_.hash();
  hash_combine(seed, b_.hash());
  return seed;
}

int AffineMap::compare(const AffineMap& o) const {
  int c = a_.compare(o.a_);
  return c != 0 ? c : b_.compare(o.b_);
}

std::string AffineMap::to_string() const {
  return "(" + a_.to_string() + " | " + b_.to_string() + ")";
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  return AffineMap(f.a_ * g.a_, f.a_ * g.b_ + f.b_, AffineMap::Unchecked{});
}

AffineMap invert(const AffineMap& f) {
  RingElement ai = inv(f.a_);
  RingElement bi = -(ai * f.b_);
  return AffineMap(std::move(ai), std::move(bi), AffineMap::Unchecked{});
}

AffineMap map_pow(const AffineMap& f, long k) {
  AffineMap base = k < 0 ? invert(f) : f;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  AffineMap acc = AffineMap::identity(f.ring());
  while (e > 0) {
    if (e & 1UL) acc = compose(acc, base);
    e >>= 1;
    if (e > 0) base = compose(base, base);
  }
  return acc;
}

AffineMap conjugate(const AffineMap& f, const AffineMap& w) {
  return compose(compose(w, f), invert(w));
}

bool commute(const AffineMap& f, const AffineMap& g) { return compose(f, g) == compose(g, f); }

std::string to_string(MapTag tag) {
  switch (tag) {
    case MapTag::Identity: return "identity";
    case MapTag::Translation: return "translation";
    case MapTag::Homothety: return "homothety";
  }
  return "?";
}

MapClass classify_map(const AffineMap& f) {
  if (f.ratio().is_one())
    return {f.shift().is_zero() ? MapTag::Identity : MapTag::Translation, std::nullopt};
  RingElement one = RingElement::one(f.ring());
  RingElement p = f.shift() * inv(one - f.ratio());
  return {MapTag::Homothety, std::move(p)};
}

// --- words ------------------------------------------------------------------

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_) {
    if (l.exp != 1 && l.exp != -1) throw Error(ErrorCode::Precondition, "letter exponent must be +-1");
    if (l.exp < 0) positive_ = false;
  }
}

Word Word::positive(const std::vector<std::size_t>& gens) {
  std::vector<Letter> v;
  v.reserve(gens.size());
  for (auto g : gens) v.push_back({g, 1});
  return Word(std::move(v));
}

Word Word::power(std::size_t gen, long k) {
  std::vector<Letter> v(static_cast<std::size_t>(k < 0 ? -k : k), Letter{gen, k < 0 ? -1 : 1});
  return Word(std::move(v));
}

Word& Word::append(const Word& o) {
  letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
  positive_ = positive_ && o.positive_;
  return *this;
}

bool operator<(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Letter& x = a.letters_[i];
    const Letter& y = b.letters_[i];
    if (x.gen != y.gen) return x.gen < y.gen;
    if (x.exp != y.exp) return x.exp > y.exp;
  }
  return false;
}

std::string Word::to_string(const std::vector<std::string>& names) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out << ' ';
    const Letter& l = letters_[i];
    out << (l.gen < names.size() ? names[l.gen] : "g" + std::to_string(l.gen));
    if (l.exp < 0) out << "^-1";
  }
  return out.str();
}

namespace {

std::optional<std::size_t> find_name(const std::vector<std::string>& names, const std::string& n) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == n) return i;
  return std::nullopt;
}

}  // namespace

Word Word::parse(const std::string& text, const std::vector<std::string>& names) {
  std::vector<Letter> out;
  std::string spaced;
  for (char c : text) spaced.push_back(c == '*' ? ' ' : c);
  std::istringstream in(spaced);
  std::string tok;
  while (in >> tok) {
    long exp = 1;
    std::string name = tok;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      try {
        std::size_t used = 0;
        exp = std::stol(tok.substr(caret + 1), &used);
        if (used != tok.size() - caret - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "bad exponent in '" + tok + "'");
      }
    }
    std::vector<std::size_t> gens;
    if (auto idx = find_name(names, name)) {
      gens.push_back(*idx);
    } else {
      // Concatenated single-character names, e.g. "bbab".
      for (char c : name) {
        auto i = find_name(names, std::string(1, c));
        if (!i) throw Error(ErrorCode::Parse, "unknown generator '" + name + "'");
        gens.push_back(*i);
      }
      if (exp != 1 && gens.size() != 1)
        throw Error(ErrorCode::Parse, "exponent on a multi-letter token '" + tok + "'");
    }
    for (std::size_t g : gens) {
      const long n = exp < 0 ? -exp : exp;
      for (long k = 0; k < n; ++k) out.push_back({g, exp < 0 ? -1 : 1});
    }
  }
  return Word(std::move(out));
}

AffineMap eval_word(const Word& word, const std::vector<AffineMap>& generators) {
  if (generators.empty()) throw Error(ErrorCode::IndexOutOfRange, "no generators");
  std::vector<std::optional<AffineMap>> inverses(generators.size());
  AffineMap acc = AffineMap::identity(generators.front().ring());
  for (const Letter& l : word.letters()) {
    if (l.gen >= generators.size())
      throw Error(ErrorCode::IndexOutOfRange, "letter index " + std::to_string(l.gen));
    if (l.exp > 0) {
      acc = compose(acc, generators[l.gen]);
    } else {
      if (!inverses[l.gen]) inverses[l.gen] = invert(generators[l.gen]);
      acc = compose(acc, *inverses[l.gen]);
    }
  }
  return acc;
}

CanonicalPair canonical_pair(const AffineMap& f, const AffineMap& g) {
  MapClass cf = classify_map(f);
  MapClass cg = classify_map(g);
  if (cf.tag != MapTag::Homothety || cg.tag != MapTag::Homothety)
    throw Error(ErrorCode::NotTwoHomotheties, "canonical_pair needs two homotheties");
  RingElement diff = *cg.fixed_point - *cf.fixed_point;
  if (diff.is_zero()) throw Error(ErrorCode::EqualFixedPoints, "both maps fix " + cf.fixed_point->to_string());
  RingElement scale = inv(diff);
  AffineMap gamma(scale, -(scale * *cf.fixed_point));
  return {conjugate(f, gamma), conjugate(g, gamma), gamma};
}

std::string to_string(GroupClass c) {
  switch (c) {
    case GroupClass::VirtuallyNilpotent: return "VirtuallyNilpotent";
    case GroupClass::PolycyclicNotVN: return "PolycyclicNotVN";
    case GroupClass::NotPolycyclic: return "NotPolycyclic";
    case GroupClass::Unknown: return "Unknown";
  }
  return "Unknown";
}

GroupClass classify_group(const std::vector<AffineMap>& generators) {
  if (generators.empty()) return GroupClass::VirtuallyNilpotent;
  const RingPtr& ring = generators.front().ring();
  bool all_roots_of_unity = true;
  bool all_units = true;
  if (!ring->is_number_ring()) {
    for (const auto& g : generators) {
      auto q = g.ratio().as_rational();
      if (!q) return GroupClass::Unknown;
      const bool torsion = (*q == 1 || *q == -1);
      all_roots_of_unity = all_roots_of_unity && torsion;
      all_units = all_units && torsion;
    }
  } else {
    for (const auto& g : generators) {
      const RingElement& a = g.ratio();
      if (!is_unit(a)) {
        all_units = false;
        all_roots_of_unity = false;
        break;
      }
      if (all_roots_of_unity && !is_root_of_unity(a)) all_roots_of_unity = false;
    }
  }
  if (all_roots_of_unity) return GroupClass::VirtuallyNilpotent;
  if (all_units) return GroupClass::PolycyclicNotVN;
  return GroupClass::NotPolycyclic;
}

}  // namespace affgrow
