#ifndef AFFGROW_AFFINE_HPP_
#define AFFGROW_AFFINE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affgrow/ring.hpp"

namespace affgrow {

// z -> a z + b with a invertible; the matrix (a b; 0 1).
class AffineMap {
 public:
  // Errors: MixedParents, ZeroInput / ZeroDivisor when a is not invertible.
  AffineMap(RingElement a, RingElement b);
  static AffineMap identity(const RingPtr& ring);
  static AffineMap translation(const RingElement& b);
  static AffineMap homothety(const RingElement& a);  // fixes 0

  const RingElement& ratio() const { return a_; }
  const RingElement& shift() const { return b_; }
  const RingPtr& ring() const { return a_.ring(); }

  RingElement operator()(const RingElement& z) const { return a_ * z + b_; }

  bool is_identity() const { return a_.is_one() && b_.is_zero(); }
  bool is_translation() const { return a_.is_one(); }

  friend bool operator==(const AffineMap& f, const AffineMap& g) {
    return f.a_ == g.a_ && f.b_ == g.b_;
  }
  friend bool operator!=(const AffineMap& f, const AffineMap& g) { return !(f == g); }

  std::size_t hash() const noexcept;
  // Total order on canonical forms: ratio first, then translation part.
  int compare(const AffineMap& o) const;
  std::string to_string() const;

 private:
  struct Unchecked {};
  AffineMap(RingElement a, RingElement b, Unchecked) : a_(std::move(a)), b_(std::move(b)) {}
  friend AffineMap compose(const AffineMap& f, const AffineMap& g);
  friend AffineMap invert(const AffineMap& f);

  RingElement a_;
  RingElement b_;
};

struct AffineMapHash {
  std::size_t operator()(const AffineMap& f) const noexcept { return f.hash(); }
};

// (f o g)(z) = f(g(z)).
AffineMap compose(const AffineMap& f, const AffineMap& g);
AffineMap invert(const AffineMap& f);
AffineMap map_pow(const AffineMap& f, long k);
// w o f o w^-1
AffineMap conjugate(const AffineMap& f, const AffineMap& w);
bool commute(const AffineMap& f, const AffineMap& g);

enum class MapTag { Identity, Translation, Homothety };

struct MapClass {
  MapTag tag;
  std::optional<RingElement> fixed_point;  // Homothety only
};

// Errors: ZeroDivisor when 1 - a is a zero divisor (reducible modulus).
MapClass classify_map(const AffineMap& f);
std::string to_string(MapTag tag);

// Letters index generators; exponent is +1 or -1.
struct Letter {
  std::size_t gen;
  int exp;
  friend bool operator==(const Letter&, const Letter&) = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  // Positive word from generator indices.
  static Word positive(const std::vector<std::size_t>& gens);
  // g^k expanded into |k| letters.
  static Word power(std::size_t gen, long k);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool is_positive() const { return positive_; }

  Word& append(const Word& o);
  friend Word operator*(Word a, const Word& b) { return a.append(b); }
  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  // Shortlex with generator index, then exponent (+1 before -1).
  friend bool operator<(const Word& a, const Word& b);

  // Space-separated names, inverse letters as "name^-1".
  std::string to_string(const std::vector<std::string>& names) const;
  // Accepts "a b a^-1", "a*b^2", and concatenated single-character names
  // ("bbab"). Errors: Parse.
  static Word parse(const std::string& text, const std::vector<std::string>& names);

 private:
  std::vector<Letter> letters_;
  bool positive_ = true;
};

// Letters compose left to right with the leftmost letter applied last:
// eval("b b a b") = B o B o A o B. Errors: IndexOutOfRange.
AffineMap eval_word(const Word& word, const std::vector<AffineMap>& generators);

// Conjugates by the unique affine map sending (fix f, fix g) to (0, 1).
// Errors: NotTwoHomotheties, EqualFixedPoints.
struct CanonicalPair {
  AffineMap first;
  AffineMap second;
  AffineMap conjugator;
};
CanonicalPair canonical_pair(const AffineMap& f, const AffineMap& g);

enum class GroupClass { VirtuallyNilpotent, PolycyclicNotVN, NotPolycyclic, Unknown };
std::string to_string(GroupClass c);

// Determined by the generator ratios' algebraic type. Errors: RequiresField
// for number rings not known to be fields.
GroupClass classify_group(const std::vector<AffineMap>& generators);

}  // namespace affgrow

#endif  // AFFGROW_AFFINE_HPP_
