#include "affgrow/parse.hpp"

#include <cctype>
#include <optional>

#include "affgrow/error.hpp"
#include "affgrow/rational.hpp"

namespace affgrow {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Recursive-descent expression parser, generic over the value domain.
//   expr  := term (('+'|'-') term)*
//   term  := unary (('*'|'/')? unary)*      (juxtaposition multiplies)
//   unary := ('+'|'-') unary | power
//   power := atom ('^' integer)?
//   atom  := rational | var | '(' expr ')'
template <typename Domain>
class ExprParser {
 public:
  using Value = typename Domain::Value;

  ExprParser(std::string_view text, const Domain& dom) : s_(text), dom_(dom) {}

  Value parse() {
    Value v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Parse, why + " at offset " + std::to_string(pos_) + " in '" +
                                      std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool at_atom_start() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || dom_.is_var(c);
  }

  Value expr() {
    Value acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc = dom_.add(acc, term());
      } else if (peek('-')) {
        ++pos_;
        acc = dom_.sub(acc, term());
      } else {
        return acc;
      }
    }
  }

  Value term() {
    Value acc = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = dom_.mul(acc, unary());
      } else if (peek('/')) {
        ++pos_;
        acc = dom_.div(acc, unary());
      } else if (at_atom_start()) {
        acc = dom_.mul(acc, power());
      } else {
        return acc;
      }
    }
  }

  Value unary() {
    if (peek('-')) {
      ++pos_;
      return dom_.neg(unary());
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Value power() {
    Value base = atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      bool neg = false;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
        neg = s_[pos_] == '-';
        ++pos_;
      }
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an integer exponent");
      long e = std::stol(std::string(s_.substr(start, pos_ - start)));
      return dom_.pow(base, neg ? -e : e);
    }
    return base;
  }

  Value atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (dom_.is_var(c)) {
      ++pos_;
      return dom_.var();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return dom_.constant(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const Domain& dom_;
  std::size_t pos_ = 0;
};

struct PolyDomain {
  using Value = QPoly;
  char var_name;
  bool is_var(char c) const { return std::tolower(static_cast<unsigned char>(c)) == var_name; }
  QPoly var() const { return QPoly::monomial(1, 1); }
  QPoly constant(const mpq_class& q) const { return QPoly::constant(q); }
  QPoly add(const QPoly& a, const QPoly& b) const { return a + b; }
  QPoly sub(const QPoly& a, const QPoly& b) const { return a - b; }
  QPoly mul(const QPoly& a, const QPoly& b) const { return a * b; }
  QPoly neg(const QPoly& a) const { return -a; }
  QPoly div(const QPoly& a, const QPoly& b) const {
    if (b.degree() != 0) throw Error(ErrorCode::Parse, "polynomial division only by nonzero constants");
    return a * (1 / b.coeffs()[0]);
  }
  QPoly pow(const QPoly& a, long e) const {
    if (e < 0) throw Error(ErrorCode::Parse, "negative exponent in a polynomial");
    QPoly acc = QPoly::constant(1);
    for (long i = 0; i < e; ++i) acc = acc * a;
    return acc;
  }
};

struct ElementDomain {
  using Value = RingElement;
  RingPtr ring;
  bool is_var(char c) const {
    return std::tolower(static_cast<unsigned char>(c)) == ring->variable();
  }
  RingElement var() const { return RingElement::generator(ring); }
  RingElement constant(const mpq_class& q) const { return RingElement::constant(ring, q); }
  RingElement add(const RingElement& a, const RingElement& b) const { return a + b; }
  RingElement sub(const RingElement& a, const RingElement& b) const { return a - b; }
  RingElement mul(const RingElement& a, const RingElement& b) const { return a * b; }
  RingElement neg(const RingElement& a) const { return -a; }
  RingElement div(const RingElement& a, const RingElement& b) const { return a * inv(b); }
  RingElement pow(const RingElement& a, long e) const { return affgrow::pow(a, e); }
};

bool looks_like_list(std::string_view s) {
  for (char c : s)
    if (std::isalpha(static_cast<unsigned char>(c))) return false;
  return s.find(',') != std::string_view::npos;
}

}  // namespace

QPoly parse_qpoly(std::string_view text, char var) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::Parse, "empty polynomial");
  if (looks_like_list(text)) {
    std::vector<mpq_class> coeffs;
    std::size_t start = 0;
    for (;;) {
      std::size_t comma = text.find(',', start);
      coeffs.push_back(parse_rational(text.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return QPoly(std::move(coeffs));
  }
  PolyDomain dom{var};
  return ExprParser<PolyDomain>(text, dom).parse();
}

std::vector<mpz_class> parse_modulus(std::string_view text) {
  QPoly p = parse_qpoly(text, 'x');
  if (p.is_zero()) throw Error(ErrorCode::EmptyModulus, "zero modulus");
  std::vector<mpz_class> out;
  for (const auto& c : p.coeffs()) {
    if (c.get_den() != 1)
      throw Error(ErrorCode::NonIntegerModulus, "coefficient " + to_string(c) + " is not an integer");
    out.push_back(c.get_num());
  }
  return out;
}

RingPtr parse_ring(std::string_view text) {
  std::string_view t = trim(text);
  if (t == "Q(t)" || t == "QQ(t)" || t == "t" || t == "q(t)") return function_field();
  return number_ring(parse_modulus(t));
}

RingElement parse_element(const RingPtr& ring, std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::Parse, "empty element");
  ElementDomain dom{ring};
  return ExprParser<ElementDomain>(text, dom).parse();
}

NamedGenerators parse_generators(const RingPtr& ring, std::string_view text) {
  std::string_view t = trim(text);
  NamedGenerators out;
  if (t.substr(0, 5) == "gamma") {
    const RingElement x = RingElement::generator(ring);
    out.maps.push_back(AffineMap(x, RingElement::zero(ring)));
    out.maps.push_back(AffineMap(x, RingElement::one(ring)));
    out.names = {"A", "B"};
    return out;
  }
  std::size_t start = 0;
  for (;;) {
    std::size_t semi = t.find(';', start);
    std::string_view item = trim(t.substr(start, semi - start));
    if (!item.empty()) {
      std::size_t bar = item.find('|');
      if (bar == std::string_view::npos)
        throw Error(ErrorCode::Parse, "generator '" + std::string(item) + "' is not of the form a|b");
      RingElement a = parse_element(ring, item.substr(0, bar));
      RingElement b = parse_element(ring, item.substr(bar + 1));
      out.maps.emplace_back(std::move(a), std::move(b));
      out.names.push_back("g" + std::to_string(out.maps.size() - 1));
    }
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (out.maps.empty()) throw Error(ErrorCode::Parse, "empty generator set");
  return out;
}

}  // namespace affgrow
