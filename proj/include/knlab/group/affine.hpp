#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "knlab/error.hpp"

namespace knlab::group {

// z -> eps z + v on C^2 = (Lambda_1 + Lambda_2) (x) R, with eps = (eps1, eps2)
// diagonal and v written in the basis (e1, e1', e2, e2'). Shifts are stored
// doubled so that half-periods stay integral.
struct AffineElement {
  std::array<int, 2> signs{1, 1};
  std::array<std::int64_t, 4> shift2{0, 0, 0, 0};

  static AffineElement identity() { return {}; }
  static AffineElement translation(std::array<std::int64_t, 4> v) {
    for (auto& c : v) c *= 2;
    return {{1, 1}, v};
  }

  // Sign acting on basis coordinate k: e1, e1' carry eps1; e2, e2' carry eps2.
  int sign_on(std::size_t k) const { return k < 2 ? signs[0] : signs[1]; }

  friend AffineElement operator*(const AffineElement& a, const AffineElement& b) {
    AffineElement r;
    r.signs = {a.signs[0] * b.signs[0], a.signs[1] * b.signs[1]};
    for (std::size_t k = 0; k < 4; ++k) r.shift2[k] = a.shift2[k] + a.sign_on(k) * b.shift2[k];
    return r;
  }

  AffineElement inverse() const {
    AffineElement r;
    r.signs = signs;
    for (std::size_t k = 0; k < 4; ++k) r.shift2[k] = -sign_on(k) * shift2[k];
    return r;
  }

  bool is_identity() const { return *this == identity(); }
  bool is_translation() const { return signs[0] == 1 && signs[1] == 1; }

  friend bool operator==(const AffineElement&, const AffineElement&) = default;
  friend bool operator<(const AffineElement& a, const AffineElement& b) {
    return std::tie(a.signs, a.shift2) < std::tie(b.signs, b.shift2);
  }

  std::string str() const {
    auto half = [](std::int64_t v) {
      if (v % 2 == 0) return std::to_string(v / 2);
      return std::to_string(v) + "/2";
    };
    std::string s = std::string("(") + (signs[0] > 0 ? "+" : "-") + "," + (signs[1] > 0 ? "+" : "-") + "; ";
    for (std::size_t k = 0; k < 4; ++k) s += (k ? "," : "") + half(shift2[k]);
    return s + ")";
  }
};

inline AffineElement power(const AffineElement& a, std::int64_t n) {
  AffineElement base = n < 0 ? a.inverse() : a;
  if (n < 0) n = -n;
  AffineElement r;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

// gamma1 (z1, z2) = (z1 + e1/2, -z2) and gamma2 (z1, z2) = (-z1, z2 + e2/2).
inline AffineElement gamma1() { return {{1, -1}, {1, 0, 0, 0}}; }
inline AffineElement gamma2() { return {{-1, 1}, {0, 0, 1, 0}}; }

// A word as a list of (symbol, exponent) syllables. Parenthesized subwords
// are expanded while parsing, so the result is flat.
using Syllable = std::pair<std::string, std::int64_t>;
using Word = std::vector<Syllable>;

namespace detail {

inline std::string canonical_symbol(const std::string& s) {
  static const std::map<std::string, std::string> aliases{
      {"g1", "g1"},      {"g2", "g2"},     {"gamma1", "g1"}, {"gamma2", "g2"}, {"\xce\xb3\xe2\x82\x81", "g1"},
      {"\xce\xb3\xe2\x82\x82", "g2"},       {"\xce\xb3" "1", "g1"}, {"\xce\xb3" "2", "g2"}, {"e1", "e1"},
      {"e2", "e2"},      {"e1'", "e1'"},   {"e2'", "e2'"},   {"t_e1", "e1"},   {"t_e2", "e2"},
      {"t_e1'", "e1'"},  {"t_e2'", "e2'"}, {"1", "1"},
  };
  auto it = aliases.find(s);
  if (it == aliases.end()) throw DomainError("unknown symbol '" + s + "' in word");
  return it->second;
}

class WordParser {
 public:
  explicit WordParser(std::string_view text) : t_(text) {}

  Word parse() {
    Word w = sequence();
    skip();
    if (pos_ != t_.size()) throw DomainError("unexpected '" + std::string(1, t_[pos_]) + "' in word");
    return w;
  }

 private:
  void skip() {
    while (pos_ < t_.size() && (std::isspace(static_cast<unsigned char>(t_[pos_])) || t_[pos_] == '*' || t_[pos_] == '.')) ++pos_;
  }

  Word sequence() {
    Word w;
    while (true) {
      skip();
      if (pos_ >= t_.size() || t_[pos_] == ')') return w;
      Word f = factor();
      w.insert(w.end(), f.begin(), f.end());
    }
  }

  std::int64_t exponent() {
    skip();
    if (pos_ >= t_.size() || t_[pos_] != '^') return 1;
    ++pos_;
    skip();
    bool neg = false;
    if (pos_ < t_.size() && (t_[pos_] == '-' || t_[pos_] == '+')) neg = t_[pos_++] == '-';
    std::size_t start = pos_;
    while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    if (start == pos_) throw DomainError("missing exponent after '^'");
    const std::int64_t n = std::stoll(std::string(t_.substr(start, pos_ - start)));
    return neg ? -n : n;
  }

  Word factor() {
    Word base;
    if (t_[pos_] == '(') {
      ++pos_;
      base = sequence();
      if (pos_ >= t_.size() || t_[pos_] != ')') throw DomainError("unbalanced parenthesis in word");
      ++pos_;
    } else {
      base.push_back({symbol(), 1});
    }
    const std::int64_t n = exponent();
    Word out;
    if (n == 0) return out;
    Word unit = base;
    if (n < 0) {
      unit.clear();
      for (auto it = base.rbegin(); it != base.rend(); ++it) unit.push_back({it->first, -it->second});
    }
    for (std::int64_t k = 0; k < (n < 0 ? -n : n); ++k) out.insert(out.end(), unit.begin(), unit.end());
    return out;
  }

  std::string symbol() {
    std::size_t start = pos_;
    while (pos_ < t_.size()) {
      const unsigned char c = static_cast<unsigned char>(t_[pos_]);
      if (std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80) {
        ++pos_;
      } else {
        break;
      }
    }
    if (start == pos_) throw DomainError("expected a generator at '" + std::string(t_.substr(pos_)) + "'");
    return canonical_symbol(std::string(t_.substr(start, pos_ - start)));
  }

  std::string_view t_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Word parse_word(std::string_view text) {
  Word raw = detail::WordParser(text).parse();
  Word out;
  for (auto& s : raw)
    if (s.first != "1") out.push_back(std::move(s));
  return out;
}

// The standard assignment of symbols to affine maps.
inline AffineElement symbol_value(const std::string& s) {
  if (s == "g1") return gamma1();
  if (s == "g2") return gamma2();
  if (s == "e1") return AffineElement::translation({1, 0, 0, 0});
  if (s == "e1'") return AffineElement::translation({0, 1, 0, 0});
  if (s == "e2") return AffineElement::translation({0, 0, 1, 0});
  if (s == "e2'") return AffineElement::translation({0, 0, 0, 1});
  throw DomainError("no value for symbol '" + s + "'");
}

inline AffineElement evaluate(const Word& w) {
  AffineElement r;
  for (const auto& [s, n] : w) r = r * power(symbol_value(s), n);
  return r;
}

inline AffineElement evaluate(std::string_view text) { return evaluate(parse_word(text)); }

// lhs = rhs in the affine model.
inline bool verify_relation(std::string_view lhs, std::string_view rhs) { return evaluate(lhs) == evaluate(rhs); }

// Image in G = (Z/2)^2 under gamma1 -> (1,0), gamma2 -> (0,1). gamma1 has
// signs (+,-), so the first coordinate records eps2 = -1.
inline std::array<int, 2> linear_part_map(const AffineElement& a) {
  return {a.signs[1] < 0 ? 1 : 0, a.signs[0] < 0 ? 1 : 0};
}

// Membership in the lattice Z^4 = ker(Gamma -> G).
inline bool in_lattice(const AffineElement& a) {
  if (!a.is_translation()) return false;
  for (auto v : a.shift2)
    if (v % 2 != 0) return false;
  return true;
}

// Membership in Gamma: the shift must reduce to the shift of the coset
// representative with the same linear part.
inline bool in_gamma(const AffineElement& a) {
  AffineElement rep;
  const auto lp = linear_part_map(a);
  if (lp[0]) rep = rep * gamma1();
  if (lp[1]) rep = rep * gamma2();
  return in_lattice(a * rep.inverse());
}

}  // namespace knlab::group
