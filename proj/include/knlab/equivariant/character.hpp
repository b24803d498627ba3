#pragma once

#include <array>
#include <string>

#include "knlab/error.hpp"

namespace knlab::equiv {

// g1^a1 g2^a2 in G = (Z/2)^2.
struct GroupElement {
  int a1 = 0;
  int a2 = 0;

  static std::array<GroupElement, 4> all() { return {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}}; }
  friend GroupElement operator*(GroupElement x, GroupElement y) { return {x.a1 ^ y.a1, x.a2 ^ y.a2}; }
  friend bool operator==(GroupElement, GroupElement) = default;
};

// A sign character of G, written by its values (chi(g1), chi(g2)).
struct CharacterG {
  int s1 = 1;
  int s2 = 1;

  static CharacterG trivial() { return {1, 1}; }

  // Index 0..3 in the order ++, +-, -+, --.
  int index() const { return 2 * (s1 < 0 ? 1 : 0) + (s2 < 0 ? 1 : 0); }
  static CharacterG from_index(int i) {
    if (i < 0 || i > 3) throw DomainError("character index out of range");
    return {(i & 2) ? -1 : 1, (i & 1) ? -1 : 1};
  }
  static std::array<CharacterG, 4> all() { return {from_index(0), from_index(1), from_index(2), from_index(3)}; }

  static CharacterG parse(const std::string& s) {
    if (s.size() != 2) throw DomainError("character must be written as two signs, got '" + s + "'");
    auto sign = [&](char c) {
      if (c == '+') return 1;
      if (c == '-') return -1;
      throw DomainError("bad sign '" + std::string(1, c) + "' in character");
    };
    return {sign(s[0]), sign(s[1])};
  }

  int operator()(GroupElement g) const { return (g.a1 ? s1 : 1) * (g.a2 ? s2 : 1); }

  friend CharacterG operator*(CharacterG a, CharacterG b) { return {a.s1 * b.s1, a.s2 * b.s2}; }
  friend bool operator==(CharacterG, CharacterG) = default;

  std::string str() const { return std::string(s1 > 0 ? "+" : "-") + (s2 > 0 ? "+" : "-"); }
};

// How the fibre coordinate of a double cover transforms under G.
struct TwistCharacter {
  CharacterG chi;

  // gamma1 fixes w and gamma2 negates it.
  static TwistCharacter canonical() { return {{1, -1}}; }
};

// Dimensions indexed by character.
struct DimensionTable {
  std::array<int, 4> dims{};

  int& operator[](CharacterG c) { return dims[static_cast<std::size_t>(c.index())]; }
  int operator[](CharacterG c) const { return dims[static_cast<std::size_t>(c.index())]; }

  int total() const { return dims[0] + dims[1] + dims[2] + dims[3]; }

  friend bool operator==(const DimensionTable&, const DimensionTable&) = default;

  // (++, +-, -+, --)
  std::string str() const {
    return "(" + std::to_string(dims[0]) + "," + std::to_string(dims[1]) + "," + std::to_string(dims[2]) + "," +
           std::to_string(dims[3]) + ")";
  }
};

// dim^chi = sum over chi1 chi2 twist = chi of d1^chi1 d2^chi2.
inline DimensionTable product_eigen_dims(const DimensionTable& d1, const DimensionTable& d2, CharacterG twist) {
  DimensionTable out;
  for (const auto& c1 : CharacterG::all())
    for (const auto& c2 : CharacterG::all()) out[c1 * c2 * twist] += d1[c1] * d2[c2];
  return out;
}

}  // namespace knlab::equiv
