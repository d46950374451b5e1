#pragma once

#include <array>
#include <string>

namespace ncp {

// A finite alphabet of single-character colours with an involutive inverse map.
struct ColourSet {
  std::string letters;          // distinct colour characters, in declaration order
  std::array<char, 256> inv{};  // involution, defined on letters only

  bool has(char c) const;
  char inverse(char c) const;
  void validate_word(const std::string& w) const;

  // Reverses the word and inverts every letter.
  std::string reverse_invert(const std::string& w) const;

  std::string decl() const;  // "x:x,y:y" form, round-trips with parse

  static ColourSet self_inverse(const std::string& letters);
  static ColourSet xy();  // {x, y}, both self-inverse
  static ColourSet parse(const std::string& decl);
};

using Word = std::string;

}  // namespace ncp
