#include "ncp/colour.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncp {

bool ColourSet::has(char c) const { return letters.find(c) != std::string::npos; }

char ColourSet::inverse(char c) const {
  if (!has(c)) throw std::invalid_argument(std::string("unknown colour '") + c + "'");
  return inv[static_cast<unsigned char>(c)];
}

void ColourSet::validate_word(const std::string& w) const {
  for (char c : w)
    if (!has(c)) throw std::invalid_argument(std::string("unknown colour '") + c + "' in word \"" + w + "\"");
}

std::string ColourSet::reverse_invert(const std::string& w) const {
  std::string out(w.rbegin(), w.rend());
  for (char& c : out) c = inverse(c);
  return out;
}

std::string ColourSet::decl() const {
  std::string out;
  for (char c : letters) {
    if (!out.empty()) out += ',';
    out += c;
    out += ':';
    out += inv[static_cast<unsigned char>(c)];
  }
  return out;
}

ColourSet ColourSet::self_inverse(const std::string& letters) {
  ColourSet cs;
  cs.letters = letters;
  for (char c : letters) {
    if (cs.inv[static_cast<unsigned char>(c)] != 0)
      throw std::invalid_argument("duplicate colour in colour set");
    cs.inv[static_cast<unsigned char>(c)] = c;
  }
  return cs;
}

ColourSet ColourSet::xy() { return self_inverse("xy"); }

ColourSet ColourSet::parse(const std::string& decl) {
  ColourSet cs;
  size_t pos = 0;
  while (pos < decl.size()) {
    size_t end = decl.find(',', pos);
    if (end == std::string::npos) end = decl.size();
    std::string item = decl.substr(pos, end - pos);
    if (item.size() != 3 || item[1] != ':')
      throw std::invalid_argument("malformed colour declaration item \"" + item + "\"");
    char c = item[0], ci = item[2];
    if (cs.has(c)) throw std::invalid_argument("duplicate colour in declaration");
    cs.letters += c;
    cs.inv[static_cast<unsigned char>(c)] = ci;
    pos = end + 1;
  }
  if (cs.letters.empty()) throw std::invalid_argument("empty colour declaration");
  for (char c : cs.letters) {
    char ci = cs.inv[static_cast<unsigned char>(c)];
    if (!cs.has(ci) || cs.inv[static_cast<unsigned char>(ci)] != c)
      throw std::invalid_argument("colour inverse map is not an involution");
  }
  return cs;
}

}  // namespace ncp
