#include "knotzeta/group_word.hpp"

#include <algorithm>

namespace knotzeta {

GroupWord freely_reduced(const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

GroupWord inverse(const GroupWord& w) {
  GroupWord out(w.rbegin(), w.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return out;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

int exponent_sum(const GroupWord& w) {
  int s = 0;
  for (const auto& l : w) s += l.exponent;
  return s;
}

std::string to_string(const GroupWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    s += 'x' + std::to_string(l.generator + 1);
    if (l.exponent != 1) s += "^" + std::to_string(l.exponent);
  }
  return s;
}

}  // namespace knotzeta
