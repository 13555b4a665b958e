#pragma once

#include <compare>
#include <string>
#include <vector>

namespace knotzeta {

/// x_generator^exponent with exponent in {+1, -1}; generators are 0-based.
struct Letter {
  int generator = 0;
  int exponent = 1;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using GroupWord = std::vector<Letter>;

/// Cancels adjacent x x^-1 pairs until none remain.
GroupWord freely_reduced(const GroupWord& w);
GroupWord inverse(const GroupWord& w);
GroupWord operator*(const GroupWord& a, const GroupWord& b);
int exponent_sum(const GroupWord& w);

/// "x1 x3 x2^-1 x3^-1" with 1-based generator numbers; "1" for the empty word.
std::string to_string(const GroupWord& w);

}  // namespace knotzeta
