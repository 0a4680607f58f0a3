#pragma once

#include "blp/linalg.hpp"

#include <initializer_list>
#include <vector>

namespace blp::testing {

inline RatVector vec(std::initializer_list<int> values) {
  RatVector v;
  for (int x : values) v.emplace_back(x);
  return v;
}

inline RatMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<RatVector> rs;
  for (const auto& row : rows) rs.push_back(vec(row));
  return RatMatrix::from_rows(rs);
}

inline Rat frac(long num, long den) { return Rat(num) / den; }

}  // namespace blp::testing
