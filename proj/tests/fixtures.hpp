#pragma once

#include <vector>

#include "topolab/core.hpp"

namespace fixtures {

using topolab::FiniteSpace;
using topolab::PointSet;

inline PointSet S(std::initializer_list<int> xs) { return PointSet::of(xs); }

inline FiniteSpace from_opens(int n, std::vector<PointSet> opens) { return FiniteSpace::from_opens(n, opens); }

// {0} open, 1 in its closure.
inline FiniteSpace sierpinski() { return from_opens(2, {S({}), S({0}), S({0, 1})}); }

inline FiniteSpace oddeven4() {
  const std::vector<PointSet> blocks{S({0, 1}), S({2, 3})};
  return FiniteSpace::generate(4, blocks);
}

inline FiniteSpace khalimsky5() {
  const std::vector<PointSet> sub{S({0, 1}), S({1, 2, 3}), S({3, 4})};
  return FiniteSpace::generate(5, sub);
}

// {0, {0}, X} on three points.
inline FiniteSpace focal3() { return from_opens(3, {S({}), S({0}), S({0, 1, 2})}); }

// {0, {0}, {0,1}, {0,2}, X} on three points.
inline FiniteSpace focal3_fine() { return from_opens(3, {S({}), S({0}), S({0, 1}), S({0, 2}), S({0, 1, 2})}); }

}  // namespace fixtures
