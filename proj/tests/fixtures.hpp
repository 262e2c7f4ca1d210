#pragma once

#include "lrkit/tableau.hpp"

namespace fixtures {

using lrkit::Partition;
using lrkit::SkewShape;
using lrkit::SkewTableau;

/// LRS tableau of shape (4,3,2,2,1)/(3,1), weight (3,3,1,1), n = 3.
inline SkewTableau worked_lrs() {
  return SkewTableau(SkewShape(Partition{4, 3, 2, 2, 1}, Partition{3, 1}), {{1}, {1, 2}, {1, 2}, {2, 3}, {4}});
}

/// Its recording tableau, weight (4,2,2).
inline SkewTableau worked_rec() {
  return SkewTableau(SkewShape(Partition{4, 3, 2, 2, 1}, Partition{3, 1}), {{1}, {2, 1}, {3, 2}, {3, 1}, {1}});
}

/// The orthogonal-transpose image of worked_lrs() in the 5 x 4 rectangle.
inline SkewTableau worked_transpose_image() {
  return SkewTableau(SkewShape(Partition{5, 4, 4, 3}, Partition{4, 3, 1}), {{1}, {1}, {1, 2, 2}, {1, 3, 3}});
}

inline SkewTableau rows(std::vector<std::vector<int>> r) { return SkewTableau::from_rows(r); }
inline SkewTableau column(std::vector<int> c) {
  return c.empty() ? SkewTableau() : SkewTableau::from_columns({std::move(c)});
}

}  // namespace fixtures
