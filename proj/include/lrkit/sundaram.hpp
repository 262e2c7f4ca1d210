#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "lrkit/tableau.hpp"

namespace lrkit {

enum class LrsCondition { Semistandard, Yamanouchi, EvenWeight, Sundaram };

std::string_view to_string(LrsCondition c);

struct LrsValidation {
  bool valid = false;
  std::optional<LrsCondition> violated;
};

/// Checks, in order: semistandard over [2n]; the column reading word is
/// Yamanouchi; the weight is an even partition; an entry 2k+1 only occurs in
/// rows i <= n+k. Shapes with outer beyond 2n rows or inner beyond n rows are
/// reported as failing the first condition.
LrsValidation validate_lrs(const SkewTableau& t, int n);

/// Nested strips obtained by repeatedly erasing, for every value present, the
/// rightmost box holding it.
struct StringDecomposition {
  /// chain[0] = outer shape, ..., chain.back() = inner shape.
  std::vector<Partition> chain;
  /// strings[k-1] = boxes of chain[k-1] / chain[k], top to bottom.
  std::vector<std::vector<Cell>> strings;
};

/// Throws InputError when t is not semistandard or when some erasure step does
/// not leave a partition.
StringDecomposition string_decomposition(const SkewTableau& t);

/// Relabels the k-th string with the constant k. Throws PreconditionError
/// unless validate_lrs(t, n) holds.
SkewTableau lozenge(const SkewTableau& t, int n);

/// Fills the boxes labelled k with 1, 2, ... top to bottom. Throws
/// PreconditionError unless q is a valid recording tableau, or if the result
/// fails validate_lrs.
SkewTableau lozenge_inv(const SkewTableau& q, int n);

/// lozenge(t), then the box (i, j) moves to (rect_cols+1-j, rect_rows+1-i).
/// The default rectangle is (rows of outer) x (first part of outer). Throws
/// InputError if the outer shape does not fit.
SkewTableau blacklozenge(const SkewTableau& t, int n, std::optional<int> rect_rows = std::nullopt,
                         std::optional<int> rect_cols = std::nullopt);

/// Skew SSYT whose reverse row word is Yamanouchi.
bool validate_lr(const SkewTableau& t);

}  // namespace lrkit
