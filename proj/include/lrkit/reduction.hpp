#pragma once

#include <optional>
#include <vector>

#include "lrkit/insertion.hpp"

namespace lrkit {

/// King's condition G(k,1) >= 2k-1 on the first column. When it fails,
/// `first_fail_row` is the first offending row i; then G(i-1,1) = 2i-3 and
/// G(i,1) = 2i-2.
struct SymplecticVerdict {
  bool is_symplectic = true;
  std::optional<int> first_fail_row;
};

SymplecticVerdict symplectic_check(const Column& first_column);
SymplecticVerdict symplectic_check(const SkewTableau& t);
bool is_symplectic(const Column& c);
bool is_symplectic(const SkewTableau& t);

struct RemovalResult {
  /// rem(a), a subsequence of a made of (odd, odd+1) pairs.
  std::vector<int> removed;
  /// red(a) = a with rem(a) deleted.
  Column reduced;
};

/// rem(a_1..a_l) = rem(a_1..a_{l-2}) + (a_{l-1}, a_l) when a_l is even,
/// a_{l-1} = a_l - 1 and a_l < 2l - |rem(a_1..a_{l-2})| - 1; otherwise
/// rem(a_1..a_{l-1}); empty for l <= 1.
RemovalResult removal_subword(const Column& a);

/// red(a); always symplectic.
Column reduce(const Column& a);

/// suc(s) = red(s_1) ⊙ s_{>=2}. Fixed points are exactly the symplectic tableaux.
SkewTableau successor(const SkewTableau& s);

}  // namespace lrkit
