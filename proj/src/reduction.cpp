#include "lrkit/reduction.hpp"

#include <algorithm>

#include "lrkit/error.hpp"

namespace lrkit {

SymplecticVerdict symplectic_check(const Column& first_column) {
  for (int k = 1; k <= first_column.length(); ++k)
    if (first_column[k] < 2 * k - 1) return {false, k};
  return {};
}

SymplecticVerdict symplectic_check(const SkewTableau& t) {
  if (!t.is_straight()) throw InputError("symplectic check needs a straight-shape tableau");
  return symplectic_check(Column(t.column_entries(1)));
}

bool is_symplectic(const Column& c) { return symplectic_check(c).is_symplectic; }
bool is_symplectic(const SkewTableau& t) { return symplectic_check(t).is_symplectic; }

RemovalResult removal_subword(const Column& a) {
  const int l = a.length();
  // prefix_rem[k] holds the positions (1-based) of rem(a_1..a_k).
  std::vector<std::vector<int>> prefix_rem(static_cast<std::size_t>(std::max(l, 0) + 1));
  for (int k = 2; k <= l; ++k) {
    const auto& two_back = prefix_rem[static_cast<std::size_t>(k - 2)];
    const int ak = a[k];
    const int removed_before = static_cast<int>(two_back.size());
    if (ak % 2 == 0 && a[k - 1] == ak - 1 && ak < 2 * k - removed_before - 1) {
      auto next = two_back;
      next.push_back(k - 1);
      next.push_back(k);
      prefix_rem[static_cast<std::size_t>(k)] = std::move(next);
    } else {
      prefix_rem[static_cast<std::size_t>(k)] = prefix_rem[static_cast<std::size_t>(k - 1)];
    }
  }
  const auto& positions = prefix_rem[static_cast<std::size_t>(l)];
  RemovalResult res;
  std::vector<int> kept;
  std::size_t p = 0;
  for (int i = 1; i <= l; ++i) {
    if (p < positions.size() && positions[p] == i) {
      res.removed.push_back(a[i]);
      ++p;
    } else {
      kept.push_back(a[i]);
    }
  }
  res.reduced = Column(std::move(kept));
  return res;
}

Column reduce(const Column& a) { return removal_subword(a).reduced; }

SkewTableau successor(const SkewTableau& s) {
  auto [first, rest] = split_first_column(s);
  return pieri_insert(reduce(first), rest);
}

}  // namespace lrkit
