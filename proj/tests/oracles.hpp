#pragma once

// Reference implementations used only by the tests. Each one follows the
// textbook definition directly and shares no code path with the library
// routine it checks.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "lrkit/tableau.hpp"

namespace oracle {

using Seq = std::vector<int>;

/// rem by the literal two-branch recursion.
inline Seq rem(const Seq& a) {
  const std::size_t l = a.size();
  if (l <= 1) return {};
  const Seq two_back = rem(Seq(a.begin(), a.end() - 2));
  const int al = a[l - 1];
  if (al % 2 == 0 && a[l - 2] == al - 1 &&
      al < 2 * static_cast<int>(l) - static_cast<int>(two_back.size()) - 1) {
    Seq out = two_back;
    out.push_back(a[l - 2]);
    out.push_back(al);
    return out;
  }
  return rem(Seq(a.begin(), a.end() - 1));
}

/// Membership of a_i (1-based) in rem(a), decided position by position:
/// an odd a_i is removed with its right neighbour a_i + 1 when
/// a_i < 2i - |rem(a_1..a_{i-1})|; an even a_i with its left neighbour when
/// a_i < 2i - |rem(a_1..a_{i-2})| - 1.
inline bool in_rem_positionwise(const Seq& a, int i) {
  const int l = static_cast<int>(a.size());
  const int ai = a[static_cast<std::size_t>(i - 1)];
  auto prefix_rem = [&](int len) { return static_cast<int>(rem(Seq(a.begin(), a.begin() + len)).size()); };
  if (ai % 2 == 1)
    return i < l && a[static_cast<std::size_t>(i)] == ai + 1 && ai < 2 * i - prefix_rem(i - 1);
  return i > 1 && a[static_cast<std::size_t>(i - 2)] == ai - 1 && ai < 2 * i - prefix_rem(i - 2) - 1;
}

inline bool symplectic(const Seq& col) {
  for (std::size_t k = 0; k < col.size(); ++k)
    if (col[k] < 2 * static_cast<int>(k + 1) - 1) return false;
  return true;
}

/// Every strictly increasing sequence of length l over [1, m].
inline std::vector<Seq> increasing_sequences(int m, int l) {
  std::vector<Seq> out;
  Seq cur;
  std::function<void(int)> go = [&](int from) {
    if (static_cast<int>(cur.size()) == l) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v <= m; ++v) {
      cur.push_back(v);
      go(v + 1);
      cur.pop_back();
    }
  };
  go(1);
  return out;
}

/// Number of SSYT of straight shape over [m] by the hook-content formula.
inline long hook_content(const std::vector<int>& shape, int m) {
  std::vector<int> conj;
  for (int j = 1; !shape.empty() && j <= shape[0]; ++j) {
    int h = 0;
    for (int r : shape)
      if (r >= j) ++h;
    conj.push_back(h);
  }
  // Exact rational product kept as numerator / denominator.
  long double num = 1, den = 1;
  for (std::size_t i = 0; i < shape.size(); ++i)
    for (int j = 1; j <= shape[i]; ++j) {
      const int content = j - 1 - static_cast<int>(i);
      const int hook = (shape[i] - j) + (conj[static_cast<std::size_t>(j - 1)] - static_cast<int>(i) - 1) + 1;
      num *= m + content;
      den *= hook;
    }
  return static_cast<long>(num / den + 0.5L);
}

/// Every filling of the skew shape with entries in [1, m], semistandard or not,
/// passed to `visit` (dense rows, zero on inner boxes).
inline void all_fillings(const std::vector<int>& outer, const std::vector<int>& inner, int m,
                         const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  std::vector<std::vector<int>> rows(outer.size());
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const int in = i < inner.size() ? inner[i] : 0;
    rows[i].assign(static_cast<std::size_t>(outer[i]), 0);
    for (int j = in; j < outer[i]; ++j) cells.emplace_back(i, static_cast<std::size_t>(j));
  }
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == cells.size()) {
      visit(rows);
      return;
    }
    for (int v = 1; v <= m; ++v) {
      rows[cells[k].first][cells[k].second] = v;
      go(k + 1);
    }
  };
  go(0);
}

/// Semistandard check on dense rows (zero marks inner boxes).
inline bool semistandard(const std::vector<std::vector<int>>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] == 0) continue;
      if (j + 1 < rows[i].size() && rows[i][j] > rows[i][j + 1]) return false;
      if (i + 1 < rows.size() && j < rows[i + 1].size() && rows[i + 1][j] != 0 && rows[i][j] >= rows[i + 1][j])
        return false;
    }
  return true;
}

/// The five recording-tableau axioms evaluated straight from their statements
/// on dense rows (zero on inner boxes).
inline bool recording(const std::vector<std::vector<int>>& rows, int n) {
  const std::size_t r = rows.size();
  int inner_len = 0;
  for (std::size_t i = 0; i < r; ++i)
    if (!rows[i].empty() && rows[i][0] == 0) inner_len = static_cast<int>(i) + 1;
  if (static_cast<int>(r) > 2 * n || inner_len > n) return false;
  int top = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const int v = rows[i][j];
      if (v == 0) continue;
      top = std::max(top, v);
      if (j + 1 < rows[i].size() && v <= rows[i][j + 1]) return false;
      if (i + 1 < r && j < rows[i + 1].size() && v < rows[i + 1][j]) return false;
    }
  auto count_upto = [&](std::size_t last_row, int k) {
    int c = 0;
    for (std::size_t i = 0; i < std::min(last_row, r); ++i)
      for (int v : rows[i])
        if (v == k) ++c;
    return c;
  };
  for (int k = 1; k <= top; ++k) {
    const int total = count_upto(r, k);
    if (total % 2 != 0) return false;
    // Length of the shape formed by inner boxes and labels >= k.
    int len = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (int v : rows[i])
        if (v == 0 || v >= k) len = static_cast<int>(i) + 1;
    if (total < 2 * (len - n)) return false;
    if (k < top)
      for (std::size_t rr = 1; rr <= r; ++rr)
        if (count_upto(rr, k + 1) > count_upto(rr, k)) return false;
  }
  return true;
}

/// Reads a word off dense rows column by column from the rightmost.
inline std::vector<int> column_word(const std::vector<std::vector<int>>& rows) {
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.size());
  std::vector<int> w;
  for (std::size_t j = width; j-- > 0;)
    for (const auto& row : rows)
      if (j < row.size() && row[j] != 0) w.push_back(row[j]);
  return w;
}

inline bool yamanouchi(const std::vector<int>& w) {
  std::map<int, int> c;
  for (int x : w) {
    ++c[x];
    if (x > 1 && c[x] > c[x - 1]) return false;
  }
  return true;
}

}  // namespace oracle
