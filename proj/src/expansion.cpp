#include "lrkit/expansion.hpp"

#include <algorithm>

#include "lrkit/enumeration.hpp"
#include "lrkit/error.hpp"
#include "lrkit/lr_map.hpp"
#include "lrkit/reduction.hpp"

namespace lrkit {

std::vector<int> tail_lengths(const Column& a, int l) {
  const int k = a.length();
  if (!is_symplectic(a)) throw PreconditionError("ejected column " + a.to_string() + " is not symplectic");
  if (l < k || (l - k) % 2 != 0)
    throw PreconditionError("column length " + std::to_string(l) + " incompatible with " + a.to_string());
  if (k == 0) return {l};

  std::vector<int> lengths;
  lengths.push_back(a[1] % 2 == 0 ? a[1] - 2 : a[1] - 1);
  for (int i = 1; i < k; ++i) {
    const bool lo_even = a[i] % 2 == 0;
    const bool hi_even = a[i + 1] % 2 == 0;
    const int d = a[i + 1] - a[i];
    const bool wide = d >= 2 * i + 1;
    if ((lo_even && hi_even) || (!lo_even && !hi_even && wide))
      lengths.push_back(d - 2);
    else if ((lo_even && !hi_even) || (!lo_even && hi_even && wide))
      lengths.push_back(d - 1);
    else
      lengths.push_back(0);
  }
  int used = k;
  for (int x : lengths) used += x;
  if (l - used < 0)
    throw ExpansionError(0, "no column of length " + std::to_string(l) + " reduces to " +
                                a.to_string() + " (tail remainder " + std::to_string(l - used) + ")");
  lengths.push_back(l - used);
  return lengths;
}

Column build_column(const Column& a, const std::vector<int>& lengths, int n) {
  if (static_cast<int>(lengths.size()) != a.length() + 1)
    throw PreconditionError("expected " + std::to_string(a.length() + 1) + " tail lengths");
  std::vector<int> col;
  for (int v = 1; v <= lengths[0]; ++v) col.push_back(v);
  for (int i = 1; i <= a.length(); ++i) {
    const int ai = a[i];
    const int tail = lengths[static_cast<std::size_t>(i)];
    col.push_back(ai);
    const int shift = ai % 2 == 0 ? 0 : 1;
    for (int j = 1; j <= tail; ++j) col.push_back(ai + shift + j);
  }
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (col[i] > 2 * n)
      throw ExpansionError(0, "rebuilt column entry " + std::to_string(col[i]) + " exceeds " +
                                  std::to_string(2 * n));
    if (i > 0 && col[i] <= col[i - 1])
      throw ExpansionError(0, "rebuilt column is not strictly increasing at position " +
                                  std::to_string(i + 1));
  }
  return Column(std::move(col));
}

std::optional<Column> reduction_preimage(const Column& a, int l, int n) {
  const int k = a.length();
  if (l < k || (l - k) % 2 != 0 || a.max_entry() > 2 * n) return std::nullopt;
  const auto& entries = a.entries();
  auto has = [&](int v) { return std::binary_search(entries.begin(), entries.end(), v); };
  std::vector<int> free_pairs;
  for (int j = 1; j <= n; ++j)
    if (!has(2 * j - 1) && !has(2 * j)) free_pairs.push_back(j);
  const int pairs = (l - k) / 2;
  if (pairs > static_cast<int>(free_pairs.size())) return std::nullopt;

  // Walk the pair subsets of size `pairs` in lexicographic order.
  std::vector<int> pick(static_cast<std::size_t>(pairs));
  for (int i = 0; i < pairs; ++i) pick[static_cast<std::size_t>(i)] = i;
  const int m = static_cast<int>(free_pairs.size());
  for (;;) {
    std::vector<int> b = entries;
    for (int idx : pick) {
      const int j = free_pairs[static_cast<std::size_t>(idx)];
      b.push_back(2 * j - 1);
      b.push_back(2 * j);
    }
    std::sort(b.begin(), b.end());
    Column candidate(std::move(b));
    if (reduce(candidate) == a) return candidate;
    int i = pairs - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - pairs + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < pairs; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return std::nullopt;
}

ExpansionStepResult expand_step(const SkewTableau& s, const Partition& target, int n,
                                ExpansionMethod method) {
  if (!s.is_straight() || !validate_ssyt(s, 2 * n))
    throw PreconditionError("base must be a straight SSYT over [2n]");
  if (!is_vertical_strip(s.outer(), target))
    throw PreconditionError(target.to_string() + "/" + s.outer().to_string() + " is not a vertical strip");
  if ((target.size() - s.outer().size()) % 2 != 0)
    throw PreconditionError("strip " + target.to_string() + "/" + s.outer().to_string() + " has odd size");

  ExpansionStepResult res;
  res.step.base = s;
  res.step.target_shape = target;
  if (target == s.outer()) {
    if (!is_symplectic(s)) throw ExpansionError(0, "non-symplectic base with an empty strip");
    res.step.ejected_column = Column(s.column_entries(1));
    res.tableau = s;
    return res;
  }

  std::vector<int> rho;
  for (int part : target.parts()) rho.push_back(part - 1);
  PieriSplit split = pieri_reverse(s, Partition(rho));
  const Column& a = split.column;
  res.step.ejected_column = a;
  const int l = target.length();
  if (!is_symplectic(a)) throw ExpansionError(0, "ejected column " + a.to_string() + " is not symplectic");
  if (l + a.length() > 2 * n)
    throw ExpansionError(0, "inequality l + |a| <= 2n fails: l = " + std::to_string(l) +
                                ", |a| = " + std::to_string(a.length()));

  Column b;
  if (method == ExpansionMethod::closed_form) {
    res.step.tail_lengths = tail_lengths(a, l);
    b = build_column(a, res.step.tail_lengths, n);
    if (reduce(b) != a)
      throw ExpansionError(0, "rebuilt column " + b.to_string() + " reduces to " + reduce(b).to_string() +
                                  ", not " + a.to_string());
  } else {
    auto found = reduction_preimage(a, l, n);
    if (!found)
      throw ExpansionError(0, "no column of length " + std::to_string(l) + " reduces to " + a.to_string());
    b = std::move(*found);
  }

  SkewTableau t = prepend_column(b, split.rest);
  if (!validate_ssyt(t))
    throw ExpansionError(0, "column " + b.to_string() + " does not fit before the remaining columns");
  if (successor(t) != s) throw ExpansionError(0, "successor of the rebuilt tableau differs from the base");
  res.tableau = std::move(t);
  return res;
}

SkewTableau expand_one_string(const SkewTableau& s, const SkewShape& strip, int n, ExpansionMethod method) {
  if (strip.inner() != s.outer())
    throw PreconditionError("strip inner shape " + strip.inner().to_string() + " differs from " +
                            s.outer().to_string());
  return expand_step(s, strip.outer(), n, method).tableau;
}

SkewTableau expand(const SkewTableau& s, const SkewTableau& q, int n, ExpansionMethod method) {
  const RecValidation v = validate_rec(q, n);
  if (!v.valid) {
    std::string why = v.violated ? std::string(to_string(*v.violated)) : "shape range";
    throw PreconditionError("not a recording tableau: fails " + why);
  }
  if (!s.is_straight() || s.outer() != q.inner())
    throw PreconditionError("P shape " + s.outer().to_string() + " differs from the inner shape " +
                            q.inner().to_string());
  if (!validate_ssyt(s, 2 * n) || !is_symplectic(s))
    throw PreconditionError("P is not a symplectic tableau over [2n]");

  SkewTableau cur = s;
  for (int k = static_cast<int>(v.mu_chain.size()) - 1; k >= 1; --k) {
    try {
      cur = expand_step(cur, v.mu_chain[static_cast<std::size_t>(k - 1)], n, method).tableau;
    } catch (const ExpansionError& e) {
      throw ExpansionError(k, e.reason());
    }
  }
  return cur;
}

std::optional<SkewTableau> brute_inverse_successor(const SkewTableau& s, const Partition& source_shape,
                                                   int n) {
  std::optional<SkewTableau> found;
  for_each_ssyt(SkewShape(source_shape), 2 * n, [&](const SkewTableau& t) {
    if (!found && successor(t) == s) found = t;
  });
  return found;
}

}  // namespace lrkit
