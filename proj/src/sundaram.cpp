#include "lrkit/sundaram.hpp"

#include <algorithm>
#include <map>

#include "lrkit/error.hpp"
#include "lrkit/lr_map.hpp"

namespace lrkit {

std::string_view to_string(LrsCondition c) {
  switch (c) {
    case LrsCondition::Semistandard: return "SSYT";
    case LrsCondition::Yamanouchi: return "Yamanouchi";
    case LrsCondition::EvenWeight: return "EvenWeight";
    case LrsCondition::Sundaram: return "Sundaram";
  }
  return "?";
}

LrsValidation validate_lrs(const SkewTableau& t, int n) {
  auto fail = [](LrsCondition c) { return LrsValidation{false, c}; };
  if (t.outer().length() > 2 * n || t.inner().length() > n || !validate_ssyt(t, 2 * n))
    return fail(LrsCondition::Semistandard);
  if (!is_yamanouchi(column_reading_word(t))) return fail(LrsCondition::Yamanouchi);
  const WeightVector w = weight(t);
  if (!w.is_partition() || !is_even(w.to_partition())) return fail(LrsCondition::EvenWeight);
  for (const Cell c : t.shape().cells()) {
    const int v = t.at(c);
    if (v % 2 == 1 && c.row > n + (v - 1) / 2) return fail(LrsCondition::Sundaram);
  }
  return {true, std::nullopt};
}

StringDecomposition string_decomposition(const SkewTableau& t) {
  if (!validate_ssyt(t)) throw InputError("string decomposition needs a semistandard tableau");
  StringDecomposition res;
  const Partition& inner = t.inner();
  std::vector<int> cur = t.outer().parts();
  res.chain.push_back(t.outer());
  while (Partition(cur) != inner) {
    // Rightmost box of each value among the boxes still present.
    std::map<int, Cell> rightmost;
    for (int i = 1; i <= static_cast<int>(cur.size()); ++i)
      for (int j = inner.row(i) + 1; j <= cur[static_cast<std::size_t>(i - 1)]; ++j) {
        auto [it, fresh] = rightmost.try_emplace(t.at(i, j), Cell{i, j});
        if (!fresh && j > it->second.col) it->second = Cell{i, j};
      }
    std::vector<Cell> string;
    for (const auto& [value, cell] : rightmost) string.push_back(cell);
    std::sort(string.begin(), string.end());
    std::vector<int> next = cur;
    for (const Cell c : string) {
      auto& len = next[static_cast<std::size_t>(c.row - 1)];
      if (len != c.col)
        throw InputError("erasing " + std::to_string(t.at(c)) + " at row " +
                         std::to_string(c.row) + " leaves a hole");
      --len;
    }
    for (std::size_t i = 1; i < next.size(); ++i)
      if (next[i] > next[i - 1]) throw InputError("string erasure does not leave a partition");
    Partition next_p(next);
    if (!is_vertical_strip(next_p, Partition(cur)))
      throw InputError("string is not a vertical strip");
    res.strings.push_back(std::move(string));
    res.chain.push_back(next_p);
    cur = std::move(next);
  }
  return res;
}

SkewTableau lozenge(const SkewTableau& t, int n) {
  const LrsValidation v = validate_lrs(t, n);
  if (!v.valid)
    throw PreconditionError("not an LRS tableau: fails " + std::string(to_string(*v.violated)));
  const StringDecomposition d = string_decomposition(t);
  SkewTableau q = t;
  for (std::size_t k = 0; k < d.strings.size(); ++k)
    for (const Cell c : d.strings[k]) q.set(c, static_cast<int>(k) + 1);
  return q;
}

SkewTableau lozenge_inv(const SkewTableau& q, int n) {
  const RecValidation v = validate_rec(q, n);
  if (!v.valid) {
    std::string why = v.violated ? std::string(to_string(*v.violated)) : "shape range";
    throw PreconditionError("not a recording tableau: fails " + why);
  }
  SkewTableau t = q;
  std::map<int, int> next_value;
  for (const Cell c : q.shape().cells()) t.set(c, ++next_value[q.at(c)]);
  const LrsValidation lv = validate_lrs(t, n);
  if (!lv.valid)
    throw PreconditionError("relabelled tableau fails " + std::string(to_string(*lv.violated)));
  return t;
}

SkewTableau blacklozenge(const SkewTableau& t, int n, std::optional<int> rect_rows,
                         std::optional<int> rect_cols) {
  const int rows = rect_rows.value_or(t.outer().length());
  const int cols = rect_cols.value_or(t.outer().row(1));
  if (rows < t.outer().length() || cols < t.outer().row(1))
    throw InputError("shape " + t.outer().to_string() + " does not fit in a " +
                     std::to_string(rows) + "x" + std::to_string(cols) + " rectangle");
  const SkewTableau q = lozenge(t, n);
  const Partition lam_t = conjugate(t.outer());
  const Partition mu_t = conjugate(t.inner());
  std::vector<int> outer, inner;
  for (int i = 1; i <= cols; ++i) {
    outer.push_back(rows - mu_t.row(cols + 1 - i));
    inner.push_back(rows - lam_t.row(cols + 1 - i));
  }
  SkewTableau res = SkewTableau::filled(SkewShape(Partition(outer), Partition(inner)), 1);
  for (const Cell c : q.shape().cells()) res.set({cols + 1 - c.col, rows + 1 - c.row}, q.at(c));
  return res;
}

bool validate_lr(const SkewTableau& t) {
  return validate_ssyt(t) && is_yamanouchi(reverse_row_word(t));
}

}  // namespace lrkit
