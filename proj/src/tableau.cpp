#include "lrkit/tableau.hpp"

#include <algorithm>
#include <sstream>

#include "lrkit/error.hpp"

namespace lrkit {

namespace {

std::size_t idx(int one_based) { return static_cast<std::size_t>(one_based - 1); }

}  // namespace

SkewTableau::SkewTableau(SkewShape shape, const std::vector<std::vector<int>>& filled_rows)
    : shape_(std::move(shape)) {
  const Partition& out = shape_.outer();
  const Partition& in = shape_.inner();
  std::size_t expected_rows = static_cast<std::size_t>(out.length());
  // Trailing empty rows are tolerated; anything else must match the shape.
  for (std::size_t i = expected_rows; i < filled_rows.size(); ++i)
    if (!filled_rows[i].empty())
      throw InputError("filling has more rows than the outer shape " + out.to_string());
  rows_.resize(expected_rows);
  for (int i = 1; i <= out.length(); ++i) {
    const int width = out.row(i) - in.row(i);
    const std::vector<int> empty;
    const auto& given = idx(i) < filled_rows.size() ? filled_rows[idx(i)] : empty;
    if (static_cast<int>(given.size()) != width)
      throw InputError("row " + std::to_string(i) + " has " + std::to_string(given.size()) +
                       " entries, shape " + shape_.to_string() + " needs " +
                       std::to_string(width));
    auto& row = rows_[idx(i)];
    row.assign(static_cast<std::size_t>(in.row(i)), 0);
    for (int v : given) {
      if (v <= 0) throw InputError("tableau entries must be positive");
      row.push_back(v);
    }
  }
}

SkewTableau SkewTableau::from_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<int> lengths;
  for (const auto& r : rows) lengths.push_back(static_cast<int>(r.size()));
  return SkewTableau(SkewShape(Partition(lengths)), rows);
}

SkewTableau SkewTableau::from_columns(const std::vector<std::vector<int>>& columns) {
  std::vector<std::vector<int>> rows;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].empty())
      throw InputError("empty column in column list");
    if (j > 0 && columns[j].size() > columns[j - 1].size())
      throw InputError("columns must weakly decrease in height");
    for (std::size_t i = 0; i < columns[j].size(); ++i) {
      if (rows.size() <= i) rows.emplace_back();
      rows[i].push_back(columns[j][i]);
    }
  }
  return from_rows(rows);
}

SkewTableau SkewTableau::filled(SkewShape shape, int value) {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= shape.outer().length(); ++i)
    rows.emplace_back(static_cast<std::size_t>(shape.outer().row(i) - shape.inner().row(i)), value);
  return SkewTableau(std::move(shape), rows);
}

int SkewTableau::at(int row, int col) const {
  if (row < 1 || row > outer().length() || col < 1 || col > outer().row(row))
    throw PreconditionError("box outside the outer shape");
  return rows_[idx(row)][idx(col)];
}

void SkewTableau::set(Cell c, int value) {
  if (!shape_.contains_cell(c)) throw PreconditionError("box outside the skew shape");
  if (value <= 0) throw PreconditionError("tableau entries must be positive");
  rows_[idx(c.row)][idx(c.col)] = value;
}

std::vector<int> SkewTableau::row_entries(int row) const {
  if (row < 1 || row > outer().length()) return {};
  const auto& r = rows_[idx(row)];
  return {r.begin() + inner().row(row), r.end()};
}

std::vector<int> SkewTableau::column_entries(int col) const {
  std::vector<int> out;
  for (int i = 1; i <= outer().length() && outer().row(i) >= col; ++i)
    if (col > inner().row(i)) out.push_back(rows_[idx(i)][idx(col)]);
  return out;
}

std::vector<std::vector<int>> SkewTableau::columns() const {
  std::vector<std::vector<int>> out;
  for (int j = 1; j <= outer().row(1); ++j) out.push_back(column_entries(j));
  return out;
}

int SkewTableau::max_entry() const noexcept {
  int m = 0;
  for (const auto& r : rows_)
    for (int v : r) m = std::max(m, v);
  return m;
}

int WeightVector::of(int letter) const noexcept {
  if (letter < 1 || letter > static_cast<int>(counts.size())) return 0;
  return counts[idx(letter)];
}

int WeightVector::total() const noexcept {
  int s = 0;
  for (int c : counts) s += c;
  return s;
}

bool WeightVector::is_partition() const noexcept {
  return std::is_sorted(counts.begin(), counts.end(), std::greater<>());
}

Partition WeightVector::to_partition() const {
  if (!is_partition()) throw PreconditionError("weight is not a partition");
  return Partition(counts);
}

bool validate_ssyt(const SkewTableau& t) {
  const SkewShape& sh = t.shape();
  for (const Cell c : sh.cells()) {
    const int v = t.at(c);
    if (sh.contains_cell({c.row, c.col + 1}) && v > t.at(c.row, c.col + 1)) return false;
    if (sh.contains_cell({c.row + 1, c.col}) && v >= t.at(c.row + 1, c.col)) return false;
  }
  return true;
}

bool validate_ssyt(const SkewTableau& t, int m) { return validate_ssyt(t) && t.max_entry() <= m; }

WeightVector weight(const SkewTableau& t, int m) {
  WeightVector w;
  w.counts.assign(static_cast<std::size_t>(std::max(m > 0 ? m : t.max_entry(), 0)), 0);
  for (const Cell c : t.shape().cells()) {
    const int v = t.at(c);
    if (v > static_cast<int>(w.counts.size())) w.counts.resize(static_cast<std::size_t>(v), 0);
    ++w.counts[idx(v)];
  }
  return w;
}

Word reverse_row_word(const SkewTableau& t) {
  Word w;
  for (int i = 1; i <= t.outer().length(); ++i) {
    auto r = t.row_entries(i);
    w.insert(w.end(), r.rbegin(), r.rend());
  }
  return w;
}

Word column_reading_word(const SkewTableau& t) {
  Word w;
  for (int j = t.outer().row(1); j >= 1; --j) {
    auto c = t.column_entries(j);
    w.insert(w.end(), c.begin(), c.end());
  }
  return w;
}

bool is_yamanouchi(const Word& w) {
  std::vector<int> seen;
  for (int x : w) {
    if (x < 1) return false;
    if (static_cast<int>(seen.size()) < x) seen.resize(static_cast<std::size_t>(x), 0);
    ++seen[idx(x)];
    if (x > 1 && seen[idx(x)] > seen[idx(x - 1)]) return false;
  }
  return true;
}

std::string render(const SkewTableau& t) {
  int width = 1;
  for (const Cell c : t.shape().cells()) width = std::max<int>(width, static_cast<int>(std::to_string(t.at(c)).size()));
  std::ostringstream os;
  for (int i = 1; i <= t.outer().length(); ++i) {
    for (int j = 1; j <= t.outer().row(i); ++j) {
      std::string cell = j <= t.inner().row(i) ? "." : std::to_string(t.at(i, j));
      cell.resize(static_cast<std::size_t>(width), ' ');
      os << cell << (j < t.outer().row(i) ? " " : "");
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace lrkit
