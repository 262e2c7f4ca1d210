#include "lrkit/insertion.hpp"

#include <algorithm>
#include <sstream>

#include "lrkit/error.hpp"

namespace lrkit {

namespace {

using Columns = std::vector<std::vector<int>>;

void require_straight(const SkewTableau& t, const char* what) {
  if (!t.is_straight()) throw InputError(std::string(what) + " needs a straight-shape tableau");
}

}  // namespace

Column::Column(std::initializer_list<int> entries) : Column(std::vector<int>(entries)) {}

Column::Column(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1) throw InputError("column entries must be positive");
    if (i > 0 && entries_[i] <= entries_[i - 1])
      throw InputError("column " + to_string() + " is not strictly increasing");
  }
}

SkewTableau Column::to_tableau() const {
  if (entries_.empty()) return {};
  return SkewTableau::from_columns({entries_});
}

std::string Column::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  os << ')';
  return os.str();
}

InsertionResult column_insert(int x, const SkewTableau& t) {
  require_straight(t, "column insertion");
  if (x < 1) throw InputError("inserted letter must be positive");
  Columns cols = t.columns();
  InsertionResult res;
  for (std::size_t j = 0;; ++j) {
    const int col = static_cast<int>(j) + 1;
    if (j == cols.size()) {
      cols.push_back({x});
      res.new_cell = {1, col};
      res.route.push_back({res.new_cell, x});
      break;
    }
    auto& c = cols[j];
    auto it = std::lower_bound(c.begin(), c.end(), x);
    if (it == c.end()) {
      c.push_back(x);
      res.new_cell = {static_cast<int>(c.size()), col};
      res.route.push_back({res.new_cell, x});
      break;
    }
    res.route.push_back({{static_cast<int>(it - c.begin()) + 1, col}, x});
    std::swap(*it, x);
  }
  res.tableau = SkewTableau::from_columns(cols);
  return res;
}

ReverseInsertionResult reverse_column_insert(const SkewTableau& t, Cell cell) {
  require_straight(t, "reverse column insertion");
  const Partition& sh = t.outer();
  if (cell.col < 1 || cell.row < 1 || sh.column_height(cell.col) != cell.row)
    throw PreconditionError("box (" + std::to_string(cell.row) + "," + std::to_string(cell.col) +
                            ") is not at the bottom of a column of " + sh.to_string());
  Columns cols = t.columns();
  ReverseInsertionResult res;
  auto j = static_cast<std::size_t>(cell.col - 1);
  int y = cols[j].back();
  res.route.push_back({cell, y});
  cols[j].pop_back();
  if (cols[j].empty()) cols.pop_back();
  while (j-- > 0) {
    auto& c = cols[j];
    // Largest entry <= y; exists because t is semistandard.
    auto it = std::upper_bound(c.begin(), c.end(), y);
    if (it == c.begin()) throw PreconditionError("reverse insertion on a non-semistandard tableau");
    --it;
    res.route.push_back({{static_cast<int>(it - c.begin()) + 1, static_cast<int>(j) + 1}, y});
    std::swap(*it, y);
  }
  res.ejected = y;
  res.tableau = cols.empty() ? SkewTableau{} : SkewTableau::from_columns(cols);
  return res;
}

SkewTableau pieri_insert(const Column& s, const SkewTableau& t) {
  SkewTableau out = t;
  for (int x : s.entries()) out = column_insert(x, out).tableau;
  return out;
}

PieriSplit pieri_reverse(const SkewTableau& u, const Partition& strip_inner) {
  require_straight(u, "Pieri reversal");
  if (!is_vertical_strip(strip_inner, u.outer()))
    throw PreconditionError(u.outer().to_string() + "/" + strip_inner.to_string() +
                            " is not a vertical strip");
  SkewTableau cur = u;
  std::vector<int> ejected;
  for (int i = u.outer().length(); i >= 1; --i) {
    if (u.outer().row(i) == strip_inner.row(i)) continue;
    auto r = reverse_column_insert(cur, {i, u.outer().row(i)});
    ejected.push_back(r.ejected);
    cur = std::move(r.tableau);
  }
  std::reverse(ejected.begin(), ejected.end());
  return {Column(std::move(ejected)), std::move(cur)};
}

std::pair<Column, SkewTableau> split_first_column(const SkewTableau& t) {
  require_straight(t, "column split");
  if (t.empty()) return {Column{}, SkewTableau{}};
  Columns cols = t.columns();
  Column first(cols.front());
  cols.erase(cols.begin());
  return {std::move(first), cols.empty() ? SkewTableau{} : SkewTableau::from_columns(cols)};
}

SkewTableau prepend_column(const Column& first, const SkewTableau& rest) {
  require_straight(rest, "column concatenation");
  Columns cols = rest.columns();
  if (first.empty()) {
    if (!cols.empty()) throw InputError("cannot prepend an empty column to a nonempty tableau");
    return {};
  }
  cols.insert(cols.begin(), first.entries());
  return SkewTableau::from_columns(cols);
}

}  // namespace lrkit
