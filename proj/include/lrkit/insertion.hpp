#pragma once

#include <span>
#include <string>
#include <vector>

#include "lrkit/tableau.hpp"

namespace lrkit {

/// Strictly increasing word of positive letters.
class Column {
 public:
  Column() = default;
  Column(std::initializer_list<int> entries);
  explicit Column(std::vector<int> entries);

  const std::vector<int>& entries() const noexcept { return entries_; }
  int length() const noexcept { return static_cast<int>(entries_.size()); }
  bool empty() const noexcept { return entries_.empty(); }
  /// 1-based.
  int operator[](int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }
  int max_entry() const noexcept { return entries_.empty() ? 0 : entries_.back(); }

  SkewTableau to_tableau() const;
  std::string to_string() const;

  friend bool operator==(const Column&, const Column&) = default;
  friend auto operator<=>(const Column&, const Column&) = default;

 private:
  std::vector<int> entries_;
};

/// One displacement along a bumping route: `value` came to rest in (or was
/// taken from) `cell`.
struct Bump {
  Cell cell;
  int value = 0;

  friend bool operator==(const Bump&, const Bump&) = default;
};

struct InsertionResult {
  SkewTableau tableau;
  Cell new_cell;
  std::vector<Bump> route;
};

struct ReverseInsertionResult {
  int ejected = 0;
  SkewTableau tableau;
  std::vector<Bump> route;
};

struct PieriSplit {
  Column column;
  SkewTableau rest;
};

/// Schensted column insertion x -> t. Throws InputError unless t is straight.
InsertionResult column_insert(int x, const SkewTableau& t);

/// Inverse of column_insert for the box `cell`, which must end its column.
ReverseInsertionResult reverse_column_insert(const SkewTableau& t, Cell cell);

/// s ⊙ t: inserts s_1, s_2, ... in increasing order.
SkewTableau pieri_insert(const Column& s, const SkewTableau& t);

/// Inverse of pieri_insert: reverse-inserts the boxes of sh(u)/strip_inner
/// from bottom to top. Throws PreconditionError unless that is a vertical strip.
PieriSplit pieri_reverse(const SkewTableau& u, const Partition& strip_inner);

/// First column and the remaining columns of a straight tableau.
std::pair<Column, SkewTableau> split_first_column(const SkewTableau& t);

/// `first` placed as a new first column to the left of `rest` (no bumping).
SkewTableau prepend_column(const Column& first, const SkewTableau& rest);

}  // namespace lrkit
