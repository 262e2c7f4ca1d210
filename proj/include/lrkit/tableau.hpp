#pragma once

#include <string>
#include <vector>

#include "lrkit/partition.hpp"

namespace lrkit {

using Word = std::vector<int>;

/// A filling of a skew shape by positive integers. Storage is dense per row:
/// every row of the outer shape holds one slot per box, with zero in the boxes
/// of the inner shape. Semistandardness is not an invariant of the type, since
/// recording tableaux decrease along rows.
class SkewTableau {
 public:
  SkewTableau() = default;

  /// `filled_rows[i]` lists the entries of row i+1 left to right, inner boxes
  /// excluded. Throws InputError on a length mismatch or a nonpositive entry.
  SkewTableau(SkewShape shape, const std::vector<std::vector<int>>& filled_rows);

  /// Straight shape read off row lengths.
  static SkewTableau from_rows(const std::vector<std::vector<int>>& rows);
  /// Straight shape given by its columns, each listed top to bottom.
  static SkewTableau from_columns(const std::vector<std::vector<int>>& columns);
  /// A shape with every box set to `value` (placeholder before assignment).
  static SkewTableau filled(SkewShape shape, int value);

  const SkewShape& shape() const noexcept { return shape_; }
  const Partition& outer() const noexcept { return shape_.outer(); }
  const Partition& inner() const noexcept { return shape_.inner(); }
  bool is_straight() const noexcept { return shape_.is_straight(); }
  bool empty() const noexcept { return shape_.size() == 0; }
  int filled_count() const noexcept { return shape_.size(); }

  /// Entry in box (row, col); 0 for inner boxes. Precondition: inside outer.
  int at(int row, int col) const;
  int at(Cell c) const { return at(c.row, c.col); }
  void set(Cell c, int value);

  /// Filled entries of a row, left to right.
  std::vector<int> row_entries(int row) const;
  /// Filled entries of a column, top to bottom.
  std::vector<int> column_entries(int col) const;
  /// All columns of a straight tableau.
  std::vector<std::vector<int>> columns() const;

  int max_entry() const noexcept;

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

/// Letter multiplicities, counts[i-1] = occurrences of letter i.
struct WeightVector {
  std::vector<int> counts;

  int of(int letter) const noexcept;
  int total() const noexcept;
  bool is_partition() const noexcept;
  /// Trailing zeros trimmed. Precondition: is_partition().
  Partition to_partition() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// Rows weakly increase, columns strictly increase, over filled boxes.
bool validate_ssyt(const SkewTableau& t);
/// validate_ssyt plus every entry in [1, m].
bool validate_ssyt(const SkewTableau& t, int m);

/// Counts for letters 1..m; m = 0 sizes the vector to the largest entry.
WeightVector weight(const SkewTableau& t, int m = 0);

/// Rows top to bottom, each right to left.
Word reverse_row_word(const SkewTableau& t);

/// Columns from the rightmost to the leftmost, each top to bottom. This is the
/// word whose Yamanouchi property the Sundaram conditions test.
Word column_reading_word(const SkewTableau& t);

/// Every prefix has partition weight.
bool is_yamanouchi(const Word& w);

/// Human-readable grid: '.' for inner boxes, right-padded entries.
std::string render(const SkewTableau& t);

}  // namespace lrkit
