#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace lrkit {

/// A box of a Young diagram in 1-based matrix coordinates.
struct Cell {
  int row = 0;
  int col = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Weakly decreasing sequence of positive parts. Trailing zeros are dropped on
/// construction, so (3,3,1,1,0,0) and (3,3,1,1) compare and hash equal.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }

  /// Number of positive parts.
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  /// Number of boxes.
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  /// Part in 1-based row `i`; zero past the last row.
  int row(int i) const noexcept;
  /// Height of 1-based column `j`.
  int column_height(int j) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

/// gamma_{2i-1} == gamma_{2i} for every i.
bool is_even(const Partition& p);

/// inner_i <= outer_i for every row.
bool contains(const Partition& inner, const Partition& outer);

/// outer/inner is a vertical strip: contained, at most one box per row.
bool is_vertical_strip(const Partition& inner, const Partition& outer);

/// Every partition of `size` with at most `max_length` parts, each part at most
/// `max_part` (negative = unbounded), in decreasing lexicographic order.
std::vector<Partition> partitions_of(int size, int max_length, int max_part = -1);

/// Every partition contained in `outer` with at most `max_length` parts, ordered
/// by size, then decreasing lexicographically.
std::vector<Partition> subpartitions(const Partition& outer, int max_length);

/// A pair inner ⊆ outer.
class SkewShape {
 public:
  SkewShape() = default;
  explicit SkewShape(Partition outer);
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }

  int size() const noexcept { return outer_.size() - inner_.size(); }
  bool is_straight() const noexcept { return inner_.empty(); }
  bool contains_cell(Cell c) const noexcept;

  /// Boxes of outer/inner, row-major.
  std::vector<Cell> cells() const;

  std::string to_string() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

}  // namespace lrkit

template <>
struct std::hash<lrkit::Partition> {
  std::size_t operator()(const lrkit::Partition& p) const noexcept;
};
