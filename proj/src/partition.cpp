#include "lrkit/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "lrkit/error.hpp"

namespace lrkit {

namespace {

std::vector<int> canonical(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw InputError("partition has a negative part");
    if (i > 0 && parts[i] > parts[i - 1])
      throw InputError("partition parts must be weakly decreasing");
  }
  return parts;
}

void partitions_rec(int remaining, int max_length, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (max_length == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, max_length - 1, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : parts_(canonical(std::vector<int>(parts))) {}

Partition::Partition(std::vector<int> parts) : parts_(canonical(std::move(parts))) {}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::row(int i) const noexcept {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

int Partition::column_height(int j) const noexcept {
  if (j < 1) return 0;
  int h = 0;
  while (h < length() && parts_[static_cast<std::size_t>(h)] >= j) ++h;
  return h;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

Partition conjugate(const Partition& p) {
  std::vector<int> cols;
  int width = p.row(1);
  cols.reserve(static_cast<std::size_t>(width));
  for (int j = 1; j <= width; ++j) cols.push_back(p.column_height(j));
  return Partition(std::move(cols));
}

bool is_even(const Partition& p) {
  for (int i = 1; i <= p.length(); i += 2)
    if (p.row(i) != p.row(i + 1)) return false;
  return true;
}

bool contains(const Partition& inner, const Partition& outer) {
  if (inner.length() > outer.length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.row(i) > outer.row(i)) return false;
  return true;
}

bool is_vertical_strip(const Partition& inner, const Partition& outer) {
  if (!contains(inner, outer)) return false;
  for (int i = 1; i <= outer.length(); ++i)
    if (outer.row(i) - inner.row(i) > 1) return false;
  return true;
}

std::vector<Partition> partitions_of(int size, int max_length, int max_part) {
  std::vector<Partition> out;
  if (size < 0 || max_length < 0) return out;
  std::vector<int> prefix;
  partitions_rec(size, max_length, max_part < 0 ? size : max_part, prefix, out);
  return out;
}

std::vector<Partition> subpartitions(const Partition& outer, int max_length) {
  std::vector<Partition> out;
  const int rows = std::min(outer.length(), std::max(max_length, 0));
  std::vector<int> parts(static_cast<std::size_t>(rows), 0);
  // Odometer over row lengths, each row bounded by outer and by the row above.
  auto fill = [&](auto&& self, int i) -> void {
    if (i == rows) {
      out.emplace_back(parts);
      return;
    }
    int cap = outer.row(i + 1);
    if (i > 0) cap = std::min(cap, parts[static_cast<std::size_t>(i - 1)]);
    for (int v = cap; v >= 0; --v) {
      parts[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
    parts[static_cast<std::size_t>(i)] = 0;
  };
  fill(fill, 0);
  std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();
  });
  return out;
}

SkewShape::SkewShape(Partition outer) : outer_(std::move(outer)) {}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(inner_, outer_))
    throw InputError("inner shape " + inner_.to_string() + " is not contained in " +
                     outer_.to_string());
}

bool SkewShape::contains_cell(Cell c) const noexcept {
  return c.row >= 1 && c.col > inner_.row(c.row) && c.col <= outer_.row(c.row);
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 1; i <= outer_.length(); ++i)
    for (int j = inner_.row(i) + 1; j <= outer_.row(i); ++j) out.push_back({i, j});
  return out;
}

std::string SkewShape::to_string() const {
  if (inner_.empty()) return outer_.to_string();
  return outer_.to_string() + "/" + inner_.to_string();
}

}  // namespace lrkit

std::size_t std::hash<lrkit::Partition>::operator()(const lrkit::Partition& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int v : p.parts()) h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}
