#include "lrkit/lr_map.hpp"

#include <algorithm>

#include "lrkit/error.hpp"

namespace lrkit {

LrAiiTrace lr_aii(const SkewTableau& t, int n) {
  if (n < 1) throw InputError("n must be positive");
  if (!t.is_straight()) throw InputError("input must have straight shape");
  if (!validate_ssyt(t)) throw InputError("input is not semistandard");
  if (t.max_entry() > 2 * n)
    throw InputError("entry " + std::to_string(t.max_entry()) + " exceeds alphabet bound " +
                     std::to_string(2 * n));
  if (t.outer().length() > 2 * n) throw InputError("shape has more than 2n rows");

  LrAiiTrace trace;
  trace.input = t;
  trace.shape_chain.push_back(t.outer());
  SkewTableau cur = t;
  std::vector<std::vector<int>> labels(static_cast<std::size_t>(t.outer().length()));
  for (int i = 1; i <= t.outer().length(); ++i)
    labels[static_cast<std::size_t>(i - 1)].assign(static_cast<std::size_t>(t.outer().row(i)), 0);

  for (;;) {
    SkewTableau next = successor(cur);
    if (next == cur) break;
    ++trace.steps;
    const Partition& before = cur.outer();
    const Partition& after = next.outer();
    for (int i = 1; i <= before.length(); ++i)
      for (int j = after.row(i) + 1; j <= before.row(i); ++j)
        labels[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = trace.steps;
    trace.shape_chain.push_back(after);
    cur = std::move(next);
  }

  const Partition& mu = cur.outer();
  std::vector<std::vector<int>> q_rows;
  for (int i = 1; i <= t.outer().length(); ++i) {
    const auto& row = labels[static_cast<std::size_t>(i - 1)];
    q_rows.emplace_back(row.begin() + mu.row(i), row.end());
  }
  trace.q_tableau = SkewTableau(SkewShape(t.outer(), mu), q_rows);
  trace.p_tableau = std::move(cur);
  return trace;
}

std::string_view to_string(RecAxiom a) {
  switch (a) {
    case RecAxiom::R1: return "R1";
    case RecAxiom::R2: return "R2";
    case RecAxiom::R3: return "R3";
    case RecAxiom::R4: return "R4";
    case RecAxiom::R5: return "R5";
  }
  return "?";
}

int rec_prefix_count(const SkewTableau& q, int r, int k) {
  int count = 0;
  for (int i = 1; i <= std::min(r, q.outer().length()); ++i)
    for (int v : q.row_entries(i))
      if (v == k) ++count;
  return count;
}

RecValidation validate_rec(const SkewTableau& q, int n) {
  RecValidation res;
  const SkewShape& sh = q.shape();
  if (sh.outer().length() > 2 * n || sh.inner().length() > n) return res;

  auto fail = [&](RecAxiom a) {
    res.violated = a;
    return res;
  };

  for (const Cell c : sh.cells()) {
    if (sh.contains_cell({c.row, c.col + 1}) && q.at(c) <= q.at(c.row, c.col + 1))
      return fail(RecAxiom::R1);
  }
  for (const Cell c : sh.cells()) {
    if (sh.contains_cell({c.row + 1, c.col}) && q.at(c) < q.at(c.row + 1, c.col))
      return fail(RecAxiom::R2);
  }

  const int max_label = q.max_entry();
  // R1 and R2 make each {Q >= k} ∪ mu a partition.
  for (int k = 0; k <= max_label; ++k) {
    std::vector<int> parts;
    for (int i = 1; i <= sh.outer().length(); ++i) {
      int len = sh.inner().row(i);
      for (int j = sh.inner().row(i) + 1; j <= sh.outer().row(i); ++j)
        if (q.at(i, j) > k) len = j;
      parts.push_back(len);
    }
    res.mu_chain.emplace_back(parts);
  }

  const WeightVector w = weight(q, max_label);
  for (int c : w.counts)
    if (c % 2 != 0) return fail(RecAxiom::R3);

  for (int k = 1; k <= max_label; ++k) {
    const int len = res.mu_chain[static_cast<std::size_t>(k - 1)].length();
    if (w.of(k) < 2 * (len - n)) return fail(RecAxiom::R4);
  }

  for (int k = 1; k < max_label; ++k)
    for (int r = 1; r <= sh.outer().length(); ++r)
      if (rec_prefix_count(q, r, k + 1) > rec_prefix_count(q, r, k)) return fail(RecAxiom::R5);

  res.valid = true;
  return res;
}

Partition rec_weight(const SkewTableau& q, int n) {
  if (!validate_rec(q, n).valid)
    throw PreconditionError("not a recording tableau for n = " + std::to_string(n));
  return weight(q).to_partition();
}

}  // namespace lrkit
