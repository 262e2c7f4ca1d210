#include "lrkit/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <future>
#include <map>
#include <set>
#include <thread>

#include "lrkit/error.hpp"
#include "lrkit/lr_map.hpp"
#include "lrkit/reduction.hpp"
#include "lrkit/sundaram.hpp"

namespace lrkit {

void for_each_ssyt(const SkewShape& shape, int m, const std::function<void(const SkewTableau&)>& visit) {
  const std::vector<Cell> cells = shape.cells();
  SkewTableau t = SkewTableau::filled(shape, 1);
  const Partition& outer = shape.outer();

  auto fill = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      visit(t);
      return;
    }
    const Cell c = cells[idx];
    int lo = 1;
    if (shape.contains_cell({c.row, c.col - 1})) lo = std::max(lo, t.at(c.row, c.col - 1));
    if (shape.contains_cell({c.row - 1, c.col})) lo = std::max(lo, t.at(c.row - 1, c.col) + 1);
    // Boxes below in the same column need room for larger entries.
    const int hi = m - (outer.column_height(c.col) - c.row);
    for (int v = lo; v <= hi; ++v) {
      t.set(c, v);
      self(self, idx + 1);
    }
  };
  fill(fill, 0);
}

std::vector<SkewTableau> enum_ssyt(const SkewShape& shape, int m) {
  std::vector<SkewTableau> out;
  for_each_ssyt(shape, m, [&](const SkewTableau& t) { out.push_back(t); });
  return out;
}

std::vector<SkewTableau> enum_spt(const Partition& shape, int n) {
  std::vector<SkewTableau> out;
  if (shape.length() > n) return out;
  for_each_ssyt(SkewShape(shape), 2 * n, [&](const SkewTableau& t) {
    if (is_symplectic(t)) out.push_back(t);
  });
  return out;
}

std::vector<SkewTableau> enum_lrs(const SkewShape& shape, int n) {
  std::vector<SkewTableau> out;
  if (shape.outer().length() > 2 * n || shape.inner().length() > n) return out;
  for_each_ssyt(shape, 2 * n, [&](const SkewTableau& t) {
    if (validate_lrs(t, n).valid) out.push_back(t);
  });
  return out;
}

namespace {

/// Rows (1-based) of a vertical strip between two partitions.
std::vector<int> strip_rows(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<int> rows;
  for (std::size_t i = 0; i < outer.size(); ++i)
    if (outer[i] != inner[i]) rows.push_back(static_cast<int>(i) + 1);
  return rows;
}

}  // namespace

std::vector<SkewTableau> enum_rec(const SkewShape& shape, int n) {
  std::vector<SkewTableau> out;
  const Partition& lambda = shape.outer();
  const Partition& mu = shape.inner();
  if (lambda.length() > 2 * n || mu.length() > n) return out;

  const std::size_t rows = static_cast<std::size_t>(lambda.length());
  std::vector<int> floor(rows);
  for (std::size_t i = 0; i < rows; ++i) floor[i] = mu.row(static_cast<int>(i) + 1);
  std::vector<int> top = lambda.parts();

  // chain[k] = mu^(k) padded to `rows`; strips[k-1] = rows of J_k.
  std::vector<std::vector<int>> chain{top};
  std::vector<std::vector<int>> strips;

  auto emit = [&] {
    SkewTableau q = SkewTableau::filled(shape, 1);
    for (std::size_t k = 0; k < strips.size(); ++k)
      for (int r : strips[k]) q.set({r, chain[k][static_cast<std::size_t>(r - 1)]}, static_cast<int>(k) + 1);
    out.push_back(std::move(q));
  };

  auto descend = [&](auto&& self) -> void {
    const std::vector<int> cur = chain.back();
    if (cur == floor) {
      emit();
      return;
    }
    int cur_len = 0;
    for (std::size_t i = 0; i < rows; ++i)
      if (cur[i] > 0) cur_len = static_cast<int>(i) + 1;
    const int min_size = std::max(2, 2 * (cur_len - n));

    // Choose the removable boxes bottom-up so each choice can see the row below.
    std::vector<int> next = cur;
    auto choose = [&](auto&& pick, int row, int taken) -> void {
      if (row == 0) {
        if (taken < min_size || taken % 2 != 0) return;
        const std::vector<int> rows_taken = strip_rows(cur, next);
        if (!strips.empty()) {
          // Prefix domination against the previous strip.
          const std::vector<int>& prev = strips.back();
          std::size_t p = 0;
          for (std::size_t q = 0; q < rows_taken.size(); ++q) {
            while (p < prev.size() && prev[p] <= rows_taken[q]) ++p;
            if (q + 1 > p) return;
          }
        }
        chain.push_back(next);
        strips.push_back(rows_taken);
        self(self);
        strips.pop_back();
        chain.pop_back();
        return;
      }
      const std::size_t i = static_cast<std::size_t>(row - 1);
      pick(pick, row - 1, taken);
      const int below = i + 1 < rows ? next[i + 1] : 0;
      if (cur[i] > floor[i] && cur[i] - 1 >= below) {
        next[i] = cur[i] - 1;
        pick(pick, row - 1, taken + 1);
        next[i] = cur[i];
      }
    };
    choose(choose, static_cast<int>(rows), 0);
  };
  descend(descend);
  std::sort(out.begin(), out.end(), [](const SkewTableau& x, const SkewTableau& y) {
    std::vector<int> wx, wy;
    for (const Cell c : x.shape().cells()) wx.push_back(x.at(c));
    for (const Cell c : y.shape().cells()) wy.push_back(y.at(c));
    return wx < wy;
  });
  return out;
}

Budget parse_budget(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0)
      throw InputError("malformed budget '" + text + "', expected cells or cells:n");
    return v;
  };
  Budget b;
  const auto colon = text.find(':');
  const std::string_view all(text);
  b.cells = parse_int(all.substr(0, colon));
  if (colon != std::string::npos) b.n = parse_int(all.substr(colon + 1));
  return b;
}

long VerificationReport::rhs_total() const {
  long total = 0;
  for (const auto& m : rhs_breakdown) total += m.spt * m.lrs;
  return total;
}

bool VerificationReport::counts_match() const {
  if (lhs_count != rhs_total()) return false;
  return std::all_of(rhs_breakdown.begin(), rhs_breakdown.end(),
                     [](const MuCount& m) { return m.lrs == m.rec; });
}

bool VerificationReport::ok() const { return roundtrip_failures.empty() && counts_match(); }

namespace {

using PairKey = std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>;

std::vector<std::vector<int>> rows_of(const SkewTableau& t) {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= t.outer().length(); ++i) rows.push_back(t.row_entries(i));
  rows.push_back(t.inner().parts());
  return rows;
}

}  // namespace

VerificationReport verify_bijection(const Partition& lambda, int n, ExpansionMethod method) {
  if (n < 1) throw InputError("n must be positive");
  if (lambda.length() > 2 * n)
    throw InputError(lambda.to_string() + " has more than 2n = " + std::to_string(2 * n) + " rows");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.n = n;
  rep.lambda = lambda;
  auto fail = [&](std::string check, std::string msg, std::vector<SkewTableau> w) {
    rep.roundtrip_failures.push_back({std::move(check), std::move(msg), std::move(w)});
  };

  std::set<PairKey> seen;
  for_each_ssyt(SkewShape(lambda), 2 * n, [&](const SkewTableau& t) {
    ++rep.lhs_count;
    const LrAiiTrace tr = lr_aii(t, n);
    if (!is_symplectic(tr.p_tableau) || tr.p_tableau.outer().length() > n)
      fail("p_shape", "P is not symplectic with at most n rows", {t, tr.p_tableau});
    const RecValidation rv = validate_rec(tr.q_tableau, n);
    if (!rv.valid) {
      std::string why = rv.violated ? std::string(to_string(*rv.violated)) : "shape range";
      fail("containment", "recording tableau fails " + why, {t, tr.q_tableau});
      return;
    }
    if (!seen.insert({rows_of(tr.p_tableau), rows_of(tr.q_tableau)}).second)
      fail("injectivity", "(P, Q) already produced by another tableau", {t, tr.p_tableau, tr.q_tableau});
    try {
      const SkewTableau back = expand(tr.p_tableau, tr.q_tableau, n, method);
      if (back != t) fail("roundtrip_forward", "expand(lr_aii(T)) differs from T", {t, back});
    } catch (const std::exception& e) {
      fail("roundtrip_forward", e.what(), {t, tr.p_tableau, tr.q_tableau});
    }
  });

  for (const Partition& mu : subpartitions(lambda, n)) {
    const SkewShape shape(lambda, mu);
    MuCount mc;
    mc.mu = mu;
    const auto spt = enum_spt(mu, n);
    const auto lrs = enum_lrs(shape, n);
    const auto rec = enum_rec(shape, n);
    mc.spt = static_cast<long>(spt.size());
    mc.lrs = static_cast<long>(lrs.size());
    mc.rec = static_cast<long>(rec.size());
    rep.rhs_breakdown.push_back(mc);
    if (mc.lrs != mc.rec)
      fail("lozenge", "|LRS| = " + std::to_string(mc.lrs) + " but |Rec| = " + std::to_string(mc.rec) +
                            " on " + shape.to_string(), {});

    std::set<std::vector<std::vector<int>>> rec_set;
    for (const auto& q : rec) rec_set.insert(rows_of(q));
    for (const auto& t : lrs) {
      try {
        const SkewTableau q = lozenge(t, n);
        if (!rec_set.count(rows_of(q))) fail("lozenge", "lozenge image is not a recording tableau", {t, q});
        const SkewTableau back = lozenge_inv(q, n);
        if (back != t) fail("lozenge", "lozenge_inv(lozenge(T)) differs from T", {t, q, back});
      } catch (const std::exception& e) {
        fail("lozenge", e.what(), {t});
      }
    }
    for (const auto& q : rec) {
      try {
        const SkewTableau t = lozenge_inv(q, n);
        const SkewTableau back = lozenge(t, n);
        if (back != q) fail("lozenge", "lozenge(lozenge_inv(Q)) differs from Q", {q, t, back});
      } catch (const std::exception& e) {
        fail("lozenge", e.what(), {q});
      }
    }

    for (const auto& s : spt)
      for (const auto& q : rec) {
        try {
          const SkewTableau t = expand(s, q, n, method);
          const LrAiiTrace tr = lr_aii(t, n);
          if (tr.p_tableau != s || tr.q_tableau != q)
            fail("roundtrip_backward", "lr_aii(expand(S, Q)) differs from (S, Q)", {s, q, t});
        } catch (const std::exception& e) {
          fail("roundtrip_backward", e.what(), {s, q});
        }
      }
  }
  if (rep.lhs_count != rep.rhs_total())
    fail("count", "lhs " + std::to_string(rep.lhs_count) + " != rhs " + std::to_string(rep.rhs_total()), {});
  rep.elapsed = std::chrono::steady_clock::now() - start;
  return rep;
}

std::vector<VerificationReport> verify_sweep(const std::vector<int>& n_values, int max_cells,
                                             ExpansionMethod method, unsigned threads) {
  std::vector<std::pair<int, Partition>> jobs;
  std::vector<int> ns = n_values;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  for (int n : ns)
    for (int size = 0; size <= max_cells; ++size)
      for (const Partition& lam : partitions_of(size, 2 * n)) jobs.emplace_back(n, lam);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<VerificationReport> reports(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++)
      reports[i] = verify_bijection(jobs[i].second, jobs[i].first, method);
  };
  std::vector<std::future<void>> pool;
  for (unsigned w = 0; w < threads; ++w) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  return reports;
}

}  // namespace lrkit
