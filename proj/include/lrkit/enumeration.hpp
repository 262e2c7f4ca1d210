#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "lrkit/expansion.hpp"
#include "lrkit/tableau.hpp"

namespace lrkit {

/// Visits every skew SSYT of the shape over [1, m], in lexicographic order of
/// the row-major entry sequence.
void for_each_ssyt(const SkewShape& shape, int m, const std::function<void(const SkewTableau&)>& visit);

std::vector<SkewTableau> enum_ssyt(const SkewShape& shape, int m);

/// Symplectic tableaux of straight shape over [2n].
std::vector<SkewTableau> enum_spt(const Partition& shape, int n);

std::vector<SkewTableau> enum_lrs(const SkewShape& shape, int n);

/// Recording tableaux on the shape, built strip by strip from the outside in.
/// Empty when the shape is out of range for n.
std::vector<SkewTableau> enum_rec(const SkewShape& shape, int n);

/// Size limits for exhaustive sweeps.
struct Budget {
  int cells = 6;
  int n = 2;

  bool admits(const Partition& lambda, int n_value) const {
    return lambda.size() <= cells && n_value <= n;
  }
};

/// Parses "cells" or "cells:n". Throws InputError on malformed text.
Budget parse_budget(const std::string& text);

/// A failed check, kept as data.
struct Certificate {
  /// One of: count, lozenge, roundtrip_forward, roundtrip_backward,
  /// containment, injectivity, p_shape.
  std::string check;
  std::string message;
  /// Tableaux that exhibit the failure (input first).
  std::vector<SkewTableau> witnesses;
};

struct MuCount {
  Partition mu;
  long spt = 0;
  long lrs = 0;
  long rec = 0;
};

struct VerificationReport {
  int n = 0;
  Partition lambda;
  long lhs_count = 0;
  std::vector<MuCount> rhs_breakdown;
  std::vector<Certificate> roundtrip_failures;
  std::chrono::duration<double> elapsed{};

  long rhs_total() const;
  bool counts_match() const;
  /// Every check passed.
  bool ok() const;
};

/// Exhaustively checks the decomposition of SST over [2n] of shape lambda:
/// counts, the lozenge bijection per inner shape, containment of the forward
/// recording tableaux, fiber injectivity, and both round trips. Throws
/// InputError if lambda has more than 2n rows.
VerificationReport verify_bijection(const Partition& lambda, int n,
                                    ExpansionMethod method = ExpansionMethod::closed_form);

/// verify_bijection for every lambda with |lambda| <= max_cells and at most 2n
/// rows, for each listed n, run on up to `threads` workers (0 picks the
/// hardware concurrency). Ordered by n, then |lambda|, then lambda decreasing.
std::vector<VerificationReport> verify_sweep(const std::vector<int>& n_values, int max_cells,
                                             ExpansionMethod method = ExpansionMethod::closed_form,
                                             unsigned threads = 0);

}  // namespace lrkit
