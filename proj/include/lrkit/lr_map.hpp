#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "lrkit/reduction.hpp"

namespace lrkit {

/// Full record of iterating the successor map to its fixed point.
struct LrAiiTrace {
  SkewTableau input;
  /// suc^N(input); symplectic with at most n rows.
  SkewTableau p_tableau;
  /// Shape lambda/mu, entry j on lambda^{j-1}/lambda^j.
  SkewTableau q_tableau;
  /// lambda = lambda^0 ⊃ lambda^1 ⊃ ... ⊃ lambda^N = mu.
  std::vector<Partition> shape_chain;
  int steps = 0;
};

/// Throws InputError unless t is a straight SSYT over [2n] with at most 2n rows.
LrAiiTrace lr_aii(const SkewTableau& t, int n);

enum class RecAxiom { R1, R2, R3, R4, R5 };

std::string_view to_string(RecAxiom a);

struct RecValidation {
  bool valid = false;
  /// First violated axiom in the order R1..R5. Empty when the shape itself is
  /// out of range (outer beyond 2n rows or inner beyond n rows).
  std::optional<RecAxiom> violated;
  /// mu^(0) = lambda ⊇ mu^(1) ⊇ ... ⊇ mu^(max label) = mu, where
  /// mu^(k) = mu ∪ {Q > k}. Filled whenever R1 and R2 hold.
  std::vector<Partition> mu_chain;
};

/// Checks the five recording-tableau axioms:
///  (R1) rows strictly decrease; (R2) columns weakly decrease;
///  (R3) every letter occurs an even number of times;
///  (R4) Q[k] >= 2(l(mu^(k-1)) - n);
///  (R5) Q_{<=r}[k+1] <= Q_{<=r}[k] for all rows r.
RecValidation validate_rec(const SkewTableau& q, int n);

/// Occurrences of letter k in rows 1..r.
int rec_prefix_count(const SkewTableau& q, int r, int k);

/// (Q[1], Q[2], ...). Throws PreconditionError unless validate_rec(q, n) holds.
Partition rec_weight(const SkewTableau& q, int n);

}  // namespace lrkit
