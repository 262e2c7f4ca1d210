#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrkit/insertion.hpp"

namespace lrkit {

/// How the first column is rebuilt from the ejected column.
enum class ExpansionMethod {
  /// The explicit tail-length formulas.
  closed_form,
  /// Search over the (odd, even) pairs the reduction could have removed.
  exact,
};

/// An unwinding step that found no preimage. `step` is the label of the
/// string being undone, or 0 for a single-step call.
class ExpansionError : public std::runtime_error {
 public:
  ExpansionError(int step, std::string reason)
      : std::runtime_error(step > 0 ? "step " + std::to_string(step) + ": " + reason : reason),
        step_(step),
        reason_(std::move(reason)) {}

  int step() const noexcept { return step_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  int step_;
  std::string reason_;
};

/// Data of one inverse-successor step.
struct ExpansionStep {
  SkewTableau base;
  Partition target_shape;
  Column ejected_column;
  /// l_1, ..., l_{k+1}; empty for the exact method.
  std::vector<int> tail_lengths;
};

struct ExpansionStepResult {
  ExpansionStep step;
  SkewTableau tableau;
};

/// l_1 = a_1 - 2 (a_1 even) or a_1 - 1 (a_1 odd); l_{i+1} is the gap
/// a_{i+1} - a_i minus 2, minus 1, or 0 by the parities of a_i, a_{i+1} and
/// whether the gap reaches 2i+1; l_{k+1} = l - k - (l_1 + ... + l_k).
/// Throws PreconditionError unless a is symplectic and l - |a| is even and
/// nonnegative, and ExpansionError if l_{k+1} < 0.
std::vector<int> tail_lengths(const Column& a, int l);

/// (1..l_1), then (a_i, a_i+1, ..., a_i+l_{i+1}) for even a_i and
/// (a_i, a_i+2, ..., a_i+1+l_{i+1}) for odd a_i. Throws ExpansionError if an
/// entry exceeds 2n or the result is not strictly increasing.
Column build_column(const Column& a, const std::vector<int>& lengths, int n);

/// The column b of length l over [2n] with reduce(b) = a, if any.
std::optional<Column> reduction_preimage(const Column& a, int l, int n);

/// One inverse successor step: the tableau T of shape `target` with
/// successor(T) = s. Throws ExpansionError when none is found.
ExpansionStepResult expand_step(const SkewTableau& s, const Partition& target, int n,
                                ExpansionMethod method = ExpansionMethod::closed_form);

/// expand_step towards strip.outer(); strip.inner() must be the shape of s and
/// strip a vertical strip of even size. An empty strip returns s.
SkewTableau expand_one_string(const SkewTableau& s, const SkewShape& strip, int n,
                              ExpansionMethod method = ExpansionMethod::closed_form);

/// Inverse of lr_aii: undoes the strings of q from the largest label down.
/// Throws PreconditionError on invalid (s, q) and ExpansionError when a step
/// fails.
SkewTableau expand(const SkewTableau& s, const SkewTableau& q, int n,
                   ExpansionMethod method = ExpansionMethod::closed_form);

/// Searches all of SST over [2n] of `source_shape` for a successor preimage of s.
std::optional<SkewTableau> brute_inverse_successor(const SkewTableau& s,
                                                   const Partition& source_shape, int n);

}  // namespace lrkit
