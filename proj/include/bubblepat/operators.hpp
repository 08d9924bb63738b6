#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "bubblepat/permutation.hpp"

namespace bubblepat {

enum class PassOp { BubblePass, StackPass };

char pass_op_letter(PassOp op);

/// One bubble pass over a word: each left-to-right maximum is pushed past
/// the following gap. Defined on arbitrary distinct-entry words so the
/// recursive operators can reuse it.
void bubble_into(std::span<const int> src, std::vector<int>& out);

/// B via its recursion: split off the maximum, recurse on the prefix,
/// append the suffix and then the maximum.
Permutation bubble_recursive(const Permutation& p);

/// B via the left-to-right maxima splice. Production path; agreement with
/// bubble_recursive is enforced by the verify suites.
Permutation bubble_splice(const Permutation& p);

/// k repeated bubble passes, k >= 0.
Permutation bubble_k(const Permutation& p, int k);

/// One stack pass: recurse on both sides of the maximum, emit the maximum
/// last.
Permutation stack_pass(const Permutation& p);

/// A word over {B, S}, applied right-to-left ("SB" bubbles first). Parsed
/// from text like "B", "SB", "B^3S".
class OperatorChain {
 public:
  OperatorChain() = default;
  explicit OperatorChain(std::vector<PassOp> steps) : steps_(std::move(steps)) {}

  static OperatorChain parse(std::string_view text);

  const std::vector<PassOp>& steps() const { return steps_; }
  std::string str() const;

  Permutation apply(const Permutation& p) const;

  /// Image after each pass, innermost first; size equals steps().size().
  std::vector<std::pair<PassOp, Permutation>> apply_trace(const Permutation& p) const;

 private:
  std::vector<PassOp> steps_;
};

}  // namespace bubblepat
