#include "bubblepat/operators.hpp"

#include <algorithm>

namespace bubblepat {

char pass_op_letter(PassOp op) { return op == PassOp::BubblePass ? 'B' : 'S'; }

void bubble_into(std::span<const int> src, std::vector<int>& out) {
  out.clear();
  out.reserve(src.size());
  bool has_pending = false;
  int pending = 0;  // current left-to-right maximum, not yet emitted
  for (int v : src) {
    if (!has_pending || v > pending) {
      if (has_pending) out.push_back(pending);
      pending = v;
      has_pending = true;
    } else {
      out.push_back(v);
    }
  }
  if (has_pending) out.push_back(pending);
}

namespace {

// B(sigma1 m sigma2) = B(sigma1) sigma2 m, recursing on the prefix before
// the maximum.
void bubble_rec_word(std::span<const int> w, std::vector<int>& out) {
  if (w.empty()) return;
  const auto mx = std::max_element(w.begin(), w.end());
  const std::size_t mpos = static_cast<std::size_t>(mx - w.begin());
  bubble_rec_word(w.first(mpos), out);
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(mpos) + 1, w.end());
  out.push_back(*mx);
}

// S(alpha m beta) = S(alpha) S(beta) m.
void stack_rec_word(std::span<const int> w, std::vector<int>& out) {
  if (w.empty()) return;
  const auto mx = std::max_element(w.begin(), w.end());
  const std::size_t mpos = static_cast<std::size_t>(mx - w.begin());
  stack_rec_word(w.first(mpos), out);
  stack_rec_word(w.subspan(mpos + 1), out);
  out.push_back(*mx);
}

}  // namespace

Permutation bubble_recursive(const Permutation& p) {
  Word out;
  out.reserve(static_cast<std::size_t>(p.size()));
  bubble_rec_word(p.values(), out);
  return Permutation(std::move(out));
}

Permutation bubble_splice(const Permutation& p) {
  Word out;
  bubble_into(p.values(), out);
  return Permutation(std::move(out));
}

Permutation bubble_k(const Permutation& p, int k) {
  if (k < 0) throw Error("pass count must be non-negative");
  Word cur = p.values();
  Word next;
  for (int i = 0; i < k; ++i) {
    bubble_into(cur, next);
    cur.swap(next);
  }
  return Permutation(std::move(cur));
}

Permutation stack_pass(const Permutation& p) {
  Word out;
  out.reserve(static_cast<std::size_t>(p.size()));
  stack_rec_word(p.values(), out);
  return Permutation(std::move(out));
}

OperatorChain OperatorChain::parse(std::string_view text) {
  std::vector<PassOp> steps;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    PassOp op;
    if (ch == 'B') {
      op = PassOp::BubblePass;
    } else if (ch == 'S') {
      op = PassOp::StackPass;
    } else {
      throw ParseError(std::string("expected 'B' or 'S', got '") + ch + "'", i);
    }
    ++i;
    int repeat = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const std::size_t start = i;
      int value = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + (text[i] - '0');
        if (value > 1000000) throw ParseError("exponent too large", start);
        ++i;
      }
      if (i == start) throw ParseError("expected a number after '^'", i);
      if (value < 1) throw ParseError("exponent must be positive", start);
      repeat = value;
    }
    steps.insert(steps.end(), static_cast<std::size_t>(repeat), op);
  }
  if (steps.empty()) throw ParseError("empty operator chain", 0);
  return OperatorChain(std::move(steps));
}

std::string OperatorChain::str() const {
  std::string out;
  for (PassOp op : steps_) out.push_back(pass_op_letter(op));
  return out;
}

Permutation OperatorChain::apply(const Permutation& p) const {
  Permutation cur = p;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    cur = *it == PassOp::BubblePass ? bubble_splice(cur) : stack_pass(cur);
  }
  return cur;
}

std::vector<std::pair<PassOp, Permutation>> OperatorChain::apply_trace(
    const Permutation& p) const {
  std::vector<std::pair<PassOp, Permutation>> trace;
  Permutation cur = p;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    cur = *it == PassOp::BubblePass ? bubble_splice(cur) : stack_pass(cur);
    trace.emplace_back(*it, cur);
  }
  return trace;
}

}  // namespace bubblepat
