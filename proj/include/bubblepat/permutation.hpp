#pragma once

#include <compare>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bubblepat/errors.hpp"

namespace bubblepat {

/// A sequence of distinct integers, not necessarily 1..n. Intermediate
/// results (gaps of a decomposition, witness scaffolding) live here before
/// being standardized.
using Word = std::vector<int>;

/// Immutable permutation of {1..n} in one-line notation. Ordering is
/// lexicographic on the one-line form, which interleaves lengths; it is
/// only used to make sets and reports deterministic.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `values` is a bijection of {1..n}.
  explicit Permutation(Word values);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  const Word& values() const { return values_; }

  /// 0-based access.
  int operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }

  bool is_identity() const;
  bool ends_with_max() const { return !values_.empty() && values_.back() == size(); }

  /// Canonical form: space-separated values, e.g. "2 4 1 5 3".
  std::string str() const;

  /// Compact digit string for n <= 9, canonical form otherwise.
  std::string display() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  Word values_;
};

using PermutationSet = std::set<Permutation>;

/// Accepts space/comma-separated integers, or a single all-digit token read
/// digit by digit (so "231" only works for n <= 9).
Permutation parse_permutation(std::string_view text);

/// Comma-separated list of permutation tokens, each parsed as above.
PermutationSet parse_permutation_set(std::string_view text);

/// Order-isomorphic permutation of a word with distinct entries.
Permutation standardize(const Word& word);

/// Classical pattern containment: does some subsequence of `haystack`
/// standardize to `pattern`?
bool contains(const Permutation& haystack, const Permutation& pattern);

/// Left-to-right maxima structure. Position i (1-based) holds maxima[i-1];
/// gaps[i] is the word strictly between the i-th maximum and the next one,
/// with gaps[k] running to the end. Splicing maxima and gaps back in order
/// reproduces the permutation.
struct LrDecomposition {
  std::vector<int> maxima;
  std::vector<Word> gaps;
  std::vector<int> positions;  // 1-based

  int count() const { return static_cast<int>(maxima.size()); }
};

LrDecomposition lr_decompose(const Permutation& p);

/// All standardized single-entry deletions; |result| <= n.
PermutationSet one_point_deletions(const Permutation& p);

/// Elements of `ps` that contain no other element of `ps`.
PermutationSet minimal_elements(const PermutationSet& ps);

// Raw kernels used by the exhaustive scans, where constructing Permutation
// objects per candidate would dominate the runtime. Inputs must have
// distinct entries; `contains_pattern` compares by relative order.
bool contains_pattern(std::span<const int> haystack, std::span<const int> pattern);
void standardized_deletion(std::span<const int> src, int index, std::vector<int>& out);
bool is_increasing(std::span<const int> word);

/// Renders a word ("4 1 3"); used in traces and error text.
std::string word_str(std::span<const int> word);

}  // namespace bubblepat
