#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bubblepat/permutation.hpp"

namespace bubblepat {

/// Largest length any exhaustive scan will accept. Factorial growth makes
/// anything beyond this pointless on one machine; the CLI can raise it
/// deliberately.
int practical_cap();
void set_practical_cap(int cap);

/// Lexicographic stream over S_n.
class SnStream {
 public:
  explicit SnStream(int n);

  /// Next permutation, or nullopt when exhausted.
  std::optional<Permutation> next();

 private:
  std::vector<int> current_;
  bool done_ = false;
};

/// A finite set of forbidden patterns, normalized to its minimal elements
/// so equal classes compare equal.
class ClassSpec {
 public:
  ClassSpec() = default;
  explicit ClassSpec(const PermutationSet& basis);

  const PermutationSet& basis() const { return basis_; }
  bool avoids_all(const Permutation& p) const;

  friend auto operator<=>(const ClassSpec&, const ClassSpec&) = default;

 private:
  PermutationSet basis_;
};

/// Membership of sigma in the inverse image of Av(p) under one bubble pass.
bool in_inverse_class(const Permutation& sigma, const Permutation& p);

struct DownsetReport {
  bool is_downset = true;
  int horizon = 0;
  /// First counterexample in scan order (by length, then lexicographically):
  /// `inside` is in the set, `outside` is a one-point deletion that is not.
  std::optional<Permutation> outside;
  std::optional<Permutation> inside;
};

/// Is the inverse image of Av(p) closed under pattern containment, over all
/// permutations of length <= horizon?
DownsetReport downset_check(const Permutation& p, int horizon, int workers = 1);

/// Same question for the inverse image of Av(ps).
DownsetReport check_set_class(const PermutationSet& ps, int horizon, int workers = 1);

/// Minimal permutations outside the inverse image of Av(p), up to the
/// horizon. Verifies the downset property in the same scan and throws
/// NotADownset on a violation, since otherwise minimality by one-point
/// deletions proves nothing.
PermutationSet empirical_basis(const Permutation& p, int horizon, int workers = 1);

struct CountSequence {
  std::map<int, std::int64_t> counts;            // n -> members of length n
  std::map<int, double> growth_points;           // n -> counts[n]^(1/n)
};

/// Counts Av(spec) by length via the insertion tree of right extensions.
CountSequence count_av(const ClassSpec& spec, int horizon);

/// Same numbers by filtering S_n directly; exists to cross-validate the
/// tree walk.
CountSequence count_av_naive(const ClassSpec& spec, int horizon);

/// counts[N]^(1/N) at the largest computed N.
double growth_estimate(const CountSequence& cs);

/// "n,count,root" rows, roots to six decimals.
std::string to_csv(const CountSequence& cs);

/// Gamma_k: permutations of length k+2 ending in 1 whose prefix is any
/// arrangement of 2..k+2. |Gamma_k| = (k+1)!.
PermutationSet gamma(int k);

/// Exhaustively checks, up to the horizon, that k bubble passes sort sigma
/// iff sigma avoids Gamma_k.
bool verify_gamma(int k, int horizon, int workers = 1);

/// First sigma (by length, then lexicographically) where membership in the
/// inverse image of Av(image_patterns) under one bubble pass differs from
/// plain avoidance of direct_patterns; nullopt when they agree everywhere
/// up to the horizon.
std::optional<Permutation> find_membership_mismatch(const PermutationSet& image_patterns,
                                                    const PermutationSet& direct_patterns,
                                                    int horizon, int workers = 1);

void to_json(nlohmann::json& j, const DownsetReport& r);
void to_json(nlohmann::json& j, const CountSequence& cs);

}  // namespace bubblepat
