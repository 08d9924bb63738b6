#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bubblepat/classification.hpp"
#include "bubblepat/permutation.hpp"

namespace bubblepat {

/// Basis for a single left-to-right maximum, p = n alpha: the two ways of
/// placing a new maximum over the old one.
PermutationSet basis_one_lr(const Permutation& p);

enum class Side { BeforeA, AfterA };

/// One member of the covering family R(p) for p = a lambda b mu with two
/// maxima, described combinatorially. x is a fresh entry above a (value
/// rank counted over the slots between consecutive mu-entries above a),
/// y and z are the two largest entries; when x lands right after a with an
/// empty first gap it coalesces with y.
struct RExtension {
  Side x_side = Side::AfterA;
  bool coalesced = false;
  int x_value_rank = 0;  // 0 = just above a (unused when coalesced)
  int y_gap_index = 0;   // lambda split point (unused when coalesced)
  bool y_above_z = true; // y is the top entry, else second from top
};

std::vector<RExtension> enumerate_r_extensions(const Permutation& p);
Permutation realize_r_extension(const Permutation& p, const RExtension& ext);

/// R(p) realized as a set of permutations; every member contains p and has
/// length |p|+1 (coalesced) or |p|+2.
PermutationSet generate_r(const Permutation& p);

/// minimal_elements(R(p)).
PermutationSet basis_two_lr(const Permutation& p);

/// Basis for p = (n-2) alpha (n-1) n, the one shape the reductions cannot
/// reach.
PermutationSet basis_special_three(const Permutation& p);

enum class CrossCheck { Auto, On, Off };

enum class BasisOutcome { Basis, NotAClass };

struct BasisResult {
  BasisOutcome outcome = BasisOutcome::Basis;
  PermutationSet basis;
  std::optional<std::pair<Permutation, Permutation>> witness;
  std::optional<Classification> case_used;
  bool cross_checked = false;
};

/// Full case dispatch for one pattern. `horizon` <= 0 means |p|+3. Auto
/// cross-checks when |p| <= 5; a disagreement with the oracle throws
/// CrossCheckMismatch.
BasisResult inverse_basis(const Permutation& p, CrossCheck check = CrossCheck::Auto,
                          int horizon = 0, int workers = 1);

/// Basis for the inverse image of Av(ps), every member good. Throws
/// ContainsBadPermutation naming the first offender in set order.
BasisResult inverse_basis_set(const PermutationSet& ps,
                              CrossCheck check = CrossCheck::Auto, int horizon = 0,
                              int workers = 1);

void to_json(nlohmann::json& j, const BasisResult& r);

}  // namespace bubblepat
