#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bubblepat/permutation.hpp"

namespace bubblepat {

enum class Case {
  EmptyClass,       // pattern 1
  SingletonClass,   // pattern 12
  OneLr,            // n alpha, n >= 2
  TwoLrEndsMax,     // m alpha n
  TwoLrGeneral,     // two maxima, does not end with the second
  ThreeLrReducible, // a alpha b beta n with beta non-empty
  ThreeLrSpecial,   // (n-2) alpha (n-1) n
  NotAClass,
};

std::string case_name(Case c);

/// The pieces named in the case analysis. For good cases with two or three
/// maxima these are the maxima and the gaps between them; for NotAClass
/// they describe the normal form ending in a trailing maximum (appended
/// when the permutation does not already end with its maximum, in which
/// case gamma may swallow later maxima). Absent fields do not occur in the
/// case at hand.
struct ThreePartDecomposition {
  int a = 0;
  Word alpha;
  std::optional<int> b;
  Word beta;
  std::optional<int> c;
  Word gamma;
  std::optional<int> trailing_max;
};

struct Classification {
  Case kind = Case::EmptyClass;
  std::vector<int> lr_positions;  // 1-based
  std::optional<ThreePartDecomposition> decomposition;
  std::optional<Permutation> reduced;  // TwoLrEndsMax / ThreeLrReducible

  bool good() const { return kind != Case::NotAClass; }
};

/// Total over non-empty permutations; cases are mutually exclusive.
Classification classify(const Permutation& p);

/// p with n+1 appended. Throws EndsWithMax when p already ends with its
/// maximum, since then the extension changes nothing about the inverse
/// image.
Permutation append_max(const Permutation& p);

/// For a NotAClass permutation, a concrete pair witnessing that the
/// inverse image is not closed under containment: theta1 is contained in
/// theta2, theta1 lies in the inverse image, theta2 does not. The invariants
/// are re-verified before returning and a violation throws.
std::pair<Permutation, Permutation> witness_pair(const Permutation& p);

void to_json(nlohmann::json& j, const ThreePartDecomposition& d);
void to_json(nlohmann::json& j, const Classification& c);

}  // namespace bubblepat
