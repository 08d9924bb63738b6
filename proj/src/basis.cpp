#include "bubblepat/basis.hpp"

#include <algorithm>
#include <string>

#include "bubblepat/oracle.hpp"

namespace bubblepat {

PermutationSet basis_one_lr(const Permutation& p) {
  const Classification cls = classify(p);
  if (cls.kind != Case::OneLr) {
    throw WrongCase("basis_one_lr needs a permutation of length >= 2 starting with its maximum");
  }
  const int n = p.size();
  Word w1{n, n + 1};
  Word w2{n + 1, n};
  w1.insert(w1.end(), p.values().begin() + 1, p.values().end());
  w2.insert(w2.end(), p.values().begin() + 1, p.values().end());
  PermutationSet out;
  out.insert(Permutation(std::move(w1)));
  out.insert(Permutation(std::move(w2)));
  return out;
}

namespace {

struct TwoLrParts {
  int a = 0;
  Word lambda;
  Word mu;  // non-empty
};

TwoLrParts two_lr_parts(const Permutation& p) {
  const Classification cls = classify(p);
  if (cls.kind != Case::TwoLrGeneral) {
    throw WrongCase("R construction needs two maxima with the second not final");
  }
  const LrDecomposition lr = lr_decompose(p);
  return {lr.maxima[0], lr.gaps[0], lr.gaps[1]};
}

}  // namespace

std::vector<RExtension> enumerate_r_extensions(const Permutation& p) {
  const TwoLrParts parts = two_lr_parts(p);
  int above = 0;
  for (int u : parts.mu) {
    if (u > parts.a) ++above;
  }
  const int splits = static_cast<int>(parts.lambda.size());

  std::vector<RExtension> out;
  for (bool top : {true, false}) {
    out.push_back({Side::AfterA, true, 0, 0, top});
    out.push_back({Side::BeforeA, true, 0, 0, top});
    for (Side side : {Side::BeforeA, Side::AfterA}) {
      // x right after a with an empty first gap is the coalesced shape, so
      // the AfterA split starts one later.
      const int first_split = side == Side::AfterA ? 1 : 0;
      for (int i = first_split; i <= splits; ++i) {
        for (int xr = 0; xr <= above; ++xr) {
          out.push_back({side, false, xr, i, top});
        }
      }
    }
  }
  return out;
}

Permutation realize_r_extension(const Permutation& p, const RExtension& ext) {
  const TwoLrParts parts = two_lr_parts(p);
  const int n = p.size();

  // Work at ten times the original values so the new entries fit between
  // existing ones; standardize at the end.
  const int va = 10 * parts.a;
  const int vz = 10 * n;
  const int vy = ext.y_above_z ? vz + 5 : vz - 1;

  Word out;
  out.reserve(static_cast<std::size_t>(n) + 2);
  auto push_scaled = [&out](const Word& w) {
    for (int u : w) out.push_back(10 * u);
  };

  if (ext.coalesced) {
    if (ext.x_side == Side::AfterA) {
      out.push_back(va);
      out.push_back(vy);
    } else {
      out.push_back(vy);
      out.push_back(va);
    }
    push_scaled(parts.lambda);
    out.push_back(vz);
    push_scaled(parts.mu);
    return standardize(out);
  }

  std::vector<int> floors{va};
  for (int u : parts.mu) {
    if (u > parts.a) floors.push_back(10 * u);
  }
  std::sort(floors.begin(), floors.end());
  if (ext.x_value_rank < 0 || ext.x_value_rank >= static_cast<int>(floors.size())) {
    throw Error("x_value_rank out of range");
  }
  const int vx = floors[static_cast<std::size_t>(ext.x_value_rank)] + 5;

  const int split = ext.y_gap_index;
  if (split < 0 || split > static_cast<int>(parts.lambda.size())) {
    throw Error("y_gap_index out of range");
  }

  if (ext.x_side == Side::AfterA) {
    out.push_back(va);
    out.push_back(vx);
  } else {
    out.push_back(vx);
    out.push_back(va);
  }
  for (int i = 0; i < split; ++i) out.push_back(10 * parts.lambda[static_cast<std::size_t>(i)]);
  out.push_back(vy);
  for (int i = split; i < static_cast<int>(parts.lambda.size()); ++i) {
    out.push_back(10 * parts.lambda[static_cast<std::size_t>(i)]);
  }
  out.push_back(vz);
  push_scaled(parts.mu);
  return standardize(out);
}

PermutationSet generate_r(const Permutation& p) {
  PermutationSet out;
  for (const RExtension& ext : enumerate_r_extensions(p)) {
    out.insert(realize_r_extension(p, ext));
  }
  return out;
}

PermutationSet basis_two_lr(const Permutation& p) {
  return minimal_elements(generate_r(p));
}

PermutationSet basis_special_three(const Permutation& p) {
  const Classification cls = classify(p);
  if (cls.kind != Case::ThreeLrSpecial) {
    throw WrongCase("basis_special_three needs the shape (n-2) alpha (n-1) n");
  }
  const int n = p.size();
  const Word& alpha = cls.decomposition->alpha;

  auto make = [&](int first, int second, int last) {
    Word w{first, second};
    w.insert(w.end(), alpha.begin(), alpha.end());
    w.push_back(last);
    return Permutation(std::move(w));
  };

  PermutationSet out;
  out.insert(make(n - 2, n - 1, n));
  out.insert(make(n - 1, n - 2, n));
  out.insert(make(n - 2, n, n - 1));
  out.insert(make(n, n - 2, n - 1));
  return out;
}

namespace {

PermutationSet construct_basis(const Permutation& p, const Classification& cls) {
  switch (cls.kind) {
    case Case::EmptyClass:
      return {Permutation({1})};
    case Case::SingletonClass:
      return {Permutation({1, 2}), Permutation({2, 1})};
    case Case::OneLr:
      return basis_one_lr(p);
    case Case::TwoLrEndsMax:
      // Trailing maximum changes nothing; answer for the stripped pattern.
      return basis_one_lr(*cls.reduced);
    case Case::TwoLrGeneral:
      return basis_two_lr(p);
    case Case::ThreeLrReducible:
      return construct_basis(*cls.reduced, classify(*cls.reduced));
    case Case::ThreeLrSpecial:
      return basis_special_three(p);
    case Case::NotAClass:
      break;
  }
  throw WrongCase("no basis construction for " + case_name(cls.kind));
}

std::string set_str(const PermutationSet& ps) {
  std::string out = "{";
  bool first = true;
  for (const Permutation& q : ps) {
    if (!first) out += ", ";
    out += q.str();
    first = false;
  }
  return out + "}";
}

void cross_check_single(const BasisResult& r, const Permutation& p, int horizon,
                        int workers) {
  const int h = horizon > 0 ? horizon : p.size() + 3;
  if (r.outcome == BasisOutcome::NotAClass) {
    const DownsetReport rep = downset_check(p, h, workers);
    if (rep.is_downset) {
      throw CrossCheckMismatch("classified " + p.str() +
                               " as not a class, but the oracle found no containment "
                               "violation up to length " +
                               std::to_string(h));
    }
    return;
  }
  PermutationSet empirical;
  try {
    empirical = empirical_basis(p, h, workers);
  } catch (const NotADownset& e) {
    throw CrossCheckMismatch("constructed a basis for " + p.str() +
                             " but the inverse image is not a downset: " + e.what());
  }
  PermutationSet visible;
  for (const Permutation& b : r.basis) {
    if (b.size() <= h) visible.insert(b);
  }
  if (visible != empirical) {
    throw CrossCheckMismatch("basis mismatch for " + p.str() + ": constructed " +
                             set_str(visible) + ", oracle found " + set_str(empirical));
  }
}

}  // namespace

BasisResult inverse_basis(const Permutation& p, CrossCheck check, int horizon,
                          int workers) {
  const Classification cls = classify(p);
  BasisResult r;
  r.case_used = cls;
  if (cls.kind == Case::NotAClass) {
    r.outcome = BasisOutcome::NotAClass;
    r.witness = witness_pair(p);
  } else {
    r.outcome = BasisOutcome::Basis;
    r.basis = construct_basis(p, cls);
  }
  const bool want = check == CrossCheck::On || (check == CrossCheck::Auto && p.size() <= 5);
  if (want) {
    cross_check_single(r, p, horizon, workers);
    r.cross_checked = true;
  }
  return r;
}

BasisResult inverse_basis_set(const PermutationSet& ps, CrossCheck check, int horizon,
                              int workers) {
  if (ps.empty()) throw Error("inverse_basis_set needs a non-empty set");
  int max_len = 0;
  for (const Permutation& q : ps) {
    if (!classify(q).good()) throw ContainsBadPermutation(q.display());
    max_len = std::max(max_len, q.size());
  }

  PermutationSet pool;
  for (const Permutation& q : ps) {
    BasisResult one = inverse_basis(q, CrossCheck::Off);
    pool.insert(one.basis.begin(), one.basis.end());
  }

  BasisResult r;
  r.outcome = BasisOutcome::Basis;
  r.basis = minimal_elements(pool);

  const bool want = check == CrossCheck::On || (check == CrossCheck::Auto && max_len <= 5);
  if (want) {
    const int h = horizon > 0 ? horizon : max_len + 3;
    if (auto bad = find_membership_mismatch(ps, r.basis, h, workers)) {
      throw CrossCheckMismatch("set basis mismatch: memberships differ at " + bad->str());
    }
    r.cross_checked = true;
  }
  return r;
}

void to_json(nlohmann::json& j, const BasisResult& r) {
  j = nlohmann::json::object();
  j["outcome"] = r.outcome == BasisOutcome::Basis ? "Basis" : "NotAClass";
  auto arr = nlohmann::json::array();
  for (const Permutation& b : r.basis) arr.push_back(b.str());
  j["basis"] = std::move(arr);
  if (r.witness) {
    j["witness"] = {{"theta1", r.witness->first.str()},
                    {"theta2", r.witness->second.str()}};
  } else {
    j["witness"] = nullptr;
  }
  if (r.case_used) {
    j["case_used"] = case_name(r.case_used->kind);
  } else {
    j["case_used"] = nullptr;
  }
  j["cross_checked"] = r.cross_checked;
}

}  // namespace bubblepat
