#include "bubblepat/verify.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <random>

#include "bubblepat/basis.hpp"
#include "bubblepat/classification.hpp"
#include "bubblepat/operators.hpp"
#include "bubblepat/oracle.hpp"
#include "bubblepat/permutation.hpp"

namespace bubblepat {

Suite parse_suite(const std::string& name) {
  if (name == "operators") return Suite::Operators;
  if (name == "good-bases") return Suite::GoodBases;
  if (name == "witnesses") return Suite::Witnesses;
  if (name == "gamma") return Suite::Gamma;
  if (name == "sb") return Suite::Sb;
  if (name == "counts") return Suite::Counts;
  throw ParseError("unknown suite '" + name + "'");
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Operators: return "operators";
    case Suite::GoodBases: return "good-bases";
    case Suite::Witnesses: return "witnesses";
    case Suite::Gamma: return "gamma";
    case Suite::Sb: return "sb";
    case Suite::Counts: return "counts";
  }
  return "?";
}

bool SuiteReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const SuiteCheck& c) { return c.passed; });
}

namespace {

std::vector<Permutation> patterns_of_length(int l) {
  std::vector<Permutation> out;
  SnStream stream(l);
  while (auto p = stream.next()) out.push_back(*p);
  return out;
}

SuiteCheck pass_check(std::string name, std::string detail) {
  return {std::move(name), true, std::move(detail), ""};
}

SuiteCheck fail_check(std::string name, std::string detail, std::string repro) {
  return {std::move(name), false, std::move(detail), std::move(repro)};
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

SuiteReport run_operators(int horizon, int /*workers*/) {
  SuiteReport r;
  r.suite = Suite::Operators;
  r.horizon = horizon;

  const Permutation p231({2, 3, 1});
  const Permutation p321({3, 2, 1});

  long long total = 0;
  std::array<std::optional<Permutation>, 5> first_fail;
  for (int n = 1; n <= horizon; ++n) {
    SnStream stream(n);
    while (auto sp = stream.next()) {
      const Permutation& sigma = *sp;
      ++total;
      const Permutation via_rec = bubble_recursive(sigma);
      const Permutation via_splice = bubble_splice(sigma);
      if (via_rec != via_splice && !first_fail[0]) first_fail[0] = sigma;
      if (!via_splice.ends_with_max() && !first_fail[1]) first_fail[1] = sigma;

      // Entries that are not left-to-right maxima must keep their relative
      // order through the pass.
      const LrDecomposition lr = lr_decompose(sigma);
      std::vector<char> is_max(static_cast<std::size_t>(n) + 1, 0);
      for (int m : lr.maxima) is_max[static_cast<std::size_t>(m)] = 1;
      Word before, after;
      for (int v : sigma.values()) {
        if (!is_max[static_cast<std::size_t>(v)]) before.push_back(v);
      }
      for (int v : via_splice.values()) {
        if (!is_max[static_cast<std::size_t>(v)]) after.push_back(v);
      }
      if (before != after && !first_fail[2]) first_fail[2] = sigma;

      const bool b_sorts = via_splice.is_identity();
      const bool b_avoids = !contains(sigma, p231) && !contains(sigma, p321);
      if (b_sorts != b_avoids && !first_fail[3]) first_fail[3] = sigma;

      const bool s_sorts = stack_pass(sigma).is_identity();
      const bool s_avoids = !contains(sigma, p231);
      if (s_sorts != s_avoids && !first_fail[4]) first_fail[4] = sigma;
    }
  }

  const std::string scope =
      std::to_string(total) + " permutations of length <= " + std::to_string(horizon);
  const std::array<const char*, 5> names = {
      "recursive-vs-splice", "image-ends-with-maximum", "non-maxima-keep-order",
      "bubble-sorts-iff-avoids-231-321", "stack-sorts-iff-avoids-231"};
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (first_fail[i]) {
      r.checks.push_back(fail_check(names[i], "failed at " + first_fail[i]->str(),
                                    "bubblepat apply '" + first_fail[i]->str() +
                                        "' --chain B --trace"));
    } else {
      r.checks.push_back(pass_check(names[i], scope));
    }
  }
  return r;
}

SuiteReport run_good_bases(int max_len, int workers) {
  SuiteReport r;
  r.suite = Suite::GoodBases;
  r.horizon = max_len;

  // Constructed bases against the scan, one check per pattern length.
  for (int l = 1; l <= max_len; ++l) {
    const int h = l + 3;
    int checked = 0;
    std::optional<std::string> failure;
    for (const Permutation& p : patterns_of_length(l)) {
      const Classification cls = classify(p);
      if (!cls.good()) continue;
      ++checked;
      try {
        const BasisResult built = inverse_basis(p, CrossCheck::Off);
        const PermutationSet empirical = empirical_basis(p, h, workers);
        PermutationSet visible;
        for (const Permutation& b : built.basis) {
          if (b.size() <= h) visible.insert(b);
        }
        if (visible != empirical) {
          failure = "basis mismatch for " + p.str();
        }
      } catch (const Error& e) {
        failure = std::string("error for ") + p.str() + ": " + e.what();
      }
      if (failure) break;
    }
    const std::string name = "constructed-vs-empirical-length-" + std::to_string(l);
    if (failure) {
      r.checks.push_back(fail_check(name, *failure, "bubblepat basis '?' --verify"));
    } else {
      r.checks.push_back(pass_check(name, std::to_string(checked) +
                                              " good patterns, scan horizon " +
                                              std::to_string(h)));
    }
  }

  // Stripping a trailing maximum must not change the inverse image.
  {
    int checked = 0;
    std::optional<Permutation> bad;
    for (int l = 2; l <= max_len && !bad; ++l) {
      for (const Permutation& p : patterns_of_length(l)) {
        const Classification cls = classify(p);
        if (cls.kind != Case::TwoLrEndsMax && cls.kind != Case::ThreeLrReducible) continue;
        ++checked;
        const Permutation& red = *cls.reduced;
        bool ok = true;
        for (int n = 1; n <= l + 2 && ok; ++n) {
          SnStream stream(n);
          while (auto sp = stream.next()) {
            if (in_inverse_class(*sp, p) != in_inverse_class(*sp, red)) {
              ok = false;
              break;
            }
          }
        }
        if (!ok) {
          bad = p;
          break;
        }
      }
    }
    if (bad) {
      r.checks.push_back(fail_check("reduction-soundness",
                                    "inverse image changed for " + bad->str(),
                                    "bubblepat classify '" + bad->str() + "'"));
    } else {
      r.checks.push_back(pass_check(
          "reduction-soundness",
          std::to_string(checked) + " reducible patterns, scans two past each length"));
    }
  }

  // The one shape no reduction reaches.
  {
    const Permutation p123({1, 2, 3});
    const PermutationSet expected{Permutation({1, 2, 3}), Permutation({1, 3, 2}),
                                  Permutation({2, 1, 3}), Permutation({3, 1, 2})};
    const BasisResult built = inverse_basis(p123, CrossCheck::Off);
    const auto mismatch =
        find_membership_mismatch(PermutationSet{p123}, built.basis, 7, workers);
    if (built.basis == expected && !mismatch) {
      r.checks.push_back(
          pass_check("special-three-123", "all four members, memberships agree to length 7"));
    } else {
      r.checks.push_back(fail_check("special-three-123",
                                    mismatch ? "memberships differ at " + mismatch->str()
                                             : "unexpected basis",
                                    "bubblepat basis 123 --verify"));
    }
  }

  // Union construction for a set of patterns.
  {
    const PermutationSet targets{Permutation({2, 3, 1}), Permutation({3, 2, 1})};
    const BasisResult built = inverse_basis_set(targets, CrossCheck::Off);
    const auto mismatch = find_membership_mismatch(targets, built.basis, 7, workers);
    if (!mismatch) {
      r.checks.push_back(pass_check("set-union-231-321",
                                    std::to_string(built.basis.size()) +
                                        " basis members, memberships agree to length 7"));
    } else {
      r.checks.push_back(fail_check("set-union-231-321",
                                    "memberships differ at " + mismatch->str(),
                                    "bubblepat basis 231,321 --verify"));
    }
  }

  // Random two-pattern intersections.
  {
    std::vector<Permutation> pool;
    for (int l = 2; l <= std::min(max_len, 4); ++l) {
      for (const Permutation& p : patterns_of_length(l)) {
        if (classify(p).good()) pool.push_back(p);
      }
    }
    std::mt19937 rng(20240811u);
    std::uniform_int_distribution<std::size_t> pick(0, pool.empty() ? 0 : pool.size() - 1);
    std::optional<std::string> failure;
    if (pool.empty()) failure = "no patterns to draw from";
    for (int trial = 0; trial < 10 && !failure; ++trial) {
      const Permutation& p = pool[pick(rng)];
      const Permutation& q = pool[pick(rng)];
      const PermutationSet targets{p, q};
      try {
        const BasisResult built = inverse_basis_set(targets, CrossCheck::Off);
        if (auto bad = find_membership_mismatch(targets, built.basis, 7, workers)) {
          failure = "memberships differ at " + bad->str() + " for {" + p.str() + ", " +
                    q.str() + "}";
        }
      } catch (const Error& e) {
        failure = std::string("error for {") + p.str() + ", " + q.str() + "}: " + e.what();
      }
    }
    if (failure) {
      r.checks.push_back(
          fail_check("random-intersections", *failure, "bubblepat basis '?,?' --verify"));
    } else {
      r.checks.push_back(
          pass_check("random-intersections", "10 seeded pairs, memberships agree to length 7"));
    }
  }

  // Every emitted basis is an antichain within its length bounds.
  {
    int checked = 0;
    std::optional<Permutation> bad;
    for (int l = 1; l <= max_len && !bad; ++l) {
      for (const Permutation& p : patterns_of_length(l)) {
        if (!classify(p).good()) continue;
        ++checked;
        const BasisResult built = inverse_basis(p, CrossCheck::Off);
        if (minimal_elements(built.basis) != built.basis) {
          bad = p;
          break;
        }
        for (const Permutation& b : built.basis) {
          if (b.size() > l + 2) {
            bad = p;
            break;
          }
        }
        if (bad) break;
      }
    }
    if (bad) {
      r.checks.push_back(fail_check("basis-antichain", "failed for " + bad->str(),
                                    "bubblepat basis '" + bad->str() + "' --json"));
    } else {
      r.checks.push_back(pass_check("basis-antichain",
                                    std::to_string(checked) + " good patterns"));
    }
  }

  return r;
}

SuiteReport run_witnesses(int max_len, int workers) {
  SuiteReport r;
  r.suite = Suite::Witnesses;
  r.horizon = max_len;

  int checked = 0;
  std::optional<std::string> invalid;
  std::optional<std::string> shape;
  for (int l = 1; l <= max_len; ++l) {
    for (const Permutation& p : patterns_of_length(l)) {
      if (classify(p).good()) continue;
      ++checked;
      try {
        const auto [t1, t2] = witness_pair(p);
        if (t2.size() != t1.size() + 1 || t1.size() > p.size() + 1) {
          if (!shape) shape = "unexpected witness lengths for " + p.str();
        }
      } catch (const Error& e) {
        if (!invalid) invalid = std::string("witness failed for ") + p.str() + ": " + e.what();
      }
    }
  }
  const std::string scope = std::to_string(checked) + " patterns without a class, length <= " +
                            std::to_string(max_len);
  r.checks.push_back(invalid ? fail_check("witness-validity", *invalid,
                                          "bubblepat basis '?' --json")
                             : pass_check("witness-validity", scope));
  r.checks.push_back(shape ? fail_check("witness-shape", *shape, "bubblepat basis '?' --json")
                           : pass_check("witness-shape", scope));

  // The scan must also notice that these inverse images are not downsets.
  {
    std::optional<Permutation> missed;
    for (int l = 1; l <= max_len && !missed; ++l) {
      for (const Permutation& p : patterns_of_length(l)) {
        if (classify(p).good()) continue;
        if (downset_check(p, p.size() + 2, workers).is_downset) {
          missed = p;
          break;
        }
      }
    }
    r.checks.push_back(
        missed ? fail_check("oracle-agrees-not-a-class",
                            "no violation found for " + missed->str() + " up to length " +
                                std::to_string(missed->size() + 2),
                            "bubblepat basis '" + missed->str() + "' --verify")
               : pass_check("oracle-agrees-not-a-class", scope));
  }

  return r;
}

SuiteReport run_gamma(int horizon, int workers) {
  SuiteReport r;
  r.suite = Suite::Gamma;
  r.horizon = horizon;

  {
    bool ok = true;
    long long expect = 1;
    for (int k = 0; k <= 3; ++k) {
      expect *= k + 1;
      if (static_cast<long long>(gamma(k).size()) != expect) ok = false;
    }
    r.checks.push_back(ok ? pass_check("gamma-sizes", "|Gamma_k| = (k+1)! for k = 0..3")
                          : fail_check("gamma-sizes", "size formula failed",
                                       "bubblepat verify gamma"));
  }

  for (int k = 1; k <= 3; ++k) {
    const std::string name = "sorting-dichotomy-k-" + std::to_string(k);
    const bool ok = verify_gamma(k, horizon, workers);
    r.checks.push_back(ok ? pass_check(name, "B^" + std::to_string(k) +
                                                 " sorts iff Gamma_" + std::to_string(k) +
                                                 " avoided, length <= " +
                                                 std::to_string(horizon))
                          : fail_check(name, "dichotomy failed",
                                       "bubblepat verify gamma -n " + std::to_string(horizon)));
  }

  {
    const int h = std::min(horizon, 8);
    const DownsetReport rep = check_set_class(gamma(2), h, workers);
    r.checks.push_back(rep.is_downset
                           ? pass_check("gamma2-inverse-is-downset",
                                        "scan to length " + std::to_string(h))
                           : fail_check("gamma2-inverse-is-downset",
                                        "violation at " + rep.inside->str(),
                                        "bubblepat enumerate '2341' --verify"));
  }

  {
    const int h = std::min(horizon, 8);
    const auto bad = find_membership_mismatch(gamma(2), gamma(3), h, workers);
    r.checks.push_back(!bad ? pass_check("gamma2-inverse-is-gamma3",
                                         "memberships agree to length " + std::to_string(h))
                            : fail_check("gamma2-inverse-is-gamma3",
                                         "memberships differ at " + bad->str(),
                                         "bubblepat verify gamma -n " + std::to_string(h)));
  }

  {
    // Sorting by k passes has the closed count k^(n-k) k! once n reaches k.
    bool ok = true;
    const int h = std::min(horizon, 9);
    for (int k = 1; k <= 4 && ok; ++k) {
      const CountSequence cs = count_av(ClassSpec(gamma(k - 1)), h);
      for (const auto& [n, c] : cs.counts) {
        long long expect;
        if (n <= k) {
          expect = 1;
          for (int i = 2; i <= n; ++i) expect *= i;
        } else {
          expect = 1;
          for (int i = 2; i <= k; ++i) expect *= i;
          for (int i = 0; i < n - k; ++i) expect *= k;
        }
        if (c != expect) {
          ok = false;
          break;
        }
      }
    }
    r.checks.push_back(ok ? pass_check("gamma-counts",
                                       "k^(n-k) k! for k = 1..4, length <= " +
                                           std::to_string(h))
                          : fail_check("gamma-counts", "count formula failed",
                                       "bubblepat enumerate '21' -n 9"));
  }

  return r;
}

SuiteReport run_sb(int horizon, int workers) {
  SuiteReport r;
  r.suite = Suite::Sb;
  r.horizon = horizon;

  const PermutationSet basis{Permutation({3, 2, 4, 1}), Permutation({2, 3, 4, 1}),
                             Permutation({4, 2, 3, 1}), Permutation({2, 4, 3, 1})};
  const std::vector<Word> raw = [&] {
    std::vector<Word> v;
    for (const Permutation& b : basis) v.push_back(b.values());
    return v;
  }();

  long long total = 0;
  std::optional<Permutation> mismatch;
  std::vector<long long> avoiders(static_cast<std::size_t>(horizon) + 1, 0);
  for (int n = 1; n <= horizon; ++n) {
    SnStream stream(n);
    while (auto sp = stream.next()) {
      const Permutation& sigma = *sp;
      ++total;
      const bool sorts = stack_pass(bubble_splice(sigma)).is_identity();
      bool avoids = true;
      for (const Word& w : raw) {
        if (contains_pattern(sigma.values(), w)) {
          avoids = false;
          break;
        }
      }
      if (avoids) ++avoiders[static_cast<std::size_t>(n)];
      if (sorts != avoids && !mismatch) mismatch = sigma;
    }
  }

  r.checks.push_back(mismatch
                         ? fail_check("sb-sortable-dichotomy", "failed at " + mismatch->str(),
                                      "bubblepat apply '" + mismatch->str() + "' --chain SB")
                         : pass_check("sb-sortable-dichotomy",
                                      std::to_string(total) + " permutations of length <= " +
                                          std::to_string(horizon)));

  {
    bool ok = true;
    for (int n = 1; n <= horizon; ++n) {
      if (avoiders[static_cast<std::size_t>(n)] != binomial(2 * n - 2, n - 1)) ok = false;
    }
    r.checks.push_back(ok ? pass_check("sb-counts-are-central-binomials",
                                       "lengths 1.." + std::to_string(horizon))
                          : fail_check("sb-counts-are-central-binomials", "count mismatch",
                                       "bubblepat enumerate 3241,2341,4231,2431 -n " +
                                           std::to_string(horizon)));
  }

  {
    const int h = std::min(horizon, 8);
    const DownsetReport rep = check_set_class(basis, h, workers);
    r.checks.push_back(rep.is_downset
                           ? pass_check("sb-class-is-downset", "scan to length " + std::to_string(h))
                           : fail_check("sb-class-is-downset", "violation at " + rep.inside->str(),
                                        "bubblepat enumerate 3241,2341,4231,2431 --verify"));
  }

  return r;
}

SuiteReport run_counts(int horizon, int workers) {
  (void)workers;
  SuiteReport r;
  r.suite = Suite::Counts;
  r.horizon = horizon;

  {
    const int h = std::min(horizon, 7);
    std::mt19937 rng(7091u);
    std::optional<std::string> failure;
    for (int trial = 0; trial < 20 && !failure; ++trial) {
      PermutationSet basis;
      std::uniform_int_distribution<int> count_dist(1, 3);
      std::uniform_int_distribution<int> len_dist(2, 5);
      const int members = count_dist(rng);
      for (int i = 0; i < members; ++i) {
        Word w(static_cast<std::size_t>(len_dist(rng)));
        std::iota(w.begin(), w.end(), 1);
        std::shuffle(w.begin(), w.end(), rng);
        basis.insert(Permutation(std::move(w)));
      }
      const ClassSpec spec(basis);
      const CountSequence a = count_av(spec, h);
      const CountSequence b = count_av_naive(spec, h);
      if (a.counts != b.counts) {
        std::string names;
        for (const Permutation& p : spec.basis()) names += " " + p.display();
        failure = "tree and direct counts differ for basis" + names;
      }
    }
    r.checks.push_back(failure ? fail_check("tree-vs-direct-random-bases", *failure,
                                            "bubblepat enumerate '?' -n 7")
                               : pass_check("tree-vs-direct-random-bases",
                                            "20 seeded bases, length <= " + std::to_string(h)));
  }

  {
    bool ok = true;
    const CountSequence ones = count_av(ClassSpec({Permutation({2, 1})}), horizon);
    for (const auto& [n, c] : ones.counts) {
      if (c != 1) ok = false;
    }
    const CountSequence doubling =
        count_av(ClassSpec({Permutation({2, 3, 1}), Permutation({3, 2, 1})}), horizon);
    long long expect = 1;
    for (const auto& [n, c] : doubling.counts) {
      if (c != expect) ok = false;
      expect *= 2;
    }
    const CountSequence central =
        count_av(ClassSpec({Permutation({3, 2, 4, 1}), Permutation({2, 3, 4, 1}),
                            Permutation({4, 2, 3, 1}), Permutation({2, 4, 3, 1})}),
                 horizon);
    for (const auto& [n, c] : central.counts) {
      if (c != binomial(2 * n - 2, n - 1)) ok = false;
    }
    r.checks.push_back(ok ? pass_check("closed-forms",
                                       "Av(21), Av(231,321), and the SB class, length <= " +
                                           std::to_string(horizon))
                          : fail_check("closed-forms", "a closed form failed",
                                       "bubblepat enumerate 231,321 -n " +
                                           std::to_string(horizon)));
  }

  return r;
}

}  // namespace

SuiteReport run_suite(Suite suite, int horizon, int workers) {
  if (horizon <= 0) {
    horizon = (suite == Suite::GoodBases || suite == Suite::Witnesses) ? 4 : 8;
  }
  if (workers < 1) workers = 1;
  switch (suite) {
    case Suite::Operators: return run_operators(horizon, workers);
    case Suite::GoodBases: return run_good_bases(horizon, workers);
    case Suite::Witnesses: return run_witnesses(horizon, workers);
    case Suite::Gamma: return run_gamma(horizon, workers);
    case Suite::Sb: return run_sb(horizon, workers);
    case Suite::Counts: return run_counts(horizon, workers);
  }
  throw Error("unknown suite");
}

std::string render_text(const SuiteReport& report) {
  std::string out = "suite " + suite_name(report.suite) + " (horizon " +
                    std::to_string(report.horizon) + ")\n";
  int passed = 0;
  for (const SuiteCheck& c : report.checks) {
    out += c.passed ? "[PASS] " : "[FAIL] ";
    out += c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
    if (!c.passed && !c.repro.empty()) out += "       repro: " + c.repro + "\n";
    if (c.passed) ++passed;
  }
  out += "result: ";
  out += report.all_passed() ? "PASS" : "FAIL";
  out += " (" + std::to_string(passed) + "/" + std::to_string(report.checks.size()) +
         " checks)\n";
  return out;
}

void to_json(nlohmann::json& j, const SuiteReport& r) {
  j = nlohmann::json::object();
  j["suite"] = suite_name(r.suite);
  j["horizon"] = r.horizon;
  j["passed"] = r.all_passed();
  auto arr = nlohmann::json::array();
  for (const SuiteCheck& c : r.checks) {
    arr.push_back({{"name", c.name},
                   {"passed", c.passed},
                   {"detail", c.detail},
                   {"repro", c.repro}});
  }
  j["checks"] = std::move(arr);
}

}  // namespace bubblepat
