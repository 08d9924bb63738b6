// Acceptance gate: twelve end-to-end criteria, one line each. Exits nonzero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "bubblepat/basis.hpp"
#include "bubblepat/classification.hpp"
#include "bubblepat/operators.hpp"
#include "bubblepat/oracle.hpp"
#include "bubblepat/permutation.hpp"
#include "bubblepat/verify.hpp"

using namespace bubblepat;

namespace {

int failures = 0;

void report(int index, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", index, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2fs", s);
  return buf;
}

std::vector<Permutation> patterns_of_length(int l) {
  std::vector<Permutation> out;
  SnStream stream(l);
  while (auto p = stream.next()) out.push_back(*p);
  return out;
}

bool avoids_all_of(const Permutation& sigma, const PermutationSet& ps) {
  for (const Permutation& p : ps) {
    if (contains(sigma, p)) return false;
  }
  return true;
}

PermutationSet parse_set(const char* text) { return parse_permutation_set(text); }

void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  long long total = 0;
  std::optional<Permutation> bad;
  for (int n = 1; n <= 9 && !bad; ++n) {
    SnStream stream(n);
    while (auto sp = stream.next()) {
      ++total;
      if (bubble_recursive(*sp) != bubble_splice(*sp)) {
        bad = *sp;
        break;
      }
    }
  }
  const double elapsed = seconds_since(start);
  const bool ok = !bad && elapsed < 10.0;
  report(1, "bubble-pass-forms-agree", ok,
         bad ? "recursive and splice images differ at " + bad->str()
             : std::to_string(total) + " permutations of length <= 9 in " +
                   fmt_seconds(elapsed) + " (budget 10s)");
}

void criterion_2() {
  const PermutationSet pats = parse_set("231,321");
  long long total = 0;
  std::optional<Permutation> bad;
  for (int n = 1; n <= 9 && !bad; ++n) {
    SnStream stream(n);
    while (auto sp = stream.next()) {
      ++total;
      const bool sorts = bubble_splice(*sp).is_identity();
      if (sorts != avoids_all_of(*sp, pats)) {
        bad = *sp;
        break;
      }
    }
  }
  report(2, "bubble-sorting-dichotomy", !bad,
         bad ? "dichotomy fails at " + bad->str()
             : "one pass sorts iff the permutation avoids 231 and 321, length <= 9 (" +
                   std::to_string(total) + " permutations)");
}

void criterion_3(int workers) {
  const PermutationSet expect = parse_set("3241,2341,4231,2431");
  std::string detail;
  bool ok = true;
  try {
    const BasisResult built = inverse_basis(parse_permutation("231"), CrossCheck::Off);
    const PermutationSet scanned = empirical_basis(parse_permutation("231"), 6, workers);
    ok = built.outcome == BasisOutcome::Basis && built.basis == expect && scanned == expect;
    detail = ok ? "constructed and scanned bases both equal {2341, 2431, 3241, 4231}"
                : "got a different basis for 231";
  } catch (const Error& e) {
    ok = false;
    detail = e.what();
  }
  report(3, "frozen-basis-231", ok, detail);
}

void criterion_4(int workers) {
  const auto start = std::chrono::steady_clock::now();
  int checked = 0;
  std::optional<std::string> failure;
  for (int l = 2; l <= 5 && !failure; ++l) {
    const int h = l + 3;
    for (const Permutation& p : patterns_of_length(l)) {
      if (!classify(p).good()) continue;
      ++checked;
      try {
        const BasisResult built = inverse_basis(p, CrossCheck::Off);
        PermutationSet visible;
        for (const Permutation& b : built.basis) {
          if (b.size() <= h) visible.insert(b);
        }
        if (visible != empirical_basis(p, h, workers)) {
          failure = "basis mismatch for " + p.str();
          break;
        }
      } catch (const Error& e) {
        failure = "error for " + p.str() + ": " + e.what();
        break;
      }
    }
  }
  const double elapsed = seconds_since(start);
  const bool ok = !failure && elapsed < 900.0;
  report(4, "good-patterns-constructed-vs-empirical", ok,
         failure ? *failure
                 : std::to_string(checked) +
                       " good patterns of length 2..5, scans to pattern length + 3 with the "
                       "closure property verified in the same scan, " +
                       fmt_seconds(elapsed) + " (budget 900s)");
}

void criterion_5() {
  int checked = 0;
  std::optional<std::string> failure;
  for (int l = 3; l <= 5 && !failure; ++l) {
    for (const Permutation& p : patterns_of_length(l)) {
      if (classify(p).good()) continue;
      ++checked;
      try {
        const auto [t1, t2] = witness_pair(p);
        const bool shape = t2.size() == t1.size() + 1 && t1.size() <= p.size() + 1;
        const bool order = contains(t2, t1);
        const bool separates = contains(bubble_splice(t1), p) && !contains(bubble_splice(t2), p);
        if (!(shape && order && separates)) {
          failure = "witness invariants fail for " + p.str();
          break;
        }
      } catch (const Error& e) {
        failure = "error for " + p.str() + ": " + e.what();
        break;
      }
    }
  }
  report(5, "bad-patterns-witness-pairs", !failure,
         failure ? *failure
                 : std::to_string(checked) +
                       " non-class patterns of length 3..5: the smaller witness is contained "
                       "in the larger, lies outside the inverse image, and the larger lies inside");
}

void criterion_6() {
  const Permutation p213 = parse_permutation("213");
  const Permutation p21 = parse_permutation("21");
  const Permutation p1324 = parse_permutation("1324");
  const Permutation p132 = parse_permutation("132");
  std::optional<Permutation> bad;
  for (int n = 1; n <= 7 && !bad; ++n) {
    SnStream stream(n);
    while (auto sp = stream.next()) {
      if (in_inverse_class(*sp, p213) != in_inverse_class(*sp, p21) ||
          in_inverse_class(*sp, p1324) != in_inverse_class(*sp, p132)) {
        bad = *sp;
        break;
      }
    }
  }
  report(6, "redundant-patterns-collapse", !bad,
         bad ? "memberships differ at " + bad->str()
             : "inverse images of Av(213) and Av(21) agree, as do Av(1324) and Av(132), "
               "length <= 7");
}

void criterion_7(int workers) {
  const PermutationSet expect = parse_set("123,132,213,312");
  bool ok = true;
  std::string detail;
  try {
    const BasisResult built = inverse_basis(parse_permutation("123"), CrossCheck::Off);
    ok = built.outcome == BasisOutcome::Basis && built.basis == expect;
    if (!ok) {
      detail = "basis for 123 differs from {123, 132, 213, 312}";
    } else {
      const auto bad = find_membership_mismatch(parse_set("123"), expect, 7, workers);
      ok = !bad.has_value();
      detail = ok ? "basis is {123, 132, 213, 312} and memberships agree to length 7"
                  : "memberships differ at " + bad->str();
    }
  } catch (const Error& e) {
    ok = false;
    detail = e.what();
  }
  report(7, "basis-123-and-membership", ok, detail);
}

void criterion_8() {
  const PermutationSet basis = parse_set("3241,2341,4231,2431");
  const long long expect[] = {0, 1, 2, 6, 20, 70, 252, 924, 3432};
  std::optional<Permutation> bad;
  bool counts_ok = true;
  for (int n = 1; n <= 8 && !bad; ++n) {
    long long avoiders = 0;
    SnStream stream(n);
    while (auto sp = stream.next()) {
      const bool sorts = stack_pass(bubble_splice(*sp)).is_identity();
      const bool avoids = avoids_all_of(*sp, basis);
      if (avoids) ++avoiders;
      if (sorts != avoids) {
        bad = *sp;
        break;
      }
    }
    if (avoiders != expect[n] && !bad) counts_ok = false;
  }
  const bool ok = !bad && counts_ok;
  report(8, "sb-dichotomy-and-counts", ok,
         bad ? "dichotomy fails at " + bad->str()
             : counts_ok ? "bubble then stack sorts iff the permutation avoids the four "
                           "length-4 patterns; avoider counts are the central binomials, "
                           "length <= 8"
                         : "avoider counts are not the central binomials");
}

void criterion_9(int workers) {
  bool ok = true;
  std::string detail;
  for (int k = 0; k <= 3 && ok; ++k) {
    long long size = 1;
    for (int i = 2; i <= k + 1; ++i) size *= i;
    if (static_cast<long long>(gamma(k).size()) != size) {
      ok = false;
      detail = "family size is wrong for k = " + std::to_string(k);
    }
  }
  for (int k = 1; k <= 3 && ok; ++k) {
    if (!verify_gamma(k, 8, workers)) {
      ok = false;
      detail = std::to_string(k) + " passes do not match the family at length <= 8";
    }
  }
  for (int k = 1; k <= 4 && ok; ++k) {
    const CountSequence cs = count_av(ClassSpec(gamma(k - 1)), 8);
    for (const auto& [n, c] : cs.counts) {
      long long expect = 1;
      if (n <= k) {
        for (int i = 2; i <= n; ++i) expect *= i;
      } else {
        for (int i = 2; i <= k; ++i) expect *= i;
        for (int i = 0; i < n - k; ++i) expect *= k;
      }
      if (c != expect) {
        ok = false;
        detail = "count formula fails for k = " + std::to_string(k) + " at length " +
                 std::to_string(n);
        break;
      }
    }
  }
  report(9, "gamma-families", ok,
         ok ? "sizes (k+1)!, sorting dichotomy for k <= 3 at length <= 8, and counts "
              "k^(n-k) k! for k <= 4"
            : detail);
}

void criterion_10(int workers) {
  bool ok = true;
  std::string detail;
  const DownsetReport rep = check_set_class(gamma(2), 8, workers);
  if (!rep.is_downset) {
    ok = false;
    detail = "closure fails at " + rep.inside->str();
  } else {
    const auto bad = find_membership_mismatch(gamma(2), gamma(3), 8, workers);
    if (bad) {
      ok = false;
      detail = "memberships differ at " + bad->str();
    } else {
      detail = "the inverse image of the k = 2 class is closed under containment and "
               "equals avoidance of the k = 3 family, length <= 8";
    }
  }
  report(10, "gamma2-class-closure", ok, detail);
}

void criterion_11() {
  std::vector<Permutation> pool;
  for (int l = 2; l <= 4; ++l) {
    for (const Permutation& p : patterns_of_length(l)) {
      if (classify(p).good()) pool.push_back(p);
    }
  }
  std::mt19937 rng(4242u);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::optional<std::string> failure;
  for (int trial = 0; trial < 10 && !failure; ++trial) {
    PermutationSet pats{pool[pick(rng)], pool[pick(rng)]};
    try {
      const BasisResult r = inverse_basis_set(pats, CrossCheck::Off);
      for (int n = 1; n <= 7 && !failure; ++n) {
        SnStream stream(n);
        while (auto sp = stream.next()) {
          const bool in_image = avoids_all_of(bubble_splice(*sp), pats);
          const bool in_class = avoids_all_of(*sp, r.basis);
          if (in_image != in_class) {
            failure = "memberships differ at " + sp->str() + " for {" +
                      pats.begin()->display() + ", " + pats.rbegin()->display() + "}";
            break;
          }
        }
      }
    } catch (const Error& e) {
      failure = std::string("error: ") + e.what();
    }
  }
  report(11, "random-set-bases", !failure,
         failure ? *failure
                 : "10 seeded two-pattern sets of good patterns: set basis reproduces "
                   "inverse-image membership to length 7");
}

void criterion_12() {
  struct Config {
    Suite suite;
    int horizon;
  };
  const Config configs[] = {
      {Suite::Operators, 6}, {Suite::GoodBases, 3}, {Suite::Witnesses, 4},
      {Suite::Gamma, 6},     {Suite::Sb, 6},        {Suite::Counts, 6},
  };
  bool ok = true;
  std::string detail;
  for (const Config& cfg : configs) {
    const std::string one = render_text(run_suite(cfg.suite, cfg.horizon, 1));
    const std::string two = render_text(run_suite(cfg.suite, cfg.horizon, 2));
    const std::string eight = render_text(run_suite(cfg.suite, cfg.horizon, 8));
    if (one != two || one != eight) {
      ok = false;
      detail = "output depends on the worker count for suite " + suite_name(cfg.suite);
      break;
    }
    if (one.find("result: PASS") == std::string::npos) {
      ok = false;
      detail = "suite " + suite_name(cfg.suite) + " does not pass";
      break;
    }
  }
  report(12, "deterministic-verification", ok,
         ok ? "all six suites pass and render byte-identical reports for 1, 2, and 8 workers"
            : detail);
}

}  // namespace

int main() {
  const int workers =
      static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  criterion_1();
  criterion_2();
  criterion_3(workers);
  criterion_4(workers);
  criterion_5();
  criterion_6();
  criterion_7(workers);
  criterion_8();
  criterion_9(workers);
  criterion_10(workers);
  criterion_11();
  criterion_12();
  if (failures == 0) {
    std::printf("acceptance: 12/12 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d of 12 criteria failed\n", failures);
  return 1;
}
