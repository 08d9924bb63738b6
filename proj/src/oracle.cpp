#include "bubblepat/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <numeric>
#include <thread>

#include "bubblepat/operators.hpp"

namespace bubblepat {

namespace {

std::atomic<int> g_practical_cap{11};

void check_cap(int horizon) {
  const int cap = practical_cap();
  if (horizon > cap) throw HorizonExceeded(horizon, cap);
}

std::vector<Word> raw_patterns(const PermutationSet& ps) {
  std::vector<Word> out;
  out.reserve(ps.size());
  for (const Permutation& p : ps) out.push_back(p.values());
  return out;
}

bool avoids_all_raw(std::span<const int> w, const std::vector<Word>& pats) {
  for (const Word& p : pats) {
    if (contains_pattern(w, p)) return false;
  }
  return true;
}

// Lexicographic enumeration of the permutations of 1..n whose first entry is
// v. The callback may return false to stop this partition early.
template <class Fn>
void scan_partition(int n, int v, Fn&& fn) {
  std::vector<int> cur(static_cast<std::size_t>(n));
  cur[0] = v;
  int t = 1;
  for (int u = 1; u <= n; ++u) {
    if (u != v) cur[static_cast<std::size_t>(t++)] = u;
  }
  if (n == 1) {
    fn(std::span<const int>(cur));
    return;
  }
  do {
    if (!fn(std::span<const int>(cur))) return;
  } while (std::next_permutation(cur.begin() + 1, cur.end()));
}

// Runs job(v) for v = 1..n and returns results indexed by partition. The
// fold over results always happens in partition order, so worker count
// never changes an outcome.
template <class R, class Job>
std::vector<R> run_partitions(int n, int workers, Job&& job) {
  std::vector<R> results(static_cast<std::size_t>(n));
  const int use = std::max(1, std::min(workers, n));
  if (use == 1) {
    for (int v = 1; v <= n; ++v) results[static_cast<std::size_t>(v - 1)] = job(v);
    return results;
  }
  std::atomic<int> next{1};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(use));
  for (int t = 0; t < use; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const int v = next.fetch_add(1);
        if (v > n) return;
        try {
          results[static_cast<std::size_t>(v - 1)] = job(v);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (std::thread& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return results;
}

struct PartitionViolation {
  Word inside;
  Word outside;
};

// Lexicographically first member of the partition that has a one-point
// deletion outside the class, together with its least such deletion.
std::optional<PartitionViolation> downset_scan(int n, int v,
                                               const std::vector<Word>& pats) {
  std::optional<PartitionViolation> found;
  Word img, del, delimg;
  scan_partition(n, v, [&](std::span<const int> sigma) {
    bubble_into(sigma, img);
    if (!avoids_all_raw(img, pats)) return true;  // not in the class
    std::optional<Word> least;
    for (int i = 0; i < n; ++i) {
      standardized_deletion(sigma, i, del);
      bubble_into(del, delimg);
      if (!avoids_all_raw(delimg, pats)) {
        if (!least || del < *least) least = del;
      }
    }
    if (least) {
      found = PartitionViolation{Word(sigma.begin(), sigma.end()), std::move(*least)};
      return false;
    }
    return true;
  });
  return found;
}

DownsetReport downset_impl(const PermutationSet& ps, int horizon, int workers) {
  check_cap(horizon);
  const std::vector<Word> pats = raw_patterns(ps);
  DownsetReport rep;
  rep.horizon = horizon;
  for (int n = 1; n <= horizon; ++n) {
    auto parts = run_partitions<std::optional<PartitionViolation>>(
        n, workers, [&](int v) { return downset_scan(n, v, pats); });
    for (const auto& pv : parts) {
      if (pv) {
        rep.is_downset = false;
        rep.inside = Permutation(pv->inside);
        rep.outside = Permutation(pv->outside);
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace

int practical_cap() { return g_practical_cap.load(); }

void set_practical_cap(int cap) {
  if (cap < 1) throw Error("practical cap must be at least 1");
  g_practical_cap.store(cap);
}

SnStream::SnStream(int n) {
  if (n < 1) throw Error("permutation length must be at least 1");
  check_cap(n);
  current_.resize(static_cast<std::size_t>(n));
  std::iota(current_.begin(), current_.end(), 1);
}

std::optional<Permutation> SnStream::next() {
  if (done_) return std::nullopt;
  Permutation out{Word(current_)};
  done_ = !std::next_permutation(current_.begin(), current_.end());
  return out;
}

ClassSpec::ClassSpec(const PermutationSet& basis) : basis_(minimal_elements(basis)) {}

bool ClassSpec::avoids_all(const Permutation& p) const {
  for (const Permutation& b : basis_) {
    if (contains(p, b)) return false;
  }
  return true;
}

bool in_inverse_class(const Permutation& sigma, const Permutation& p) {
  return !contains(bubble_splice(sigma), p);
}

DownsetReport downset_check(const Permutation& p, int horizon, int workers) {
  return downset_impl(PermutationSet{p}, horizon, workers);
}

DownsetReport check_set_class(const PermutationSet& ps, int horizon, int workers) {
  return downset_impl(ps, horizon, workers);
}

namespace {

struct EmpiricalPartition {
  std::optional<PartitionViolation> violation;
  std::vector<Word> minima;
};

// One fused pass: members get the downset test, non-members the minimality
// test. Minimality by one-point deletions is only meaningful because the
// same scan aborts on any downset violation.
EmpiricalPartition empirical_scan(int n, int v, const std::vector<Word>& pats) {
  EmpiricalPartition out;
  Word img, del, delimg;
  scan_partition(n, v, [&](std::span<const int> sigma) {
    bubble_into(sigma, img);
    if (avoids_all_raw(img, pats)) {
      std::optional<Word> least;
      for (int i = 0; i < n; ++i) {
        standardized_deletion(sigma, i, del);
        bubble_into(del, delimg);
        if (!avoids_all_raw(delimg, pats)) {
          if (!least || del < *least) least = del;
        }
      }
      if (least) {
        out.violation =
            PartitionViolation{Word(sigma.begin(), sigma.end()), std::move(*least)};
        return false;
      }
    } else {
      for (int i = 0; i < n; ++i) {
        standardized_deletion(sigma, i, del);
        bubble_into(del, delimg);
        if (!avoids_all_raw(delimg, pats)) return true;  // deletion already outside
      }
      out.minima.push_back(Word(sigma.begin(), sigma.end()));
    }
    return true;
  });
  return out;
}

}  // namespace

PermutationSet empirical_basis(const Permutation& p, int horizon, int workers) {
  check_cap(horizon);
  const std::vector<Word> pats = raw_patterns(PermutationSet{p});
  PermutationSet out;
  for (int n = 1; n <= horizon; ++n) {
    auto parts = run_partitions<EmpiricalPartition>(
        n, workers, [&](int v) { return empirical_scan(n, v, pats); });
    for (const EmpiricalPartition& part : parts) {
      if (part.violation) {
        throw NotADownset(Permutation(part.violation->outside).str(),
                          Permutation(part.violation->inside).str());
      }
    }
    for (const EmpiricalPartition& part : parts) {
      for (const Word& w : part.minima) out.insert(Permutation(w));
    }
  }
  return out;
}

namespace {

void fill_growth_points(CountSequence& cs) {
  for (const auto& [n, c] : cs.counts) {
    cs.growth_points[n] =
        c > 0 ? std::pow(static_cast<double>(c), 1.0 / static_cast<double>(n)) : 0.0;
  }
}

}  // namespace

CountSequence count_av(const ClassSpec& spec, int horizon) {
  check_cap(horizon);
  CountSequence cs;
  if (horizon < 1) return cs;
  for (int n = 1; n <= horizon; ++n) cs.counts[n] = 0;
  const std::vector<Word> pats = raw_patterns(spec.basis());

  // Insertion tree over right extensions: children of sigma append a new
  // value; any occurrence in sigma persists in every child, so pruning is
  // sound.
  auto dfs = [&](auto&& self, const Word& sigma) -> void {
    cs.counts[static_cast<int>(sigma.size())] += 1;
    if (static_cast<int>(sigma.size()) == horizon) return;
    const int m = static_cast<int>(sigma.size());
    Word child(static_cast<std::size_t>(m) + 1);
    for (int v = 1; v <= m + 1; ++v) {
      for (int i = 0; i < m; ++i) {
        const int u = sigma[static_cast<std::size_t>(i)];
        child[static_cast<std::size_t>(i)] = u >= v ? u + 1 : u;
      }
      child[static_cast<std::size_t>(m)] = v;
      if (avoids_all_raw(child, pats)) self(self, child);
    }
  };

  const Word root{1};
  if (avoids_all_raw(root, pats)) dfs(dfs, root);
  fill_growth_points(cs);
  return cs;
}

CountSequence count_av_naive(const ClassSpec& spec, int horizon) {
  check_cap(horizon);
  CountSequence cs;
  if (horizon < 1) return cs;
  const std::vector<Word> pats = raw_patterns(spec.basis());
  for (int n = 1; n <= horizon; ++n) {
    std::int64_t count = 0;
    for (int v = 1; v <= n; ++v) {
      scan_partition(n, v, [&](std::span<const int> sigma) {
        if (avoids_all_raw(sigma, pats)) ++count;
        return true;
      });
    }
    cs.counts[n] = count;
  }
  fill_growth_points(cs);
  return cs;
}

double growth_estimate(const CountSequence& cs) {
  if (cs.counts.empty()) throw EmptySequence();
  const auto& [n, c] = *cs.counts.rbegin();
  if (c <= 0) return 0.0;
  return std::pow(static_cast<double>(c), 1.0 / static_cast<double>(n));
}

std::string to_csv(const CountSequence& cs) {
  std::string out = "n,count,root\n";
  char buf[64];
  for (const auto& [n, c] : cs.counts) {
    const double root = cs.growth_points.count(n) ? cs.growth_points.at(n) : 0.0;
    std::snprintf(buf, sizeof(buf), "%d,%lld,%.6f\n", n, static_cast<long long>(c), root);
    out += buf;
  }
  return out;
}

PermutationSet gamma(int k) {
  if (k < 0) throw Error("gamma index must be non-negative");
  check_cap(k + 2);
  Word prefix(static_cast<std::size_t>(k) + 1);
  std::iota(prefix.begin(), prefix.end(), 2);
  PermutationSet out;
  do {
    Word w = prefix;
    w.push_back(1);
    out.insert(Permutation(std::move(w)));
  } while (std::next_permutation(prefix.begin(), prefix.end()));
  return out;
}

bool verify_gamma(int k, int horizon, int workers) {
  if (k < 0) throw Error("gamma index must be non-negative");
  check_cap(horizon);
  const std::vector<Word> pats = raw_patterns(gamma(k));
  for (int n = 1; n <= horizon; ++n) {
    auto parts = run_partitions<bool>(n, workers, [&](int v) {
      bool ok = true;
      Word cur, tmp;
      scan_partition(n, v, [&](std::span<const int> sigma) {
        cur.assign(sigma.begin(), sigma.end());
        for (int j = 0; j < k; ++j) {
          bubble_into(cur, tmp);
          cur.swap(tmp);
        }
        if (is_increasing(cur) != avoids_all_raw(sigma, pats)) {
          ok = false;
          return false;
        }
        return true;
      });
      return ok;
    });
    for (bool ok : parts) {
      if (!ok) return false;
    }
  }
  return true;
}

std::optional<Permutation> find_membership_mismatch(const PermutationSet& image_patterns,
                                                    const PermutationSet& direct_patterns,
                                                    int horizon, int workers) {
  check_cap(horizon);
  const std::vector<Word> image = raw_patterns(image_patterns);
  const std::vector<Word> direct = raw_patterns(direct_patterns);
  for (int n = 1; n <= horizon; ++n) {
    auto parts = run_partitions<std::optional<Word>>(n, workers, [&](int v) {
      std::optional<Word> bad;
      Word img;
      scan_partition(n, v, [&](std::span<const int> sigma) {
        bubble_into(sigma, img);
        if (avoids_all_raw(img, image) != avoids_all_raw(sigma, direct)) {
          bad = Word(sigma.begin(), sigma.end());
          return false;
        }
        return true;
      });
      return bad;
    });
    for (const auto& bad : parts) {
      if (bad) return Permutation(*bad);
    }
  }
  return std::nullopt;
}

void to_json(nlohmann::json& j, const DownsetReport& r) {
  j = nlohmann::json::object();
  j["is_downset"] = r.is_downset;
  j["horizon"] = r.horizon;
  if (r.outside && r.inside) {
    j["violation"] = {{"outside", r.outside->str()}, {"inside", r.inside->str()}};
  } else {
    j["violation"] = nullptr;
  }
}

void to_json(nlohmann::json& j, const CountSequence& cs) {
  j = nlohmann::json::object();
  auto rows = nlohmann::json::array();
  for (const auto& [n, c] : cs.counts) {
    rows.push_back({{"n", n},
                    {"count", c},
                    {"root", cs.growth_points.count(n) ? cs.growth_points.at(n) : 0.0}});
  }
  j["counts"] = std::move(rows);
}

}  // namespace bubblepat
