#include "schublines/sweep.hpp"

#include "schublines/bigint.hpp"
#include "schublines/detail/cg_dp.hpp"
#include "schublines/errors.hpp"
#include "schublines/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <thread>

namespace schublines {

namespace {

void check_level(std::uint32_t n) {
  if (n < 2) {
    throw PreconditionViolation("ambient dimension n must be at least 2, got " +
                                std::to_string(n));
  }
}

void descending_partitions(std::uint64_t remaining, Condition max_part,
                           std::vector<Condition>& parts,
                           const std::function<void(const std::vector<Condition>&)>& visit) {
  if (remaining == 0) {
    visit(parts);
    return;
  }
  for (Condition q = static_cast<Condition>(std::min<std::uint64_t>(max_part, remaining)); q >= 1;
       --q) {
    parts.push_back(q);
    descending_partitions(remaining - q, q, parts, visit);
    parts.pop_back();
  }
}

struct LevelTally {
  std::uint64_t problems = 0;
  std::uint64_t reduced = 0;
  std::vector<SchubertProblem> failures;
};

// Depth-first walk over weakly increasing part lists of one level. states_[d]
// is the Clebsch-Gordan vector after the first d parts, truncated to weights
// that the remaining parts can still bring back to zero. At a leaf the last
// two parts are the two largest, and the vector before them gives all three
// counts of the split on that pair.
template <class T>
class LevelWalker {
 public:
  LevelWalker(std::uint32_t n, bool lower_certified)
      : n_(n), total_(2ULL * n - 2), cap_(n - 1), lower_certified_(lower_certified) {
    states_.resize(total_ + 1);
    parts_.reserve(total_);
  }

  void run_from(Condition first, LevelTally& tally) {
    tally_ = &tally;
    states_[0].assign(1, T{1});
    parts_.clear();
    descend(0, 0, first, first);
  }

 private:
  void descend(std::size_t depth, std::uint64_t used, Condition lo, Condition hi) {
    const std::uint64_t remaining = total_ - used;
    const Condition top = static_cast<Condition>(std::min<std::uint64_t>({hi, cap_, remaining}));
    for (Condition q = lo; q <= top; ++q) {
      if (q == remaining) {
        leaf(depth, q);
      } else if (remaining - q >= q) {
        detail::cg_step(states_[depth], q, remaining - q, states_[depth + 1], prefix_);
        parts_.push_back(q);
        descend(depth + 1, used + q, q, cap_);
        parts_.pop_back();
      }
    }
  }

  void leaf(std::size_t depth, Condition x) {
    ++tally_->problems;
    // depth >= 1 always: a single part would exceed n-1.
    const Condition y = parts_.back();
    if (std::uint64_t{x} + y > cap_) {
      if (!lower_certified_) record_failure(x);
      return;
    }
    ++tally_->reduced;
    const std::vector<T>& w = states_[depth - 1];
    auto window = [&](std::uint64_t lo, std::uint64_t hi) {
      T s{0};
      for (std::uint64_t j = lo; j <= hi && j < w.size(); j += 2) s += w[j];
      return s;
    };
    const T k_merged = window(x + y, x + y);
    const T k_decremented = x + y >= 2 ? window(x - y, x + y - 2) : T{0};
    const T k_total = k_merged + k_decremented;

    if (k_total <= 1) return;
    if (k_merged == 1 && k_decremented == 1) return;
    if (k_merged != 0 && k_decremented != 0 && k_merged != k_decremented) return;

    // The two largest entries do not discriminate; try the remaining pairs.
    std::vector<Condition> all = parts_;
    all.push_back(x);
    const auto problem = SchubertProblem::from_trusted(std::move(all));
    try {
      find_discriminating_rearrangement(problem);
    } catch (const LemmaFailure&) {
      if (k_total > 2) tally_->failures.push_back(problem);
    }
  }

  void record_failure(Condition x) {
    std::vector<Condition> all = parts_;
    all.push_back(x);
    tally_->failures.push_back(SchubertProblem::from_trusted(std::move(all)));
  }

  std::uint32_t n_;
  std::uint64_t total_;
  Condition cap_;
  bool lower_certified_;
  std::vector<std::vector<T>> states_;
  std::vector<T> prefix_;
  std::vector<Condition> parts_;
  LevelTally* tally_ = nullptr;
};

template <class T>
SweepReport sweep_level(std::uint32_t n, unsigned workers, bool lower_certified) {
  const auto start = std::chrono::steady_clock::now();
  // Each task fixes the smallest part. Part 1 carries by far the most work,
  // so it is handed out first.
  const Condition smallest_max = static_cast<Condition>(n - 1);
  std::atomic<Condition> next{1};
  std::vector<LevelTally> tallies(std::max(1u, workers));

  auto work = [&](LevelTally& tally) {
    LevelWalker<T> walker(n, lower_certified);
    for (Condition first = next++; first <= smallest_max; first = next++) {
      walker.run_from(first, tally);
    }
  };
  if (tallies.size() == 1) {
    work(tallies[0]);
  } else {
    std::vector<std::jthread> threads;
    for (auto& tally : tallies) threads.emplace_back(work, std::ref(tally));
  }

  SweepReport report;
  report.n = n;
  for (auto& t : tallies) {
    report.problems_checked += t.problems;
    report.reduced_checked += t.reduced;
    report.failures.insert(report.failures.end(), t.failures.begin(), t.failures.end());
  }
  std::ranges::sort(report.failures, std::greater<>{});
  report.all_certified = report.failures.empty();
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

std::vector<SchubertProblem> enumerate_problems(std::uint32_t n) {
  check_level(n);
  std::vector<SchubertProblem> out;
  std::vector<Condition> parts;
  descending_partitions(2ULL * n - 2, n - 1, parts, [&](const std::vector<Condition>& p) {
    out.push_back(SchubertProblem::from_trusted(p));
  });
  return out;
}

std::uint64_t count_problems(std::uint32_t n) {
  check_level(n);
  // Partitions of s into parts <= k, by the usual knapsack recurrence.
  const std::uint64_t s = 2ULL * n - 2;
  std::vector<std::uint64_t> ways(s + 1, 0);
  ways[0] = 1;
  for (std::uint64_t part = 1; part <= n - 1; ++part) {
    for (std::uint64_t t = part; t <= s; ++t) ways[t] += ways[t - part];
  }
  return ways[s];
}

std::vector<SweepReport> sweep(std::uint32_t n_max, unsigned workers) {
  check_level(n_max);
  std::vector<SweepReport> reports;
  bool lower_certified = true;
  for (std::uint32_t n = 2; n <= n_max; ++n) {
    // Tensor product dimensions stay below 2^(2n-2), so 128-bit counts
    // cannot overflow up to n = 64.
    SweepReport r = 2ULL * n - 2 <= 126 ? sweep_level<u128>(n, workers, lower_certified)
                                        : sweep_level<BigInt>(n, workers, lower_certified);
    lower_certified = lower_certified && r.all_certified;
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace schublines
