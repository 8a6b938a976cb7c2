#pragma once

#include "schublines/problem.hpp"

#include <cstdint>
#include <vector>

namespace schublines {

/// All valid Schubert problems of lines in P^n: multisets of positive
/// integers with sum 2n-2 and every part at most n-1, in decreasing
/// lexicographic order of the weakly decreasing part lists.
/// Throws PreconditionViolation when n < 2.
std::vector<SchubertProblem> enumerate_problems(std::uint32_t n);

/// Number of problems enumerate_problems(n) would return.
std::uint64_t count_problems(std::uint32_t n);

struct SweepReport {
  std::uint32_t n = 0;
  std::uint64_t problems_checked = 0;
  /// How many of the checked problems were already reduced and had their
  /// split pair checked directly.
  std::uint64_t reduced_checked = 0;
  bool all_certified = true;
  std::vector<SchubertProblem> failures;
  double elapsed_seconds = 0.0;
};

/// Certifies every problem in P^n for n = 2..n_max.
///
/// A reduced problem is certified when some pair of its conditions splits it
/// into branches with unequal nonzero counts or with both counts equal to 1
/// (or when it has one solution). Both branches are valid problems that are
/// smaller in (sum, number of conditions), so they lie in the same or a lower
/// level of the sweep. A problem that is not reduced has the count and the
/// Galois group of its reduction, which lies in a strictly lower level.
/// Hence one pass over all levels establishes the claim for all of them, and
/// no certificate trees need to be kept.
///
/// Counts for the split pair come from a Clebsch-Gordan table shared by all
/// problems with the same smaller conditions. The first pair tried is the two
/// largest conditions, matching the order of find_discriminating_rearrangement;
/// other pairs fall back to it. Work on one level is spread over `workers`
/// threads; reports do not depend on the worker count except for timings.
/// Throws PreconditionViolation when n_max < 2.
std::vector<SweepReport> sweep(std::uint32_t n_max, unsigned workers = 1);

}  // namespace schublines
