#pragma once

#include "schublines/bigint.hpp"
#include "schublines/certificate.hpp"
#include "schublines/kostka_cache.hpp"
#include "schublines/problem.hpp"

#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace schublines {

struct DiscriminatingRearrangement {
  Condition x = 0;  ///< larger entry of the split pair
  Condition y = 0;  ///< smaller entry of the split pair
  BigInt merged_kostka;
  BigInt decremented_kostka;
  Clause clause = Clause::UnequalBranches;
  /// The remaining conditions in canonical order, followed by x, y.
  ConditionSequence rearrangement;
};

/// Distinct unordered pairs {x >= y} of entries of p, largest sum first and,
/// among equal sums, larger x first.
std::vector<std::pair<Condition, Condition>> candidate_pairs(const SchubertProblem& p);

/// Scans candidate_pairs(p) and returns the first pair whose two branches
/// either have unequal nonzero counts or both have exactly one solution.
/// Throws PreconditionViolation unless p is reduced with at least two
/// entries, and LemmaFailure if no pair qualifies.
DiscriminatingRearrangement find_discriminating_rearrangement(const SchubertProblem& p,
                                                              KostkaCache* cache = nullptr);

/// Builds certificates by recursion over Schubert's special-position
/// degenerations. Certificates are memoized on the canonical problem, so
/// shared subproblems are certified once. Safe to call from several threads.
class Verifier {
 public:
  explicit Verifier(bool memoize = true, std::shared_ptr<KostkaCache> cache = nullptr);

  /// Throws InvalidProblem if p is not valid, LemmaFailure if some reduced
  /// subproblem has no discriminating rearrangement.
  Certificate verify(const SchubertProblem& p);

  std::size_t memo_size() const;
  KostkaCache& kostka_cache() noexcept { return *cache_; }

 private:
  Certificate build(const SchubertProblem& p);
  Certificate lookup(const SchubertProblem& p) const;

  bool memoize_;
  std::shared_ptr<KostkaCache> cache_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<SchubertProblem, Certificate, SchubertProblemHash> memo_;
};

/// One-shot verification with a fresh memo.
Certificate verify_at_least_alternating(const SchubertProblem& p);

}  // namespace schublines
