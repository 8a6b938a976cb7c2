#include "schublines/verifier.hpp"

#include "schublines/errors.hpp"
#include "schublines/kostka.hpp"

#include <mutex>

namespace schublines {

Verifier::Verifier(bool memoize, std::shared_ptr<KostkaCache> cache)
    : memoize_(memoize), cache_(cache ? std::move(cache) : std::make_shared<KostkaCache>()) {}

Certificate Verifier::verify(const SchubertProblem& p) {
  if (!is_valid(p)) {
    throw InvalidProblem(ProblemRule::NotValid,
                         "problem " + p.to_string() + " is not valid: largest condition " +
                             std::to_string(p.largest()) + " exceeds n-1 = " +
                             std::to_string(n_of(p) - 1));
  }
  return build(p);
}

std::size_t Verifier::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

Certificate Verifier::lookup(const SchubertProblem& p) const {
  std::shared_lock lock(mutex_);
  auto it = memo_.find(p);
  return it == memo_.end() ? nullptr : it->second;
}

// Recursion measure: each branch of a reduced problem has either the same sum
// and one fewer condition (merged) or sum smaller by two (decremented), and
// reduction never increases (sum, size).
Certificate Verifier::build(const SchubertProblem& p) {
  if (memoize_) {
    if (auto hit = lookup(p)) return hit;
  }

  auto node = std::make_shared<CertificateNode>();
  node->problem = p;
  node->reduced = reduce(p);
  node->kostka_value = cache_->get(node->reduced);

  if (node->kostka_value <= 1) {
    node->clause = Clause::BaseSmallK;
  } else {
    try {
      auto found = find_discriminating_rearrangement(node->reduced, cache_.get());
      node->clause = found.clause;
      const auto split = recursion_split(found.rearrangement);
      node->rearrangement = std::move(found.rearrangement);
      node->merged = build(split.merged);
      node->decremented = build(split.decremented);
    } catch (const LemmaFailure&) {
      if (node->kostka_value > 2) throw;
      node->clause = Clause::BaseSmallK;
    }
  }

  Certificate result = std::move(node);
  if (memoize_) {
    std::unique_lock lock(mutex_);
    memo_.insert_or_assign(p, result);
  }
  return result;
}

Certificate verify_at_least_alternating(const SchubertProblem& p) {
  Verifier verifier;
  return verifier.verify(p);
}

}  // namespace schublines
