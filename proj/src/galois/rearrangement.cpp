#include "schublines/errors.hpp"
#include "schublines/kostka.hpp"
#include "schublines/verifier.hpp"

#include <algorithm>
#include <map>

namespace schublines {

std::vector<std::pair<Condition, Condition>> candidate_pairs(const SchubertProblem& p) {
  std::map<Condition, std::size_t> multiplicity;
  for (Condition c : p.conditions()) ++multiplicity[c];

  std::vector<std::pair<Condition, Condition>> pairs;
  for (auto x = multiplicity.rbegin(); x != multiplicity.rend(); ++x) {
    for (auto y = x; y != multiplicity.rend(); ++y) {
      if (x == y && x->second < 2) continue;
      pairs.emplace_back(x->first, y->first);
    }
  }
  std::ranges::stable_sort(pairs, [](const auto& l, const auto& r) {
    const auto ls = std::uint64_t{l.first} + l.second;
    const auto rs = std::uint64_t{r.first} + r.second;
    if (ls != rs) return ls > rs;
    return l.first > r.first;
  });
  return pairs;
}

DiscriminatingRearrangement find_discriminating_rearrangement(const SchubertProblem& p,
                                                              KostkaCache* cache) {
  if (!is_reduced(p) || p.size() < 2) {
    throw PreconditionViolation("find_discriminating_rearrangement: " + p.to_string() +
                                " is not a reduced problem with at least two conditions");
  }
  auto count = [&](const SchubertProblem& q) { return cache ? cache->get(q) : kostka(q); };

  for (const auto& [x, y] : candidate_pairs(p)) {
    std::vector<Condition> order(p.conditions().begin(), p.conditions().end());
    order.erase(std::ranges::find(order, x));
    order.erase(std::ranges::find(order, y));
    order.push_back(x);
    order.push_back(y);
    auto seq = ConditionSequence::from_trusted(std::move(order));
    auto split = recursion_split(seq);

    BigInt k1 = count(split.merged);
    BigInt k2 = count(split.decremented);
    if (k1 == 1 && k2 == 1) {
      return {x, y, std::move(k1), std::move(k2), Clause::BothBranchesOne, std::move(seq)};
    }
    if (k1 != 0 && k2 != 0 && k1 != k2) {
      return {x, y, std::move(k1), std::move(k2), Clause::UnequalBranches, std::move(seq)};
    }
  }
  throw LemmaFailure("no rearrangement of " + p.to_string() +
                     " has unequal branch counts or both branches equal to 1");
}

}  // namespace schublines
