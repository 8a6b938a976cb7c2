#include "schublines/problem.hpp"

#include "schublines/errors.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace schublines {

namespace {

std::vector<Condition> checked_conditions(std::span<const long long> conditions) {
  std::vector<Condition> out;
  out.reserve(conditions.size());
  long long total = 0;
  for (long long c : conditions) {
    if (c <= 0) {
      throw InvalidProblem(ProblemRule::NonPositiveEntry,
                           "non-positive entry " + std::to_string(c) +
                               ": every condition must be a positive integer");
    }
    if (c > 0xFFFFFFFFLL) {
      throw InvalidProblem(ProblemRule::NonPositiveEntry,
                           "condition " + std::to_string(c) + " is out of range");
    }
    total += c;
    out.push_back(static_cast<Condition>(c));
  }
  if (total % 2 != 0) {
    throw InvalidProblem(ProblemRule::OddSum,
                         "odd sum " + std::to_string(total) + ": conditions must have even sum");
  }
  return out;
}

std::string join(std::span<const Condition> xs) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

SchubertProblem::SchubertProblem(std::span<const long long> conditions)
    : parts_(checked_conditions(conditions)) {
  std::ranges::sort(parts_, std::greater<>{});
}

SchubertProblem::SchubertProblem(std::initializer_list<long long> conditions)
    : SchubertProblem(std::span<const long long>(conditions.begin(), conditions.size())) {}

SchubertProblem SchubertProblem::from_trusted(std::vector<Condition> conditions) {
  SchubertProblem p;
  p.parts_ = std::move(conditions);
  std::ranges::sort(p.parts_, std::greater<>{});
  return p;
}

std::uint64_t SchubertProblem::sum() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

std::string SchubertProblem::to_string() const { return join(parts_); }

std::ostream& operator<<(std::ostream& os, const SchubertProblem& p) { return os << p.to_string(); }

ConditionSequence::ConditionSequence(std::span<const long long> conditions)
    : seq_(checked_conditions(conditions)) {}

ConditionSequence::ConditionSequence(std::initializer_list<long long> conditions)
    : ConditionSequence(std::span<const long long>(conditions.begin(), conditions.size())) {}

ConditionSequence::ConditionSequence(const SchubertProblem& p)
    : seq_(p.conditions().begin(), p.conditions().end()) {}

ConditionSequence ConditionSequence::from_trusted(std::vector<Condition> conditions) {
  ConditionSequence s;
  s.seq_ = std::move(conditions);
  return s;
}

std::string ConditionSequence::to_string() const { return join(seq_); }

std::uint64_t n_of(const SchubertProblem& p) noexcept { return (p.sum() + 2) / 2; }

bool is_valid(const SchubertProblem& p) noexcept {
  return p.empty() || p.largest() <= n_of(p) - 1;
}

bool is_reduced(const SchubertProblem& p) noexcept {
  if (!is_valid(p)) return false;
  if (p.size() < 2) return true;
  return std::uint64_t{p[0]} + p[1] <= n_of(p) - 1;
}

SchubertProblem reduce(const SchubertProblem& p) {
  if (!is_valid(p)) {
    throw InvalidProblem(ProblemRule::NotValid,
                         "problem " + p.to_string() + " is not valid: largest condition " +
                             std::to_string(p.largest()) + " exceeds n-1 = " +
                             std::to_string(n_of(p) - 1));
  }
  std::vector<Condition> parts(p.conditions().begin(), p.conditions().end());
  std::uint64_t total = p.sum();
  // parts stays weakly decreasing: after decrementing the first two entries,
  // only they can be out of place.
  while (parts.size() >= 2 && std::uint64_t{parts[0]} + parts[1] > total / 2) {
    --parts[0];
    --parts[1];
    total -= 2;
    std::ranges::sort(parts, std::greater<>{});
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
  }
  return SchubertProblem::from_trusted(std::move(parts));
}

std::size_t SchubertProblemHash::operator()(const SchubertProblem& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Condition c : p.conditions()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h ^ p.size();
}

}  // namespace schublines
