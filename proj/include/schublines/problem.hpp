#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace schublines {

using Condition = std::uint32_t;

/// A Schubert problem of lines: a multiset of positive condition
/// codimensions with even sum.
///
/// Conditions are kept in weakly decreasing order, so two problems compare
/// equal exactly when they are rearrangements of each other. Use
/// ConditionSequence when the order matters (tableau labels, the split pair
/// of Schubert's recursion).
///
/// The empty problem is permitted. It arises when reduction decrements every
/// condition to zero and has exactly one solution.
class SchubertProblem {
 public:
  SchubertProblem() = default;

  /// Throws InvalidProblem naming the rule (non-positive entry, odd sum).
  explicit SchubertProblem(std::span<const long long> conditions);
  SchubertProblem(std::initializer_list<long long> conditions);

  /// Takes conditions that are already known to be positive with even sum.
  /// Only sorts. Used internally by reductions and branch construction.
  static SchubertProblem from_trusted(std::vector<Condition> conditions);

  std::span<const Condition> conditions() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  Condition operator[](std::size_t i) const { return parts_[i]; }

  std::uint64_t sum() const noexcept;
  Condition largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  std::string to_string() const;

  friend bool operator==(const SchubertProblem&, const SchubertProblem&) = default;
  friend auto operator<=>(const SchubertProblem&, const SchubertProblem&) = default;

 private:
  std::vector<Condition> parts_;
};

std::ostream& operator<<(std::ostream& os, const SchubertProblem& p);

/// An ordered listing of the conditions of a Schubert problem. Labels in
/// tableaux follow this order, and Schubert's recursion splits on the last
/// two entries.
class ConditionSequence {
 public:
  ConditionSequence() = default;
  explicit ConditionSequence(std::span<const long long> conditions);
  ConditionSequence(std::initializer_list<long long> conditions);
  /// The canonical (weakly decreasing) order of p.
  explicit ConditionSequence(const SchubertProblem& p);

  static ConditionSequence from_trusted(std::vector<Condition> conditions);

  std::span<const Condition> conditions() const noexcept { return seq_; }
  std::size_t size() const noexcept { return seq_.size(); }
  Condition operator[](std::size_t i) const { return seq_[i]; }

  SchubertProblem problem() const { return SchubertProblem::from_trusted(seq_); }
  std::string to_string() const;

  friend bool operator==(const ConditionSequence&, const ConditionSequence&) = default;

 private:
  std::vector<Condition> seq_;
};

/// n(a) = (sum + 2) / 2: the ambient dimension of the problem.
std::uint64_t n_of(const SchubertProblem& p) noexcept;

/// Every condition is at most n(a) - 1.
bool is_valid(const SchubertProblem& p) noexcept;

/// Valid, and every pair of conditions sums to at most n(a) - 1.
bool is_reduced(const SchubertProblem& p) noexcept;

/// Repeatedly decrements the two largest conditions while their sum exceeds
/// n(a) - 1, dropping zeros. The result has the same Kostka number.
/// Throws InvalidProblem when p is not valid.
SchubertProblem reduce(const SchubertProblem& p);

struct SchubertProblemHash {
  std::size_t operator()(const SchubertProblem& p) const noexcept;
};

}  // namespace schublines
