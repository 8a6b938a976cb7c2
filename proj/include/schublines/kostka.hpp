#pragma once

#include "schublines/bigint.hpp"
#include "schublines/problem.hpp"

#include <cstdint>
#include <map>
#include <span>

namespace schublines {

/// Element of the representation ring of sl2 with nonnegative coefficients,
/// written in the basis e_j = [V_j] of irreducible modules. Zero coefficients
/// are never stored.
class RepRingVector {
 public:
  RepRingVector() = default;

  static RepRingVector basis(std::uint32_t j);

  void add(std::uint32_t j, const BigInt& multiplicity);
  BigInt coefficient(std::uint32_t j) const;

  const std::map<std::uint32_t, BigInt>& terms() const noexcept { return coeffs_; }
  bool empty() const noexcept { return coeffs_.empty(); }

  friend bool operator==(const RepRingVector&, const RepRingVector&) = default;

 private:
  std::map<std::uint32_t, BigInt> coeffs_;
};

/// Multiplication by e_a (Clebsch-Gordan):
///   e_b -> e_{b+a} + e_{b+a-2} + ... + e_{|b-a|},
/// extended linearly.
RepRingVector cg_apply(const RepRingVector& v, std::uint32_t a);

/// Number of two-rowed semistandard tableaux of rectangular shape with the
/// given content, computed as the multiplicity of V_0 in the tensor product
/// of the V_{a_i}. Zero entries are allowed and contribute nothing; an odd
/// total gives 0.
BigInt kostka_of_content(std::span<const Condition> content);

/// K(a): the number of solutions of the Schubert problem. Positive exactly
/// when p is valid. The empty problem has K = 1.
BigInt kostka(const SchubertProblem& p);
BigInt kostka(const ConditionSequence& s);

/// Closed form for K(1^num_ones, b) from the hook-length formula:
///   num_ones! (b+1) / ((c-b)! (c+1)!),  c = (num_ones + b) / 2.
/// Returns 0 when b > c (the problem is not valid). Throws ParityError when
/// num_ones + b is odd.
BigInt hook_kostka(std::uint32_t num_ones, std::uint32_t b);

struct RecursionSplit {
  SchubertProblem merged;       ///< (a_1..a_{m-2}, x+y)
  SchubertProblem decremented;  ///< (a_1..a_{m-2}, x-1, y-1), zeros dropped
};

/// Schubert's special-position recursion on the last two entries x, y of s:
/// K(s) = K(merged) + K(decremented).
/// Throws InvalidProblem if s is not valid, PreconditionViolation if s has
/// fewer than two entries.
RecursionSplit recursion_split(const ConditionSequence& s);

}  // namespace schublines
