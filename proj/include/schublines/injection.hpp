#pragma once

#include "schublines/problem.hpp"
#include "schublines/tableau.hpp"

#include <vector>

namespace schublines {

/// Data (b_1..b_m, alpha, beta, gamma) of the tableau injection
///
///   iota : K(b, alpha, beta+gamma) -> K(b, gamma, beta+alpha),
///
/// which exists when (b, alpha, beta, gamma) is reduced with
/// alpha <= beta <= gamma and alpha < gamma, and is never surjective.
struct InjectionInstance {
  std::vector<Condition> b;
  Condition alpha = 0;
  Condition beta = 0;
  Condition gamma = 0;

  /// (b, alpha, beta+gamma)
  std::vector<Condition> source_content() const;
  /// (b, gamma, beta+alpha)
  std::vector<Condition> target_content() const;
  /// (b, gamma-alpha-1, beta-1); zero entries keep their label slot.
  std::vector<Condition> witness_base_content() const;

  /// Throws PreconditionViolation unless the hypotheses above hold.
  void check() const;
};

/// Keeps the first row and the entries <= m of the second row, and replaces
/// the rest of the second row by gamma-a copies of m+1 followed by
/// beta+alpha copies of m+2, where a is the number of m+1's in the first row.
/// Throws PreconditionViolation if the instance is unusable or t is not a
/// tableau for the source content.
TwoRowTableau iota_injection(const TwoRowTableau& t, const InjectionInstance& inst);

/// Appends alpha+1 columns [m+1 over m+2] to a tableau for the witness base
/// content. The result is a target tableau with more than alpha copies of m+1
/// in its first row, so it lies outside the image of iota.
TwoRowTableau iota_witness(const TwoRowTableau& base, const InjectionInstance& inst);

}  // namespace schublines
