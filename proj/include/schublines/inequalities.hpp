#pragma once

#include "schublines/bigint.hpp"

#include <cstdint>

namespace schublines {

/// K(2^m, 4) - K(2^m, 1, 1). Negative for m < 14, positive from m = 14 on.
BigInt a2_difference(std::uint32_t m);

/// Both counts of the all-equal case a^(m+2) split two ways.
struct A2Row {
  std::uint32_t m = 0;
  BigInt merged;       ///< K(2^m, 4)
  BigInt decremented;  ///< K(2^m, 1, 1)
  BigInt difference;
};
A2Row a2_row(std::uint32_t m);

struct EqualCaseCheck {
  std::uint32_t a = 0;
  std::uint32_t m = 0;
  /// a*m is even, so both sides are Schubert problems. When it is odd the
  /// counts are 0 and `holds` is false.
  bool applicable = false;
  BigInt merged;       ///< K(a^m, 2a)
  BigInt decremented;  ///< K(a^m, a-1, a-1)
  bool holds = false;  ///< merged < decremented
};

/// Evaluates K(a^m, 2a) < K(a^m, (a-1)^2) exactly.
/// Throws PreconditionViolation unless a >= 3 and m >= 2.
EqualCaseCheck equal_case_check(std::uint32_t a, std::uint32_t m);

}  // namespace schublines
