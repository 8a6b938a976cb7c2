#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace schublines::detail {

// Dense realization of multiplication by e_a. `in[j]` is the coefficient of
// e_j. The result is truncated to weights 0..bound; weights above the sum of
// the conditions still to be applied can never return to e_0.
//
//   out[j] = sum of in[b] over b = |j-a|, |j-a|+2, ..., j+a
//
// evaluated with per-parity prefix sums, so one step costs O(bound + a).
template <class T>
void cg_step(const std::vector<T>& in, std::uint32_t a, std::uint64_t bound, std::vector<T>& out,
             std::vector<T>& prefix) {
  const std::int64_t width = static_cast<std::int64_t>(in.size());
  prefix.assign(in.size(), T{0});
  for (std::int64_t b = 0; b < width; ++b) {
    prefix[b] = in[b];
    if (b >= 2) prefix[b] += prefix[b - 2];
  }
  const std::int64_t top =
      std::min<std::int64_t>(static_cast<std::int64_t>(bound), width - 1 + std::int64_t{a});
  out.assign(top >= 0 ? static_cast<std::size_t>(top + 1) : 0, T{0});
  for (std::int64_t j = 0; j <= top; ++j) {
    std::int64_t lo = j >= a ? j - a : std::int64_t{a} - j;
    std::int64_t hi = j + a;
    if (lo >= width) continue;
    if (hi >= width) {
      // Largest index < width with the same parity as lo.
      hi = width - 1;
      if ((hi - lo) % 2 != 0) --hi;
    }
    T s = prefix[hi];
    if (lo >= 2) s -= prefix[lo - 2];
    out[j] = s;
  }
}

}  // namespace schublines::detail
