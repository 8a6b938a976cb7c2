#include "schublines/kostka.hpp"

#include "schublines/detail/cg_dp.hpp"
#include "schublines/errors.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace schublines {

BigInt parse_decimal(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::ranges::all_of(digits, [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  return BigInt(std::string(text));
}

namespace {

template <class T>
T kostka_dense(std::span<const Condition> content) {
  std::uint64_t remaining = 0;
  for (Condition a : content) remaining += a;
  if (remaining % 2 != 0) return T{0};

  std::vector<T> cur{T{1}}, next, prefix;
  for (Condition a : content) {
    remaining -= a;
    detail::cg_step(cur, a, remaining, next, prefix);
    cur.swap(next);
    if (cur.empty()) return T{0};
  }
  return cur.empty() ? T{0} : cur[0];
}

BigInt factorial(std::uint32_t n) {
  BigInt f = 1;
  for (std::uint32_t k = 2; k <= n; ++k) f *= k;
  return f;
}

// Every coefficient (and every prefix sum) in the DP is bounded by the
// dimension of the full tensor product, prod(a_i + 1).
bool fits_u128(std::span<const Condition> content) {
  unsigned bits = 0;
  for (Condition a : content) {
    bits += std::bit_width(static_cast<std::uint64_t>(a) + 1);
    if (bits > 127) return false;
  }
  return true;
}

}  // namespace

RepRingVector RepRingVector::basis(std::uint32_t j) {
  RepRingVector v;
  v.coeffs_.emplace(j, BigInt{1});
  return v;
}

void RepRingVector::add(std::uint32_t j, const BigInt& multiplicity) {
  if (multiplicity == 0) return;
  if (multiplicity < 0) throw std::invalid_argument("RepRingVector coefficients are nonnegative");
  coeffs_[j] += multiplicity;
}

BigInt RepRingVector::coefficient(std::uint32_t j) const {
  auto it = coeffs_.find(j);
  return it == coeffs_.end() ? BigInt{0} : it->second;
}

RepRingVector cg_apply(const RepRingVector& v, std::uint32_t a) {
  RepRingVector out;
  for (const auto& [b, mult] : v.terms()) {
    const std::uint32_t lo = b >= a ? b - a : a - b;
    for (std::uint32_t j = lo; j <= b + a; j += 2) out.add(j, mult);
  }
  return out;
}

BigInt kostka_of_content(std::span<const Condition> content) {
  if (fits_u128(content)) return to_bigint(kostka_dense<u128>(content));
  return kostka_dense<BigInt>(content);
}

BigInt kostka(const SchubertProblem& p) { return kostka_of_content(p.conditions()); }

BigInt kostka(const ConditionSequence& s) { return kostka_of_content(s.conditions()); }

BigInt hook_kostka(std::uint32_t num_ones, std::uint32_t b) {
  if ((num_ones + b) % 2 != 0) {
    throw ParityError("hook_kostka: num_ones + b = " + std::to_string(num_ones + b) + " is odd");
  }
  const std::uint32_t c = (num_ones + b) / 2;
  if (b > c) return 0;
  BigInt num = factorial(num_ones);
  num *= (b + 1);
  BigInt den = factorial(c - b);
  den *= factorial(c + 1);
  return num / den;
}

RecursionSplit recursion_split(const ConditionSequence& s) {
  if (s.size() < 2) {
    throw PreconditionViolation("recursion_split needs at least two conditions, got " +
                                s.to_string());
  }
  const SchubertProblem whole = s.problem();
  if (!is_valid(whole)) {
    throw InvalidProblem(ProblemRule::NotValid, "recursion_split: " + s.to_string() +
                                                    " is not a valid problem");
  }
  auto c = s.conditions();
  const Condition x = c[c.size() - 2];
  const Condition y = c[c.size() - 1];
  std::vector<Condition> rest(c.begin(), c.end() - 2);

  std::vector<Condition> merged = rest;
  merged.push_back(x + y);
  std::vector<Condition> decremented = std::move(rest);
  if (x > 1) decremented.push_back(x - 1);
  if (y > 1) decremented.push_back(y - 1);
  return {SchubertProblem::from_trusted(std::move(merged)),
          SchubertProblem::from_trusted(std::move(decremented))};
}

}  // namespace schublines
