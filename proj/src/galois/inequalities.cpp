#include "schublines/inequalities.hpp"

#include "schublines/errors.hpp"
#include "schublines/kostka.hpp"

#include <vector>

namespace schublines {

A2Row a2_row(std::uint32_t m) {
  std::vector<Condition> content(m, 2);
  content.push_back(4);
  A2Row row;
  row.m = m;
  row.merged = kostka_of_content(content);
  content.back() = 1;
  content.push_back(1);
  row.decremented = kostka_of_content(content);
  row.difference = row.merged - row.decremented;
  return row;
}

BigInt a2_difference(std::uint32_t m) { return a2_row(m).difference; }

EqualCaseCheck equal_case_check(std::uint32_t a, std::uint32_t m) {
  if (a < 3 || m < 2) {
    throw PreconditionViolation("equal_case_check needs a >= 3 and m >= 2, got a=" +
                                std::to_string(a) + " m=" + std::to_string(m));
  }
  EqualCaseCheck r;
  r.a = a;
  r.m = m;
  r.applicable = (std::uint64_t{a} * m) % 2 == 0;
  if (!r.applicable) return r;

  std::vector<Condition> content(m, a);
  content.push_back(2 * a);
  r.merged = kostka_of_content(content);
  content.back() = a - 1;
  content.push_back(a - 1);
  r.decremented = kostka_of_content(content);
  r.holds = r.merged < r.decremented;
  return r;
}

}  // namespace schublines
