#include "oracles.hpp"

#include "schublines/certificate.hpp"
#include "schublines/errors.hpp"
#include "schublines/sweep.hpp"
#include "schublines/verifier.hpp"

#include <doctest.h>

#include <algorithm>

using namespace schublines;

TEST_CASE("enumerate_problems") {
  const auto p3 = enumerate_problems(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == SchubertProblem{2, 2});
  CHECK(p3[1] == SchubertProblem{2, 1, 1});
  CHECK(p3[2] == SchubertProblem{1, 1, 1, 1});
  CHECK(enumerate_problems(4).size() == 7);
  CHECK_THROWS_AS(enumerate_problems(1), PreconditionViolation);
}

TEST_CASE("counts agree with the partition oracle") {
  for (std::uint32_t n = 2; n <= 14; ++n) {
    std::uint64_t count = 0;
    oracle::partitions(2 * n - 2, n - 1, [&](const std::vector<Condition>&) { ++count; });
    CHECK(count_problems(n) == count);
    const auto ps = enumerate_problems(n);
    CHECK(ps.size() == count);
    CHECK(std::is_sorted(ps.begin(), ps.end(), std::greater<>{}));
    for (const auto& p : ps) CHECK(is_valid(p));
  }
}

TEST_CASE("sweep agrees with full certificates (n <= 10)") {
  const auto reports = sweep(10, 2);
  REQUIRE(reports.size() == 9);
  Verifier v;
  for (const auto& r : reports) {
    CHECK(r.all_certified);
    CHECK(r.failures.empty());
    CHECK(r.problems_checked == count_problems(r.n));
    std::uint64_t reduced = 0;
    for (const auto& p : enumerate_problems(r.n)) {
      if (is_reduced(p)) ++reduced;
      CHECK(validate_certificate(*v.verify(p)).ok);
    }
    CHECK(r.reduced_checked == reduced);
  }
}

TEST_CASE("worker count does not change the result") {
  const auto one = sweep(18, 1);
  const auto three = sweep(18, 3);
  REQUIRE(one.size() == three.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].problems_checked == three[i].problems_checked);
    CHECK(one[i].reduced_checked == three[i].reduced_checked);
    CHECK(one[i].all_certified == three[i].all_certified);
  }
}

TEST_CASE("every reduced problem with sum <= 16 has a discriminating rearrangement") {
  for (const auto& parts : oracle::valid_problems_up_to(16)) {
    const auto p = SchubertProblem::from_trusted(parts);
    if (!is_reduced(p)) continue;
    CHECK_NOTHROW(find_discriminating_rearrangement(p));
  }
}
