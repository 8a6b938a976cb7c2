#include "oracles.hpp"

#include "schublines/errors.hpp"
#include "schublines/kostka.hpp"
#include "schublines/tableau.hpp"

#include <doctest.h>

#include <algorithm>

using namespace schublines;

TEST_CASE("the five tableaux of (2,2,1,2,3)") {
  const auto ts = enumerate_tableaux(ConditionSequence{2, 2, 1, 2, 3});
  std::vector<std::string> got;
  for (const auto& t : ts) got.push_back(t.to_string());
  const std::vector<std::string> want{
      "[1,1,2,2,3]/[4,4,5,5,5]", "[1,1,2,2,4]/[3,4,5,5,5]", "[1,1,2,3,4]/[2,4,5,5,5]",
      "[1,1,2,4,4]/[2,3,5,5,5]", "[1,1,3,4,4]/[2,2,5,5,5]",
  };
  CHECK(got == want);
}

TEST_CASE("is_semistandard_for") {
  const std::vector<Condition> content{1, 1, 1, 1};
  CHECK(is_semistandard_for({{1, 2}, {3, 4}}, content));
  CHECK(is_semistandard_for({{1, 3}, {2, 4}}, content));
  CHECK_FALSE(is_semistandard_for({{1, 4}, {2, 3}}, content));
  CHECK_FALSE(is_semistandard_for({{1, 2, 3}, {4}}, content));
  CHECK_FALSE(is_semistandard_for({{1, 2}, {3, 3}}, content));
  CHECK_FALSE(is_semistandard_for({{2, 1}, {3, 4}}, content));
}

TEST_CASE("enumeration is sorted, distinct, semistandard and matches the count (sum <= 14)") {
  for (const auto& parts : oracle::valid_problems_up_to(14)) {
    const auto ts = enumerate_tableaux_for_content(parts);
    INFO(SchubertProblem::from_trusted(parts).to_string());
    CHECK(ts.size() == oracle::count_tableaux_naive(parts));
    CHECK(std::is_sorted(ts.begin(), ts.end()));
    CHECK(std::adjacent_find(ts.begin(), ts.end()) == ts.end());
    for (const auto& t : ts) CHECK(is_semistandard_for(t, parts));
  }
}

TEST_CASE("listing order changes labels but not the count") {
  const auto a = enumerate_tableaux(ConditionSequence{1, 3, 2, 2});
  const auto b = enumerate_tableaux(SchubertProblem{1, 3, 2, 2});
  CHECK(a.size() == b.size());
  CHECK(BigInt(a.size()) == kostka(SchubertProblem{1, 3, 2, 2}));
}

TEST_CASE("empty and invalid contents") {
  CHECK(enumerate_tableaux(SchubertProblem{4, 1, 1}).empty());
  const std::vector<Condition> odd{1, 2};
  CHECK(enumerate_tableaux_for_content(odd).empty());
  const auto e = enumerate_tableaux(SchubertProblem{});
  REQUIRE(e.size() == 1);
  CHECK(e[0].row1.empty());
}

TEST_CASE("cap") {
  const std::vector<Condition> ones(16, 1);  // C_8 = 1430
  CHECK(enumerate_tableaux_for_content(ones, 1430).size() == 1430);
  CHECK_THROWS_AS(enumerate_tableaux_for_content(ones, 1429), ResourceLimit);
}
