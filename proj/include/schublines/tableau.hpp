#pragma once

#include "schublines/problem.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace schublines {

/// Two-rowed tableau with rows of equal length. Entries are labels 1..m.
struct TwoRowTableau {
  std::vector<Condition> row1;
  std::vector<Condition> row2;

  /// "[1,1,2,2,3]/[4,4,5,5,5]"
  std::string to_string() const;

  friend bool operator==(const TwoRowTableau&, const TwoRowTableau&) = default;
  friend auto operator<=>(const TwoRowTableau&, const TwoRowTableau&) = default;
};

/// Rows of equal length, weakly increasing rows, strictly increasing
/// columns, and label i (1-based) occurring exactly content[i-1] times.
bool is_semistandard_for(const TwoRowTableau& t, std::span<const Condition> content);

inline constexpr std::size_t kDefaultTableauCap = 10'000'000;

/// All rectangular two-rowed tableaux with the given content (zero entries
/// allowed; their labels simply do not occur), in increasing lexicographic
/// order of the first row. Empty when no tableau exists. Throws ResourceLimit
/// once more than `cap` tableaux would be produced.
std::vector<TwoRowTableau> enumerate_tableaux_for_content(std::span<const Condition> content,
                                                          std::size_t cap = kDefaultTableauCap);

/// The set K(a) of tableaux for a problem, labelled in the sequence's order.
std::vector<TwoRowTableau> enumerate_tableaux(const ConditionSequence& s,
                                              std::size_t cap = kDefaultTableauCap);
/// Same, labelled in the canonical weakly decreasing order.
std::vector<TwoRowTableau> enumerate_tableaux(const SchubertProblem& p,
                                              std::size_t cap = kDefaultTableauCap);

}  // namespace schublines
