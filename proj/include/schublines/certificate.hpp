#pragma once

#include "schublines/bigint.hpp"
#include "schublines/problem.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace schublines {

/// Which clause of Vakil's criterion certifies a node.
enum class Clause {
  /// At most two solutions. The Galois group is transitive because the
  /// incidence variety is irreducible, and a transitive subgroup of S_K with
  /// K <= 2 contains A_K.
  BaseSmallK,
  /// Both branches of Schubert's recursion have exactly one solution.
  BothBranchesOne,
  /// The branches have distinct nonzero solution counts.
  UnequalBranches,
};

std::string_view clause_name(Clause c) noexcept;
/// Inverse of clause_name. Throws CertificateFormatError on unknown names.
Clause clause_from_name(std::string_view name);

inline constexpr std::string_view kBaseSmallKJustification =
    "transitive group on at most two solutions contains the alternating group";

struct CertificateNode;
using Certificate = std::shared_ptr<const CertificateNode>;

/// One node of a proof that the Galois group of `problem` is at least
/// alternating. Subtrees may be shared between parents.
struct CertificateNode {
  SchubertProblem problem;
  SchubertProblem reduced;
  BigInt kostka_value;
  Clause clause = Clause::BaseSmallK;
  /// Present iff clause != BaseSmallK. The last two entries are the pair
  /// degenerated by Schubert's recursion.
  std::optional<ConditionSequence> rearrangement;
  Certificate merged;
  Certificate decremented;
};

struct ValidationResult {
  bool ok = true;
  std::string reason;  ///< First failure found, with the offending problem.
  explicit operator bool() const noexcept { return ok; }
};

/// Re-checks a certificate bottom-up without trusting any stored value:
/// every reduction and split is redone, every Kostka number recomputed, and
/// every clause re-evaluated.
ValidationResult validate_certificate(const CertificateNode& root);

/// Same tree shape and the same data at every node.
bool structurally_equal(const CertificateNode& a, const CertificateNode& b);

/// Number of nodes when shared subtrees are expanded.
std::uint64_t expanded_size(const CertificateNode& root);

}  // namespace schublines
