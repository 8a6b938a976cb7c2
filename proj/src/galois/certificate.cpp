#include "schublines/certificate.hpp"

#include "schublines/errors.hpp"
#include "schublines/kostka.hpp"

#include <unordered_map>
#include <unordered_set>

namespace schublines {

std::string_view clause_name(Clause c) noexcept {
  switch (c) {
    case Clause::BaseSmallK:
      return "base-small-k";
    case Clause::BothBranchesOne:
      return "both-branches-one";
    case Clause::UnequalBranches:
      return "unequal-branches";
  }
  return "unknown";
}

Clause clause_from_name(std::string_view name) {
  for (Clause c : {Clause::BaseSmallK, Clause::BothBranchesOne, Clause::UnequalBranches}) {
    if (clause_name(c) == name) return c;
  }
  throw CertificateFormatError("unknown clause '" + std::string(name) + "'");
}

namespace {

class Validator {
 public:
  ValidationResult check(const CertificateNode& node) {
    if (done_.contains(&node)) return {};
    auto fail = [&](const std::string& why) {
      return ValidationResult{false, node.problem.to_string() + ": " + why};
    };

    if (!is_valid(node.problem)) return fail("problem is not valid");
    if (reduce(node.problem) != node.reduced) {
      return fail("stored reduction " + node.reduced.to_string() + " differs from " +
                  reduce(node.problem).to_string());
    }
    const BigInt k = kostka(node.reduced);
    if (k != node.kostka_value) {
      return fail("stored count " + to_decimal(node.kostka_value) + " but K = " + to_decimal(k));
    }

    if (node.clause == Clause::BaseSmallK) {
      if (k > 2) return fail("base clause with K = " + to_decimal(k) + " > 2");
      if (node.rearrangement || node.merged || node.decremented) {
        return fail("base clause node carries a rearrangement or children");
      }
      done_.insert(&node);
      return {};
    }

    if (!node.rearrangement) return fail("missing rearrangement");
    if (!node.merged || !node.decremented) return fail("missing branch certificate");
    if (node.rearrangement->problem() != node.reduced) {
      return fail("rearrangement " + node.rearrangement->to_string() +
                  " is not a listing of the reduced problem");
    }
    if (!is_reduced(node.reduced) || node.reduced.size() < 2) {
      return fail("split applied to a problem that is not reduced");
    }
    const auto split = recursion_split(*node.rearrangement);
    if (node.merged->problem != split.merged) {
      return fail("merged branch " + node.merged->problem.to_string() + " should be " +
                  split.merged.to_string());
    }
    if (node.decremented->problem != split.decremented) {
      return fail("decremented branch " + node.decremented->problem.to_string() +
                  " should be " + split.decremented.to_string());
    }
    const BigInt& k1 = node.merged->kostka_value;
    const BigInt& k2 = node.decremented->kostka_value;
    if (k1 + k2 != k) return fail("branch counts do not add up to K");
    if (node.clause == Clause::BothBranchesOne) {
      if (k1 != 1 || k2 != 1) return fail("both-branches-one clause with counts " +
                                          to_decimal(k1) + ", " + to_decimal(k2));
    } else {
      if (k1 == 0 || k2 == 0 || k1 == k2) {
        return fail("unequal-branches clause with counts " + to_decimal(k1) + ", " +
                    to_decimal(k2));
      }
    }
    if (auto r = check(*node.merged); !r) return r;
    if (auto r = check(*node.decremented); !r) return r;
    done_.insert(&node);
    return {};
  }

 private:
  std::unordered_set<const CertificateNode*> done_;
};

bool same_node_data(const CertificateNode& a, const CertificateNode& b) {
  return a.problem == b.problem && a.reduced == b.reduced && a.kostka_value == b.kostka_value &&
         a.clause == b.clause && a.rearrangement == b.rearrangement &&
         static_cast<bool>(a.merged) == static_cast<bool>(b.merged) &&
         static_cast<bool>(a.decremented) == static_cast<bool>(b.decremented);
}

struct PairHash {
  std::size_t operator()(const std::pair<const CertificateNode*, const CertificateNode*>& p) const {
    return std::hash<const void*>{}(p.first) * 31 ^ std::hash<const void*>{}(p.second);
  }
};

bool equal_rec(const CertificateNode& a, const CertificateNode& b,
               std::unordered_set<std::pair<const CertificateNode*, const CertificateNode*>,
                                  PairHash>& seen) {
  if (&a == &b) return true;
  if (seen.contains({&a, &b})) return true;
  if (!same_node_data(a, b)) return false;
  if (a.merged && !equal_rec(*a.merged, *b.merged, seen)) return false;
  if (a.decremented && !equal_rec(*a.decremented, *b.decremented, seen)) return false;
  seen.insert({&a, &b});
  return true;
}

std::uint64_t size_rec(const CertificateNode& node,
                       std::unordered_map<const CertificateNode*, std::uint64_t>& memo) {
  if (auto it = memo.find(&node); it != memo.end()) return it->second;
  std::uint64_t n = 1;
  if (node.merged) n += size_rec(*node.merged, memo);
  if (node.decremented) n += size_rec(*node.decremented, memo);
  memo.emplace(&node, n);
  return n;
}

}  // namespace

ValidationResult validate_certificate(const CertificateNode& root) {
  return Validator{}.check(root);
}

bool structurally_equal(const CertificateNode& a, const CertificateNode& b) {
  std::unordered_set<std::pair<const CertificateNode*, const CertificateNode*>, PairHash> seen;
  return equal_rec(a, b, seen);
}

std::uint64_t expanded_size(const CertificateNode& root) {
  std::unordered_map<const CertificateNode*, std::uint64_t> memo;
  return size_rec(root, memo);
}

}  // namespace schublines
