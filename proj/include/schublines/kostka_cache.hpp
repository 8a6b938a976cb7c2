#pragma once

#include "schublines/bigint.hpp"
#include "schublines/problem.hpp"

#include <cstddef>
#include <filesystem>
#include <shared_mutex>
#include <unordered_map>

namespace schublines {

/// Thread-safe memo of Kostka numbers keyed by the canonical problem.
///
/// Values are deterministic, so concurrent inserts of the same key are
/// harmless; the last writer wins.
class KostkaCache {
 public:
  /// Cached value, computing and inserting it on a miss.
  BigInt get(const SchubertProblem& p);

  void insert(const SchubertProblem& p, const BigInt& value);
  std::size_t size() const;
  void clear();

  /// One JSON object per line: {"problem":[...],"kostka":"<decimal>"}.
  /// Loading skips blank lines and throws CertificateFormatError on a
  /// malformed record. Returns the number of records read.
  std::size_t load_jsonl(const std::filesystem::path& file);
  void save_jsonl(const std::filesystem::path& file) const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<SchubertProblem, BigInt, SchubertProblemHash> values_;
};

}  // namespace schublines
