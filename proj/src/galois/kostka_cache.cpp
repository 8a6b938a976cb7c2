#include "schublines/kostka_cache.hpp"

#include "schublines/errors.hpp"
#include "schublines/kostka.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <mutex>
#include <vector>

namespace schublines {

BigInt KostkaCache::get(const SchubertProblem& p) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = values_.find(p); it != values_.end()) return it->second;
  }
  BigInt value = kostka(p);
  insert(p, value);
  return value;
}

void KostkaCache::insert(const SchubertProblem& p, const BigInt& value) {
  std::unique_lock lock(mutex_);
  values_.insert_or_assign(p, value);
}

std::size_t KostkaCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

void KostkaCache::clear() {
  std::unique_lock lock(mutex_);
  values_.clear();
}

std::size_t KostkaCache::load_jsonl(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return 0;
  std::size_t count = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (std::ranges::all_of(line, [](unsigned char c) { return std::isspace(c); })) continue;
    try {
      const auto record = nlohmann::json::parse(line);
      const auto parts = record.at("problem").get<std::vector<long long>>();
      const SchubertProblem p(parts);
      insert(p, parse_decimal(record.at("kostka").get<std::string>()));
      ++count;
    } catch (const std::exception& e) {
      throw CertificateFormatError(file.string() + ":" + std::to_string(line_no) +
                                   ": bad cache record: " + e.what());
    }
  }
  return count;
}

void KostkaCache::save_jsonl(const std::filesystem::path& file) const {
  std::vector<std::pair<SchubertProblem, BigInt>> rows;
  {
    std::shared_lock lock(mutex_);
    rows.assign(values_.begin(), values_.end());
  }
  std::ranges::sort(rows, {}, &std::pair<SchubertProblem, BigInt>::first);
  std::ofstream out(file, std::ios::trunc);
  for (const auto& [p, k] : rows) {
    nlohmann::json record;
    record["problem"] = std::vector<Condition>(p.conditions().begin(), p.conditions().end());
    record["kostka"] = to_decimal(k);
    out << record.dump() << '\n';
  }
}

}  // namespace schublines
