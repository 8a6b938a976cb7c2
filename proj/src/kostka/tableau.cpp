#include "schublines/tableau.hpp"

#include "schublines/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace schublines {

namespace {

void print_row(std::ostringstream& os, const std::vector<Condition>& row) {
  os << '[';
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) os << ',';
    os << row[i];
  }
  os << ']';
}

// Places labels 1, 2, ... in turn, choosing how many copies of each go to the
// first row (the rest go to the second). The second-row copies of label i sit
// at positions r2 .. r2 + (c_i - k) - 1 and need a smaller label above them,
// i.e. they must end at or before the first-row length reached by labels < i.
// Trying k from large to small yields the first rows in increasing
// lexicographic order.
class Enumerator {
 public:
  Enumerator(std::span<const Condition> content, std::size_t cap) : content_(content), cap_(cap) {
    const std::uint64_t total = std::accumulate(content.begin(), content.end(), std::uint64_t{0});
    length_ = total / 2;
    odd_ = total % 2 != 0;
  }

  std::vector<TwoRowTableau> run() {
    if (odd_) return {};
    current_.row1.reserve(length_);
    current_.row2.reserve(length_);
    place(0);
    return std::move(out_);
  }

 private:
  void place(std::size_t label) {
    const std::uint64_t r1 = current_.row1.size();
    const std::uint64_t r2 = current_.row2.size();
    if (label == content_.size()) {
      if (r1 == length_ && r2 == length_) {
        if (out_.size() >= cap_) {
          throw ResourceLimit("tableau enumeration exceeded the cap of " + std::to_string(cap_));
        }
        out_.push_back(current_);
      }
      return;
    }
    const std::uint64_t c = content_[label];
    const Condition value = static_cast<Condition>(label + 1);
    const std::uint64_t max_top = std::min<std::uint64_t>(c, length_ - r1);
    for (std::uint64_t k = max_top + 1; k-- > 0;) {
      const std::uint64_t bottom = c - k;
      if (r2 + bottom > r1) continue;  // column strictness
      current_.row1.insert(current_.row1.end(), k, value);
      current_.row2.insert(current_.row2.end(), bottom, value);
      place(label + 1);
      current_.row1.resize(r1);
      current_.row2.resize(r2);
    }
  }

  std::span<const Condition> content_;
  std::size_t cap_;
  std::uint64_t length_ = 0;
  bool odd_ = false;
  TwoRowTableau current_;
  std::vector<TwoRowTableau> out_;
};

}  // namespace

std::string TwoRowTableau::to_string() const {
  std::ostringstream os;
  print_row(os, row1);
  os << '/';
  print_row(os, row2);
  return os.str();
}

bool is_semistandard_for(const TwoRowTableau& t, std::span<const Condition> content) {
  if (t.row1.size() != t.row2.size()) return false;
  std::vector<std::uint64_t> seen(content.size(), 0);
  for (const auto* row : {&t.row1, &t.row2}) {
    for (std::size_t i = 0; i < row->size(); ++i) {
      const Condition v = (*row)[i];
      if (v < 1 || v > content.size()) return false;
      if (i > 0 && (*row)[i - 1] > v) return false;
      ++seen[v - 1];
    }
  }
  for (std::size_t i = 0; i < t.row1.size(); ++i) {
    if (t.row1[i] >= t.row2[i]) return false;
  }
  return std::ranges::equal(seen, content, [](std::uint64_t s, Condition c) { return s == c; });
}

std::vector<TwoRowTableau> enumerate_tableaux_for_content(std::span<const Condition> content,
                                                          std::size_t cap) {
  return Enumerator(content, cap).run();
}

std::vector<TwoRowTableau> enumerate_tableaux(const ConditionSequence& s, std::size_t cap) {
  return enumerate_tableaux_for_content(s.conditions(), cap);
}

std::vector<TwoRowTableau> enumerate_tableaux(const SchubertProblem& p, std::size_t cap) {
  return enumerate_tableaux_for_content(p.conditions(), cap);
}

}  // namespace schublines
