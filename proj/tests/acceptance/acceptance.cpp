// Acceptance suite: one PASS/FAIL line per criterion.

#include "oracles.hpp"

#include "cli/commands.hpp"
#include "schublines/certificate.hpp"
#include "schublines/errors.hpp"
#include "schublines/inequalities.hpp"
#include "schublines/injection.hpp"
#include "schublines/kostka.hpp"
#include "schublines/spectral.hpp"
#include "schublines/sweep.hpp"
#include "schublines/tableau.hpp"
#include "schublines/verifier.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

using namespace schublines;
using std::numbers::pi;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double budget_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_seconds) {
    o.ok = false;
    o.detail += " (over the " + std::to_string(budget_seconds) + " s budget)";
  }
  if (!o.ok) ++failures;
  std::printf("%s  %2d  %-28s %8.2fs  %s\n", o.ok ? "PASS" : "FAIL", id, name, secs, o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

}  // namespace

int main() {
  criterion(1, "table1", 1.0, [] {
    struct Row {
      long long merged, decremented, difference;
    };
    const Row table[] = {
        {0, 1, -1},           {0, 1, -1},           {1, 2, -1},           {2, 4, -2},
        {6, 9, -3},           {15, 21, -6},         {40, 51, -11},        {105, 127, -22},
        {280, 323, -43},      {750, 835, -85},      {2025, 2188, -163},   {5500, 5798, -298},
        {15026, 15511, -485}, {41262, 41835, -573}, {113841, 113634, 207}, {315420, 310572, 4848},
        {877320, 853467, 23853},
    };
    std::ostringstream out, err;
    if (cli::run({"table1", "--max-m", "16", "--format", "csv"}, out, err) != 0) {
      return Outcome{false, "table1 command failed"};
    }
    std::ostringstream want;
    want << "m,k_2m_4,k_2m_1_1,difference\n";
    for (int m = 0; m <= 16; ++m) {
      want << m << ',' << table[m].merged << ',' << table[m].decremented << ','
           << table[m].difference << '\n';
    }
    if (out.str() != want.str()) return Outcome{false, "CSV differs from the table"};
    return Outcome{true, "17 rows exact"};
  });

  criterion(2, "worked example", 1.0, [] {
    const ConditionSequence s{2, 2, 1, 2, 3};
    if (kostka(s) != 5) return Outcome{false, "K != 5"};
    std::set<std::string> got;
    for (const auto& t : enumerate_tableaux(s)) got.insert(t.to_string());
    const std::set<std::string> want{
        "[1,1,2,2,3]/[4,4,5,5,5]", "[1,1,2,2,4]/[3,4,5,5,5]", "[1,1,2,3,4]/[2,4,5,5,5]",
        "[1,1,2,4,4]/[2,3,5,5,5]", "[1,1,3,4,4]/[2,2,5,5,5]",
    };
    if (got != want) return Outcome{false, "tableau set differs"};
    const auto split = recursion_split(s);
    if (kostka(split.merged) != 1 || kostka(split.decremented) != 4) {
      return Outcome{false, "split counts are not 1 and 4"};
    }
    return Outcome{true, "K=5, five tableaux, split 1+4"};
  });

  criterion(3, "oracle equivalence", 60.0, [] {
    std::size_t n = 0;
    for (const auto& parts : oracle::valid_problems_up_to(16)) {
      const auto p = SchubertProblem::from_trusted(parts);
      if (BigInt(enumerate_tableaux(p).size()) != kostka(p)) {
        return Outcome{false, "mismatch at " + p.to_string()};
      }
      ++n;
    }
    return Outcome{true, std::to_string(n) + " problems"};
  });

  criterion(4, "sweep certification", 600.0, [] {
    const auto t0 = std::chrono::steady_clock::now();
    Verifier v;
    std::size_t certified = 0;
    for (std::uint32_t n = 2; n <= 16; ++n) {
      for (const auto& p : enumerate_problems(n)) {
        const auto r = validate_certificate(*v.verify(p));
        if (!r.ok) return Outcome{false, p.to_string() + ": " + r.reason};
        ++certified;
      }
    }
    const double small = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (small > 30.0) return Outcome{false, "n <= 16 took " + fmt("%.1f s", small)};
    const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t extended = 0;
    for (const auto& r : sweep(40, jobs)) {
      if (!r.all_certified) {
        return Outcome{false, "n=" + std::to_string(r.n) + " first failure " + r.failures.front().to_string()};
      }
      extended += r.problems_checked;
    }
    return Outcome{true, std::to_string(certified) + " certificates validated for n<=16 in " +
                             fmt("%.1f s", small) + "; " + std::to_string(extended) +
                             " problems certified for n<=40"};
  });

  criterion(5, "integral formula", 60.0, [] {
    double worst = 0;
    std::size_t n = 0;
    for (const auto& parts : oracle::valid_problems_up_to(20)) {
      const auto p = SchubertProblem::from_trusted(parts);
      const auto q = kostka_integral(p);
      const BigInt exact = kostka(p);
      if (!(*q.abs_residual < 1e-6) || BigInt(std::llround(q.value)) != exact) {
        return Outcome{false, "residual too large at " + p.to_string()};
      }
      worst = std::max(worst, *q.abs_residual);
      ++n;
    }
    return Outcome{true, std::to_string(n) + " problems, max residual " + fmt("%.2e", worst)};
  });

  criterion(6, "a2 bounds", 5.0, [] {
    const auto b = a2_bound_integrals(14);
    const double closed = 69.0 / 4 * pi + 26374.0 / 7 * std::sqrt(3.0) + 1679543168.0 / 255255;
    if (std::abs(b.lhs - 13159.9) >= 0.1) return Outcome{false, "lhs " + fmt("%.6f", b.lhs)};
    if (std::abs(b.rhs - 12837.1) >= 0.1) return Outcome{false, "rhs " + fmt("%.6f", b.rhs)};
    const double rel = std::abs(b.lhs - closed) / closed;
    if (rel >= 1e-6) return Outcome{false, "closed form relative error " + fmt("%.2e", rel)};
    for (std::uint32_t m = 14; m <= 25; ++m) {
      if (!a2_bound_integrals(m).holds) return Outcome{false, "fails at m=" + std::to_string(m)};
    }
    return Outcome{true, "lhs " + fmt("%.4f", b.lhs) + ", rhs " + fmt("%.4f", b.rhs) +
                             ", closed-form rel err " + fmt("%.1e", rel) + ", holds m=14..25"};
  });

  criterion(7, "hook formula", 5.0, [] {
    std::size_t pairs = 0;
    for (std::uint32_t k = 0; k <= 24; ++k) {
      for (std::uint32_t b = 0; k + b <= 24; ++b) {
        if ((k + b) % 2) continue;
        std::vector<Condition> content(k, 1);
        content.push_back(b);
        if (hook_kostka(k, b) != kostka_of_content(content)) {
          return Outcome{false, "k=" + std::to_string(k) + " b=" + std::to_string(b)};
        }
        ++pairs;
      }
    }
    for (std::uint32_t n = 3; n <= 12; ++n) {
      const std::vector<Condition> ones(2 * n - 2, 1);
      auto with_two = ones;
      with_two.push_back(2);
      // K(1^{2n-2},2) / K(1^{2n-2}) = 3(n-1)/(n+1), cross-multiplied.
      if (kostka_of_content(with_two) * (n + 1) != kostka_of_content(ones) * (3 * (n - 1))) {
        return Outcome{false, "ratio fails at n=" + std::to_string(n)};
      }
    }
    return Outcome{true, std::to_string(pairs) + " pairs, ratio exact for n=3..12"};
  });

  criterion(8, "recursion property", 60.0, [] {
    std::mt19937 rng(20240611);
    std::size_t done = 0;
    while (done < 10000) {
      const std::uint32_t total = 2 * std::uniform_int_distribution<std::uint32_t>(1, 15)(rng);
      const std::uint32_t cap = total / 2;
      std::vector<Condition> parts;
      std::uint32_t left = total;
      while (left > 0) {
        const Condition a = std::uniform_int_distribution<Condition>(1, std::min(left, cap))(rng);
        parts.push_back(a);
        left -= a;
      }
      if (parts.size() < 2) continue;
      std::shuffle(parts.begin(), parts.end(), rng);
      const auto s = ConditionSequence::from_trusted(parts);
      if (!is_valid(s.problem())) continue;
      const auto split = recursion_split(s);
      if (kostka(s) != kostka(split.merged) + kostka(split.decremented)) {
        return Outcome{false, "fails at " + s.to_string()};
      }
      ++done;
    }
    return Outcome{true, "10000 random problems"};
  });

  criterion(9, "tableau injection", 60.0, [] {
    std::set<std::pair<std::vector<Condition>, std::array<Condition, 3>>> seen;
    for (const auto& parts : oracle::valid_problems_up_to(14)) {
      if (!is_reduced(SchubertProblem::from_trusted(parts)) || parts.size() < 3) continue;
      const std::size_t k = parts.size();
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
          for (std::size_t l = j + 1; l < k; ++l) {
            // parts is weakly decreasing, so parts[l] <= parts[j] <= parts[i].
            InjectionInstance inst;
            inst.alpha = parts[l];
            inst.beta = parts[j];
            inst.gamma = parts[i];
            if (!(inst.alpha < inst.gamma)) continue;
            for (std::size_t q = 0; q < k; ++q)
              if (q != i && q != j && q != l) inst.b.push_back(parts[q]);
            if (!seen.insert({inst.b, {inst.alpha, inst.beta, inst.gamma}}).second) continue;
            inst.check();
            const auto src = enumerate_tableaux_for_content(inst.source_content());
            const auto tgt_count = enumerate_tableaux_for_content(inst.target_content()).size();
            std::set<TwoRowTableau> image;
            for (const auto& t : src) {
              const auto u = iota_injection(t, inst);
              if (!is_semistandard_for(u, inst.target_content())) {
                return Outcome{false, "image not a target tableau: " + t.to_string()};
              }
              image.insert(u);
            }
            if (image.size() != src.size()) return Outcome{false, "not injective"};
            const auto base = enumerate_tableaux_for_content(inst.witness_base_content());
            if (base.empty()) return Outcome{false, "no witness base tableau"};
            const auto w = iota_witness(base.front(), inst);
            if (!is_semistandard_for(w, inst.target_content()) || image.count(w)) {
              return Outcome{false, "bad witness " + w.to_string()};
            }
            if (!(src.size() < tgt_count)) return Outcome{false, "K(source) >= K(target)"};
          }
    }
    return Outcome{true, std::to_string(seen.size()) + " instances"};
  });

  criterion(10, "equal case", 10.0, [] {
    std::size_t checked = 0;
    for (std::uint32_t a = 3; a <= 6; ++a) {
      for (std::uint32_t m = 2; m <= 8; ++m) {
        const auto c = equal_case_check(a, m);
        if (!c.applicable) continue;
        if (!c.holds) return Outcome{false, "fails at a=" + std::to_string(a) + " m=" + std::to_string(m)};
        ++checked;
      }
    }
    return Outcome{true, std::to_string(checked) + " cases with a*m even"};
  });

  criterion(11, "spectral checks", 5.0, [] {
    double eig = 0, rec = 0;
    for (std::uint32_t a = 0; a <= 10; ++a) {
      for (int i = 1; i <= 100; ++i) {
        eig = std::max(eig, eigen_residual(a, pi * i / 101, 128));
      }
    }
    for (std::uint32_t j = 0; j <= 10; ++j) {
      for (std::uint32_t k = 0; k <= 10; ++k) {
        rec = std::max(rec, basis_reconstruction_residual(j, k, 64));
      }
    }
    if (!(eig < 1e-10)) return Outcome{false, "eigen residual " + fmt("%.2e", eig)};
    if (!(rec < 1e-12)) return Outcome{false, "reconstruction residual " + fmt("%.2e", rec)};
    return Outcome{true, "eigen " + fmt("%.1e", eig) + ", reconstruction " + fmt("%.1e", rec)};
  });

  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
