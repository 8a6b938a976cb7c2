#include "schublines/injection.hpp"

#include "schublines/errors.hpp"

#include <algorithm>

namespace schublines {

std::vector<Condition> InjectionInstance::source_content() const {
  std::vector<Condition> c = b;
  c.push_back(alpha);
  c.push_back(beta + gamma);
  return c;
}

std::vector<Condition> InjectionInstance::target_content() const {
  std::vector<Condition> c = b;
  c.push_back(gamma);
  c.push_back(beta + alpha);
  return c;
}

std::vector<Condition> InjectionInstance::witness_base_content() const {
  std::vector<Condition> c = b;
  c.push_back(gamma - alpha - 1);
  c.push_back(beta - 1);
  return c;
}

void InjectionInstance::check() const {
  if (alpha < 1 || !(alpha <= beta && beta <= gamma) || !(alpha < gamma)) {
    throw PreconditionViolation("injection needs 1 <= alpha <= beta <= gamma with alpha < gamma; got alpha=" +
                                std::to_string(alpha) + " beta=" + std::to_string(beta) +
                                " gamma=" + std::to_string(gamma));
  }
  if (std::ranges::any_of(b, [](Condition x) { return x == 0; })) {
    throw PreconditionViolation("injection: entries of b must be positive");
  }
  std::vector<Condition> all = b;
  all.insert(all.end(), {alpha, beta, gamma});
  const auto whole = SchubertProblem::from_trusted(all);
  if (whole.sum() % 2 != 0 || !is_reduced(whole)) {
    throw PreconditionViolation("injection: " + whole.to_string() + " is not a reduced problem");
  }
}

TwoRowTableau iota_injection(const TwoRowTableau& t, const InjectionInstance& inst) {
  inst.check();
  if (!is_semistandard_for(t, inst.source_content())) {
    throw PreconditionViolation("iota_injection: " + t.to_string() +
                                " is not a tableau for the source content");
  }
  const Condition first_new = static_cast<Condition>(inst.b.size() + 1);
  const Condition second_new = first_new + 1;
  const auto top_count =
      static_cast<Condition>(std::ranges::count(t.row1, first_new));

  TwoRowTableau out;
  out.row1 = t.row1;
  std::ranges::copy_if(t.row2, std::back_inserter(out.row2),
                       [&](Condition v) { return v < first_new; });
  out.row2.insert(out.row2.end(), inst.gamma - top_count, first_new);
  out.row2.insert(out.row2.end(), inst.beta + inst.alpha, second_new);
  return out;
}

TwoRowTableau iota_witness(const TwoRowTableau& base, const InjectionInstance& inst) {
  inst.check();
  if (!is_semistandard_for(base, inst.witness_base_content())) {
    throw PreconditionViolation("iota_witness: " + base.to_string() +
                                " is not a tableau for the witness base content");
  }
  const Condition first_new = static_cast<Condition>(inst.b.size() + 1);
  TwoRowTableau out = base;
  out.row1.insert(out.row1.end(), inst.alpha + 1, first_new);
  out.row2.insert(out.row2.end(), inst.alpha + 1, first_new + 1);
  return out;
}

}  // namespace schublines
