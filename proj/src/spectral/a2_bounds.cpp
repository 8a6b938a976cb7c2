#include "schublines/quadrature.hpp"
#include "schublines/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace schublines {

namespace {

constexpr std::size_t kPanels = 16;
constexpr std::size_t kOrder = 32;

const GaussLegendreRule& bound_rule() {
  static const GaussLegendreRule rule(kOrder);
  return rule;
}

}  // namespace

// F vanishes at pi/12 and lambda_2 at pi/3, so on each interval below the
// integrand keeps one sign and |.| is smooth inside every panel.
A2Bounds a2_bound_integrals(std::uint32_t m) {
  if (m < 1) throw std::invalid_argument("a2_bound_integrals needs m >= 1");
  constexpr double pi = std::numbers::pi;
  auto integrand = [m](double t) { return std::pow(1.0 + 2.0 * std::cos(2.0 * t), m) * F_eval(t); };

  A2Bounds b;
  b.m = m;
  b.lhs = composite_gauss_legendre(integrand, 0.0, pi / 12.0, kPanels, bound_rule());
  b.rhs_integral = composite_gauss_legendre([&](double t) { return std::abs(integrand(t)); },
                                            pi / 12.0, pi / 3.0, kPanels, bound_rule());
  b.rhs = b.rhs_integral + 2.0 * pi / 3.0;
  b.holds = b.lhs > b.rhs;
  return b;
}

}  // namespace schublines
