#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace schublines {

/// Gauss-Legendre nodes and weights on [-1, 1], exact for polynomials of
/// degree 2n-1.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussLegendreRule(std::size_t n);
  std::size_t size() const noexcept { return nodes.size(); }
};

/// Integral of f over [a, b] split into `panels` equal panels, each
/// integrated with `rule`.
double composite_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                std::size_t panels, const GaussLegendreRule& rule);

/// Midpoint rule with n nodes on [0, pi]. For an even 2pi-periodic
/// integrand this is the 2n-point trapezoid rule on the full period, hence
/// exact for cosine polynomials of degree below 2n.
double periodic_midpoint(const std::function<double(double)>& f, std::size_t n);

}  // namespace schublines
