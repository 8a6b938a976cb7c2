#include "schublines/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace schublines {

namespace {

// P_n(x) and its derivative by the three-term recurrence.
std::pair<double, double> legendre(std::size_t n, double x) {
  double p0 = 1.0, p1 = x;
  for (std::size_t k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, n * (x * p1 - p0) / (x * x - 1.0)};
}

}  // namespace

GaussLegendreRule::GaussLegendreRule(std::size_t n) : nodes(n), weights(n) {
  if (n == 0) throw std::invalid_argument("Gauss-Legendre rule needs at least one node");
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi's initial guess for the i-th largest root, then Newton.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

double composite_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                std::size_t panels, const GaussLegendreRule& rule) {
  if (panels == 0) throw std::invalid_argument("composite rule needs at least one panel");
  const double h = (b - a) / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + h * static_cast<double>(p);
    const double mid = lo + 0.5 * h;
    double s = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    total += 0.5 * h * s;
  }
  return total;
}

double periodic_midpoint(const std::function<double(double)>& f, std::size_t n) {
  if (n == 0) throw std::invalid_argument("midpoint rule needs at least one node");
  const double h = std::numbers::pi / static_cast<double>(n);
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) s += f((static_cast<double>(k) + 0.5) * h);
  return s * h;
}

}  // namespace schublines
