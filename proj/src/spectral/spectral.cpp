#include "schublines/spectral.hpp"

#include "schublines/errors.hpp"
#include "schublines/kostka.hpp"
#include "schublines/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace schublines {

namespace {
constexpr double kEndpointBand = 1e-6;
}

double chebyshev_u(std::uint32_t a, double x) {
  double u0 = 1.0;
  if (a == 0) return u0;
  double u1 = 2.0 * x;
  for (std::uint32_t k = 2; k <= a; ++k) {
    const double u2 = 2.0 * x * u1 - u0;
    u0 = u1;
    u1 = u2;
  }
  return u1;
}

double lambda_eval(std::uint32_t a, double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw DomainError("lambda_eval: theta = " + std::to_string(theta) + " is outside [0, pi]");
  }
  if (theta < kEndpointBand || std::numbers::pi - theta < kEndpointBand) {
    return chebyshev_u(a, std::cos(theta));
  }
  return std::sin((a + 1.0) * theta) / std::sin(theta);
}

TruncatedToeplitz::TruncatedToeplitz(std::uint32_t a, std::size_t size)
    : a_(a), size_(size), cells_(size * size, 0) {
  for (std::size_t b = 0; b < size; ++b) {
    const std::size_t lo = b >= a ? b - a : a - b;
    for (std::size_t j = lo; j <= b + a && j < size; j += 2) cells_[b * size + j] = 1;
  }
}

bool TruncatedToeplitz::entry(std::size_t row, std::size_t col) const {
  if (row >= size_ || col >= size_) throw std::out_of_range("TruncatedToeplitz index");
  return cells_[row * size_ + col] != 0;
}

std::vector<double> TruncatedToeplitz::multiply(std::span<const double> v) const {
  if (v.size() != size_) throw std::invalid_argument("TruncatedToeplitz: vector size mismatch");
  std::vector<double> out(size_, 0.0);
  for (std::size_t b = 0; b < size_; ++b) {
    double s = 0.0;
    for (std::size_t j = 0; j < size_; ++j) {
      if (cells_[b * size_ + j]) s += v[j];
    }
    out[b] = s;
  }
  return out;
}

double eigen_residual(std::uint32_t a, double theta, std::size_t size) {
  if (size <= std::size_t{a} + 2) {
    throw TruncationTooSmall("eigen_residual: truncation " + std::to_string(size) +
                             " must exceed a + 2 = " + std::to_string(a + 2));
  }
  const TruncatedToeplitz m(a, size);
  std::vector<double> v(size);
  for (std::size_t j = 0; j < size; ++j) v[j] = std::sin((j + 1.0) * theta);
  const auto mv = m.multiply(v);
  const double lambda = lambda_eval(a, theta);
  double worst = 0.0;
  for (std::size_t b = 0; b + a < size; ++b) {
    worst = std::max(worst, std::abs(mv[b] - lambda * v[b]));
  }
  return worst;
}

double basis_reconstruction_residual(std::uint32_t j, std::uint32_t k, std::size_t nodes) {
  if (nodes < std::size_t{j} + k + 2) {
    throw std::invalid_argument("basis_reconstruction_residual: need at least j + k + 2 nodes");
  }
  const double integral = periodic_midpoint(
      [&](double t) { return std::sin((j + 1.0) * t) * std::sin((k + 1.0) * t); }, nodes);
  return std::abs(2.0 / std::numbers::pi * integral - (j == k ? 1.0 : 0.0));
}

std::size_t default_kostka_nodes(const SchubertProblem& p) { return 4 * p.sum() + 64; }

QuadratureResult kostka_integral(const SchubertProblem& p, std::size_t nodes, bool with_exact) {
  if (!is_valid(p)) {
    throw InvalidProblem(ProblemRule::NotValid, "kostka_integral: " + p.to_string() +
                                                    " is not a valid problem");
  }
  QuadratureResult r;
  r.nodes = nodes == 0 ? default_kostka_nodes(p) : nodes;
  const auto conditions = p.conditions();
  const double integral = periodic_midpoint(
      [&](double t) {
        const double s = std::sin(t);
        double prod = s * s;
        for (Condition a : conditions) prod *= lambda_eval(a, t);
        return prod;
      },
      r.nodes);
  r.value = 2.0 / std::numbers::pi * integral;
  if (with_exact) {
    r.exact = kostka(p);
    r.abs_residual = std::abs(r.value - r.exact->convert_to<double>());
  }
  return r;
}

double F_eval(double theta) { return 2.0 * std::cos(4.0 * theta) - std::cos(6.0 * theta) - 1.0; }

double difference_integrand_a2(std::uint32_t m, double theta) {
  return std::pow(lambda_eval(2, theta), m) * F_eval(theta);
}

double difference_integral_a2(std::uint32_t m, std::size_t nodes) {
  if (nodes == 0) nodes = std::size_t{m} + 64;
  return periodic_midpoint([&](double t) { return difference_integrand_a2(m, t); }, nodes) /
         std::numbers::pi;
}

}  // namespace schublines
