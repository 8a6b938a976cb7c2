#pragma once

#include "schublines/bigint.hpp"
#include "schublines/problem.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace schublines {

/// lambda_a(theta) = sin((a+1) theta) / sin(theta), the eigenvalue of M_a on
/// v(theta) = (sin theta, sin 2 theta, ...). Within 1e-6 of 0 or pi it is
/// evaluated as U_a(cos theta) instead. Throws DomainError outside [0, pi].
double lambda_eval(std::uint32_t a, double theta);

/// Chebyshev polynomial of the second kind U_a(x) by the three-term
/// recurrence.
double chebyshev_u(std::uint32_t a, double x);

/// N x N window of the Clebsch-Gordan operator M_a: entry (b, j) is 1 iff
/// j is one of b+a, b+a-2, ..., |b-a|.
class TruncatedToeplitz {
 public:
  TruncatedToeplitz(std::uint32_t a, std::size_t size);

  std::uint32_t weight() const noexcept { return a_; }
  std::size_t size() const noexcept { return size_; }
  bool entry(std::size_t row, std::size_t col) const;

  std::vector<double> multiply(std::span<const double> v) const;

 private:
  std::uint32_t a_;
  std::size_t size_;
  std::vector<std::uint8_t> cells_;
};

/// Largest |(M_a v)_b - lambda_a(theta) v_b| over rows b with b + a < N,
/// where v = (sin theta, ..., sin N theta). Rows near the truncation edge are
/// excluded. Throws TruncationTooSmall when N <= a + 2.
double eigen_residual(std::uint32_t a, double theta, std::size_t size);

/// |(2/pi) int_0^pi sin((j+1)t) sin((k+1)t) dt - delta_jk| with an n-node
/// midpoint rule. Throws std::invalid_argument when nodes < j + k + 2.
double basis_reconstruction_residual(std::uint32_t j, std::uint32_t k, std::size_t nodes);

struct QuadratureResult {
  double value = 0.0;
  std::size_t nodes = 0;
  std::optional<BigInt> exact;
  std::optional<double> abs_residual;
};

/// Default node count 4 * sum + 64.
std::size_t default_kostka_nodes(const SchubertProblem& p);

/// (2/pi) int_0^pi prod_i lambda_{a_i}(t) sin^2 t dt, which equals K(a).
/// The integrand is a cosine polynomial of degree sum + 2, so the midpoint
/// rule is exact once nodes > (sum + 2) / 2. nodes == 0 selects the default.
/// When `with_exact` is set the exact count and residual are filled in.
/// Throws InvalidProblem if p is not valid.
QuadratureResult kostka_integral(const SchubertProblem& p, std::size_t nodes = 0,
                                 bool with_exact = true);

/// F(theta) = 2 cos 4theta - cos 6theta - 1.
double F_eval(double theta);

struct A2Bounds {
  std::uint32_t m = 0;
  double lhs = 0.0;           ///< int_0^{pi/12} lambda^m F
  double rhs_integral = 0.0;  ///< int_{pi/12}^{pi/3} |lambda^m F|
  double rhs = 0.0;           ///< rhs_integral + 2pi/3
  bool holds = false;         ///< lhs > rhs
};

/// Both sides of the inequality that drives the induction for
/// K(2^m, 4) > K(2^m, 1, 1), m >= 14, with lambda = lambda_2.
/// Throws std::invalid_argument when m < 1.
A2Bounds a2_bound_integrals(std::uint32_t m);

/// (1/pi) int_0^pi lambda_2^m F dt = K(2^m, 4) - K(2^m, 1, 1), by the
/// midpoint rule. nodes == 0 selects m + 64.
double difference_integral_a2(std::uint32_t m, std::size_t nodes = 0);

/// Integrand of difference_integral_a2 before the 1/pi factor.
double difference_integrand_a2(std::uint32_t m, double theta);

}  // namespace schublines
