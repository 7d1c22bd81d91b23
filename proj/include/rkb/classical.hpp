#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rkb/kernel.hpp"

namespace rkb {

/// (1 - phi(z) conj(lambda)) / (1 - z conj(zeta))^alpha
cplx weighted_difference_quotient(const SelfMap& phi, cplx lambda, cplx zeta, double alpha, cplx z);

/// Averaged real- and imaginary-direction central differences of a disk map.
/// Default h = 1e-5 (1 - |z|). StencilError if a stencil point leaves the disk.
cplx numeric_derivative(const SelfMap& phi, cplx z, std::optional<double> h = {});

/// Componentwise derivative of a scalar function on the unit ball of C^d.
std::vector<cplx> numeric_gradient(const PointFn& f, const Point& z, std::optional<double> h = {});

struct WeightedDerivativeReport {
  double alpha = 1.0;
  cplx zeta = 1.0;
  cplx lambda = 1.0;
  /// Supplied constant, or the last difference quotient.
  cplx c = 0.0;
  std::vector<Point> points;
  std::vector<cplx> dq_trace;
  std::vector<cplx> wd_trace;
  cplx target = 0.0;  ///< c lambda conj(zeta) alpha
  double dq_residual = 0.0;
  double wd_residual = 0.0;
  bool dq_converged = false;
  bool wd_converged = false;
  double phi_residual = 0.0;  ///< |phi(z_last) - lambda|
  bool phi_to_lambda = false;
  /// Both converge to related limits, or neither converges.
  bool passed = false;
};

/// Tail Cauchy test: |v_last - v_j| <= tol max(1, |v_last|) over the last quarter.
bool tail_converges(const std::vector<cplx>& values, double tol = 1e-3);

WeightedDerivativeReport weighted_derivative_check(const SelfMap& phi, cplx zeta, cplx lambda, double alpha,
                                                   const std::vector<Point>& seq, std::optional<cplx> c = {});

using RowFn = std::function<std::vector<cplx>(const Point&)>;

/// (1 - phi(z) conj(lambda)) / (1 - <z, zeta>)^alpha on the ball.
cplx ball_quotient(const PointFn& phi, cplx lambda, const Point& zeta, double alpha, const Point& z);
/// Row version with <phi(z), lambda> in the numerator; rows of length <= 16.
cplx ball_quotient_row(const RowFn& phi, const std::vector<cplx>& lambda, const Point& zeta, double alpha,
                       const Point& z);

enum class KoranyiKind { RestrictedRadial, Koranyi, TangentialInSphere };

/// Points n = 1..N approaching the unit vector zeta. Koranyi(M) points satisfy
/// |1 - <z, zeta>| <= M (1 - |z|^2) and drift in a complex-tangential direction
/// when d >= 2; NotApproaching if they cannot.
std::vector<Point> koranyi_sequence(const Point& zeta, KoranyiKind kind, int N, double M = 2.0);

/// |1 - <z, zeta>| / (1 - |z|^2)
double koranyi_level(const Point& zeta, const Point& z);

}  // namespace rkb
