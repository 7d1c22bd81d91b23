#include "rkb/classical.hpp"

#include <algorithm>
#include <cmath>

#include "rkb/errors.hpp"
#include "util.hpp"

namespace rkb {

namespace {

double default_step(double radius) { return 1e-5 * (1.0 - radius); }

// Central difference along direction u (|u| = 1), divided by the representable step.
template <class Eval>
cplx central(Eval f, cplx z, cplx u, double h) {
  const cplx zp = z + h * u;
  const cplx zm = z - h * u;
  return (f(zp) - f(zm)) / (zp - zm);
}

Point with_coord(const Point& z, std::size_t j, cplx value) {
  Point out = z;
  out[j] = value;
  return out;
}

}  // namespace

cplx weighted_difference_quotient(const SelfMap& phi, cplx lambda, cplx zeta, double alpha, cplx z) {
  return (1.0 - phi(Point(z)).z() * std::conj(lambda)) / principal_pow(1.0 - z * std::conj(zeta), alpha);
}

cplx numeric_derivative(const SelfMap& phi, cplx z, std::optional<double> h) {
  const double step = h.value_or(default_step(std::abs(z)));
  if (!(step > 0.0)) throw StencilError("stencil step must be positive");
  for (cplx u : {cplx(1, 0), cplx(-1, 0), cplx(0, 1), cplx(0, -1)})
    if (!phi.source().contains(Point(z + step * u)))
      throw StencilError("stencil around " + detail::fmt_cplx(z) + " leaves " + phi.source().name());
  auto f = [&](cplx w) { return phi(Point(w)).z(); };
  return 0.5 * (central(f, z, cplx(1, 0), step) + central(f, z, cplx(0, 1), step));
}

std::vector<cplx> numeric_gradient(const PointFn& f, const Point& z, std::optional<double> h) {
  const double step = h.value_or(default_step(std::sqrt(z.norm_sq())));
  if (!(step > 0.0)) throw StencilError("stencil step must be positive");
  std::vector<cplx> grad;
  for (std::size_t j = 0; j < z.size(); ++j) {
    for (cplx u : {cplx(1, 0), cplx(-1, 0), cplx(0, 1), cplx(0, -1)})
      if (with_coord(z, j, z[j] + step * u).norm_sq() >= 1.0)
        throw StencilError("gradient stencil around " + to_string(z) + " leaves the ball");
    auto g = [&](cplx w) { return f(with_coord(z, j, w)); };
    grad.push_back(0.5 * (central(g, z[j], cplx(1, 0), step) + central(g, z[j], cplx(0, 1), step)));
  }
  return grad;
}

bool tail_converges(const std::vector<cplx>& values, double tol) {
  if (values.size() < 2) return false;
  const cplx last = values.back();
  const std::size_t start = values.size() - std::max<std::size_t>(2, values.size() / 4);
  for (std::size_t i = start; i < values.size(); ++i) {
    if (!std::isfinite(std::abs(values[i]))) return false;
    if (std::abs(last - values[i]) > tol * std::max(1.0, std::abs(last))) return false;
  }
  return true;
}

WeightedDerivativeReport weighted_derivative_check(const SelfMap& phi, cplx zeta, cplx lambda, double alpha,
                                                   const std::vector<Point>& seq, std::optional<cplx> c) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in (0, 1]");
  if (seq.empty()) throw DomainError("weighted_derivative_check needs a sequence");
  WeightedDerivativeReport r;
  r.alpha = alpha;
  r.zeta = zeta;
  r.lambda = lambda;
  r.points = seq;
  for (const auto& p : seq) {
    const cplx z = p.z();
    r.dq_trace.push_back(weighted_difference_quotient(phi, lambda, zeta, alpha, z));
    r.wd_trace.push_back(numeric_derivative(phi, z) * principal_pow(1.0 - z * std::conj(zeta), 1.0 - alpha));
  }
  r.c = c.value_or(r.dq_trace.back());
  r.target = r.c * lambda * std::conj(zeta) * alpha;
  r.dq_residual = std::abs(r.dq_trace.back() - r.c);
  r.wd_residual = std::abs(r.wd_trace.back() - r.target);
  r.dq_converged = tail_converges(r.dq_trace);
  r.wd_converged = tail_converges(r.wd_trace);
  r.phi_residual = std::abs(phi(seq.back()).z() - lambda);
  r.phi_to_lambda = r.phi_residual < 1e-3;
  const bool both = r.dq_converged && r.wd_converged && r.dq_residual < 1e-3 &&
                    r.wd_residual < 1e-3 * std::max(1.0, std::abs(r.target));
  r.passed = both || (!r.dq_converged && !r.wd_converged);
  return r;
}

cplx ball_quotient(const PointFn& phi, cplx lambda, const Point& zeta, double alpha, const Point& z) {
  return (1.0 - phi(z) * std::conj(lambda)) / principal_pow(1.0 - inner(z, zeta), alpha);
}

cplx ball_quotient_row(const RowFn& phi, const std::vector<cplx>& lambda, const Point& zeta, double alpha,
                       const Point& z) {
  const std::vector<cplx> row = phi(z);
  if (row.size() != lambda.size()) throw DomainError("row length does not match lambda");
  if (row.size() > 16) throw DomainError("row multipliers are limited to 16 entries");
  cplx s = 0.0;
  for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * std::conj(lambda[j]);
  return (1.0 - s) / principal_pow(1.0 - inner(z, zeta), alpha);
}

double koranyi_level(const Point& zeta, const Point& z) {
  return std::abs(1.0 - inner(z, zeta)) / (1.0 - z.norm_sq());
}

std::vector<Point> koranyi_sequence(const Point& zeta, KoranyiKind kind, int N, double M) {
  const std::size_t d = zeta.size();
  if (d < 1) throw DomainError("anchor must have at least one coordinate");
  if (std::abs(zeta.norm_sq() - 1.0) > 1e-12) throw DomainError("anchor must be a unit vector");
  // A unit vector orthogonal to zeta, for complex-tangential drift.
  Point v(std::vector<cplx>(d, 0.0));
  if (d >= 2) {
    std::size_t j = 0;
    for (std::size_t i = 1; i < d; ++i)
      if (std::abs(zeta[i]) < std::abs(zeta[j])) j = i;
    Point e(std::vector<cplx>(d, 0.0));
    e[j] = 1.0;
    const cplx proj = inner(e, zeta);
    for (std::size_t i = 0; i < d; ++i) v[i] = e[i] - proj * zeta[i];
    v = scaled(v, 1.0 / std::sqrt(v.norm_sq()));
  }
  if (kind == KoranyiKind::TangentialInSphere && d < 2)
    throw DomainError("tangential approach inside the sphere needs d >= 2");
  if (kind == KoranyiKind::Koranyi && !(M > 0.5))
    throw NotApproaching("Koranyi regions with M <= 1/2 contain no sequence tending to the anchor");

  std::vector<Point> out;
  for (int n = 1; n <= N; ++n) {
    const double eps = std::ldexp(1.0, -n);
    const double r = 1.0 - eps;
    Point z;
    switch (kind) {
      case KoranyiKind::RestrictedRadial:
        z = scaled(zeta, r);
        break;
      case KoranyiKind::Koranyi:
        if (d >= 2) {
          const double delta = std::sqrt(std::max(0.0, 0.5 * eps * (2.0 - 1.0 / M - eps)));
          z = scaled(zeta, r);
          for (std::size_t i = 0; i < d; ++i) z[i] += delta * v[i];
        } else {
          const double t = std::min(1.0, std::sqrt(std::max(0.0, M * M - 1.0)));
          z = scaled(zeta, 1.0 - eps * cplx(1.0, t));
        }
        if (!(z.norm_sq() < 1.0) || koranyi_level(zeta, z) > M)
          throw NotApproaching("Koranyi(" + detail::fmt_real(M) + ") point " + std::to_string(n) +
                               " fails the region inequality");
        break;
      case KoranyiKind::TangentialInSphere: {
        const double delta = std::sqrt(std::max(0.0, 1.0 - r * r - std::pow(eps, 1.5)));
        z = scaled(zeta, r);
        for (std::size_t i = 0; i < d; ++i) z[i] += delta * v[i];
        break;
      }
    }
    if (!(z.norm_sq() < 1.0)) throw NotApproaching("sequence point " + std::to_string(n) + " left the ball");
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace rkb
