#include "rkb/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rkb/errors.hpp"

namespace rkb {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double max_diag(const Eigen::MatrixXcd& g) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < g.rows(); ++i) m = std::max(m, std::abs(g(i, i)));
  return m;
}

Eigen::MatrixXcd hermitian_part(const Eigen::MatrixXcd& g) { return 0.5 * (g + g.adjoint()); }

// Retained eigenpairs of G: columns of U and eigenvalues above the threshold.
struct Range {
  Eigen::MatrixXcd u;
  Eigen::VectorXd lambda;
  int dropped = 0;
};

Range retained_range(const Eigen::MatrixXcd& g, const PinvOptions& opt) {
  const auto n = g.rows();
  Range r;
  if (n == 0) return r;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitian_part(g));
  if (es.info() != Eigen::Success) throw ConvergenceError("Hermitian eigensolver failed");
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double top = ev(n - 1);
  if (!(top > 0.0)) {
    r.dropped = static_cast<int>(n);
    return r;
  }
  const double cut = opt.rel_threshold * top;
  const double floor = 16.0 * static_cast<double>(n) * kEps * top;
  int meaningful_drops = 0;
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (ev(i) >= cut) {
      keep.push_back(i);
    } else {
      ++r.dropped;
      if (ev(i) > floor) ++meaningful_drops;
    }
  }
  if (2 * meaningful_drops > n)
    throw IllConditioned(std::to_string(meaningful_drops) + " of " + std::to_string(n) +
                         " Gram eigenvalues fall below the pseudo-inverse threshold");
  r.u.resize(n, static_cast<Eigen::Index>(keep.size()));
  r.lambda.resize(static_cast<Eigen::Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) {
    r.u.col(static_cast<Eigen::Index>(j)) = es.eigenvectors().col(keep[j]);
    r.lambda(static_cast<Eigen::Index>(j)) = ev(keep[j]);
  }
  return r;
}

Eigen::VectorXcd values_on(const PointFn& f, const Sample& s) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) v(static_cast<Eigen::Index>(i)) = f(s[i]);
  return v;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::PSD:
      return "PSD";
    case Verdict::NotPSD:
      return "NotPSD";
    case Verdict::Borderline:
      return "Borderline";
  }
  return "?";
}

double default_tol(const Eigen::MatrixXcd& g) { return 1e-9 * static_cast<double>(g.rows()) * max_diag(g); }

double roundoff_floor(const Eigen::MatrixXcd& g) {
  return 64.0 * kEps * static_cast<double>(g.rows()) * max_diag(g);
}

Eigen::MatrixXcd gram_matrix(const Kernel& k, const Sample& s) {
  const auto n = static_cast<Eigen::Index>(s.size());
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      g(i, j) = k(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]);
  return g;
}

GramReport analyze_gram(const Eigen::MatrixXcd& g, std::string label, std::optional<double> tol) {
  GramReport rep;
  rep.label = std::move(label);
  rep.matrix = g;
  rep.tol = tol.value_or(default_tol(g));
  if (g.rows() == 0) return rep;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitian_part(g));
  if (es.info() != Eigen::Success) throw ConvergenceError("Hermitian eigensolver failed");
  rep.eigenvalues = es.eigenvalues();
  rep.min_eig = rep.eigenvalues(0);
  const double floor = std::min(roundoff_floor(g), rep.tol);
  if (rep.min_eig >= -floor) {
    rep.verdict = Verdict::PSD;
  } else {
    rep.verdict = rep.min_eig < -rep.tol ? Verdict::NotPSD : Verdict::Borderline;
    rep.witness = es.eigenvectors().col(0);
  }
  return rep;
}

GramReport gram(const Kernel& k, const Sample& s, std::optional<double> tol) {
  GramReport rep = analyze_gram(gram_matrix(k, s), k.label(), tol);
  rep.points = s.points;
  return rep;
}

SampleNorm sample_norm_sq(const Eigen::MatrixXcd& g, const Eigen::VectorXcd& f, PinvOptions opt) {
  const Range r = retained_range(g, opt);
  SampleNorm out;
  out.sample_size = static_cast<int>(g.rows());
  out.dropped = r.dropped;
  if (r.lambda.size() == 0) {
    out.value_sq = f.squaredNorm() == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return out;
  }
  const Eigen::VectorXcd coeff = r.u.adjoint() * f;
  double v = 0.0;
  for (Eigen::Index j = 0; j < coeff.size(); ++j) v += std::norm(coeff(j)) / r.lambda(j);
  out.value_sq = v;
  out.conditioning = r.lambda.minCoeff();
  return out;
}

SampleNorm sample_norm_sq(const Kernel& k, const PointFn& f, const Sample& s, PinvOptions opt) {
  return sample_norm_sq(gram_matrix(k, s), values_on(f, s), opt);
}

double generalized_max_eig(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& g, PinvOptions opt) {
  const Range r = retained_range(g, opt);
  if (r.lambda.size() == 0) return 0.0;
  const Eigen::MatrixXcd w = r.u * r.lambda.cwiseSqrt().cwiseInverse().asDiagonal();
  const Eigen::MatrixXcd m = hermitian_part(w.adjoint() * a * w);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ConvergenceError("Hermitian eigensolver failed");
  return std::max(0.0, es.eigenvalues()(es.eigenvalues().size() - 1));
}

double multiplier_norm_est(const Kernel& k, const PointFn& phi, const Sample& s, PinvOptions opt) {
  const Eigen::MatrixXcd g = gram_matrix(k, s);
  const Eigen::VectorXcd d = values_on(phi, s);
  const Eigen::MatrixXcd a = d.asDiagonal() * g * d.adjoint().asDiagonal();
  return std::sqrt(generalized_max_eig(a, g, opt));
}

double comp_symbol_norm_est(const Kernel& k, const SelfMap& phi, const Sample& s, PinvOptions opt) {
  const Eigen::MatrixXcd g = gram_matrix(k, s);
  const Eigen::MatrixXcd a = gram_matrix(compose_kernel(k, phi), s);
  return std::sqrt(generalized_max_eig(a, g, opt));
}

WeakLimit weak_limit_probe(const Kernel& k, const std::vector<Point>& seq, const Sample& probes,
                           double threshold) {
  WeakLimit out;
  if (seq.empty()) throw DomainError("weak_limit_probe needs a nonempty sequence");
  for (const auto& x : seq) {
    std::vector<cplx> row;
    row.reserve(probes.size());
    for (const auto& p : probes.points) row.push_back(k(p, x));
    out.table.push_back(std::move(row));
    out.diagonal.push_back(k.diag(x));
  }
  const auto& last = out.table.back();
  for (const auto& row : out.table) {
    double r = 0.0;
    for (std::size_t p = 0; p < row.size(); ++p)
      r = std::max(r, std::abs(row[p] - last[p]) / (1.0 + std::abs(last[p])));
    out.residual_trace.push_back(r);
  }
  const std::size_t n = seq.size();
  const std::size_t start = n - std::max<std::size_t>(1, n / 4);
  // The final entry is trivially zero; the quarter window always contains the one before it.
  const std::size_t from = n >= 2 ? std::min(start, n - 2) : 0;
  for (std::size_t i = from; i < n; ++i) out.residual = std::max(out.residual, out.residual_trace[i]);
  out.converged = n >= 2 && out.residual < threshold;
  const Point x_last = seq.back();
  out.limit = [k, x_last](const Point& y) { return k(y, x_last); };
  return out;
}

}  // namespace rkb
