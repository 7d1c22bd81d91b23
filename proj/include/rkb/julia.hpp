#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rkb/boundary.hpp"
#include "rkb/numerics.hpp"

namespace rkb {

struct EscalationPlan {
  std::vector<int> sizes{8, 16, 32, 64};
  /// Adds G16 (disk) or the probe set (other domains) as a fixed sample.
  bool fixed_samples = true;
  int restarts = 200;
  int witness_size = 5;
  int climb_steps = 20;
  std::uint64_t seed = 0;
  std::optional<double> tol;
};

enum class FactorStatus { CertifiedOnSamples, Refuted };
std::string to_string(FactorStatus s);

struct FactorVerdict {
  Kernel quotient;
  std::vector<GramReport> reports;
  FactorStatus status = FactorStatus::CertifiedOnSamples;
  /// The refuting Gram, with its points and witness vector.
  std::optional<GramReport> witness;
  int search_restarts_run = 0;
};

/// Certifies k / (t o phi) on escalating samples; Refuted as soon as a Gram is NotPSD.
FactorVerdict certify_factor(const Kernel& k, const Kernel& t, const SelfMap& phi, const EscalationPlan& plan = {});

/// PSD verdict of k / (r o psi o phi) on s. PreconditionError unless both
/// k/(t o phi) and t/(r o psi) are PSD on s.
bool transitivity_check(const Kernel& k, const Kernel& t, const Kernel& r, const SelfMap& phi,
                        const SelfMap& psi, const Sample& s);

struct CEstimate {
  double c_hat = 0.0;
  std::vector<std::vector<double>> traces;
  std::vector<double> tail_means;
};

/// Ratio k(x,x) / t(phi x, phi x) along each sequence; c_hat is the least
/// last-quarter mean.
CEstimate estimate_c(const Kernel& k, const Kernel& t, const SelfMap& phi,
                     const std::vector<std::vector<Point>>& seqs);

/// x -> k_xi(x) / t_lambda(phi(x)); DivisionError when the denominator is below 1e-14.
PointFn build_q_xi(const Kernel& k, const Kernel& t, const SelfMap& phi, const BoundaryPoint& xi,
                   const BoundaryPoint& lambda);

/// Boundary point of t matched by the sections along phi(seq). NoMatch above `tolerance`.
BoundaryPoint detect_lambda(const Kernel& t, const SelfMap& phi, const std::vector<Point>& seq,
                            double tolerance = 1e-4, double* residual = nullptr);

struct SequenceTrace {
  std::string spec;
  std::vector<Point> points;
  std::vector<double> ratio;
  double tail_mean = 0.0;
};

struct JCReport {
  std::string kernel;
  std::string t_kernel;
  std::string map;
  Point xi;
  Point lambda_hat;
  double lambda_residual = 0.0;
  double c_hat = 0.0;
  double q_norm_sq_lb = 0.0;
  double M_used = 0.0;
  double a_lambda_hat = 0.0;
  bool sandwich_ok = false;
  std::vector<SequenceTrace> sequences;
};

struct JCOptions {
  int N = 30;
  std::vector<SequenceSpec> sequences{{SeqKind::Radial, 0.0}, {SeqKind::Nontangential, 0.5}};
  EscalationPlan plan;
  double lambda_tolerance = 1e-4;
  int a_sample_size = 64;
};

/// The full pipeline. PreconditionError when the factor is refuted.
JCReport jc_report(const Kernel& k, const Kernel& t, const SelfMap& phi, const Point& xi_anchor,
                   const JCOptions& opt = {});

/// q <= c + 1e-6 and c <= (M a)^2 q + 1e-6.
bool sandwich_check(const JCReport& r);

struct InclusionPoint {
  Point x;
  double M = 0.0;
  double lhs = 0.0;  ///< e-level of phi(x) at lambda
  double rhs = 0.0;  ///< c times the e-level of x at xi
  bool holds = true;
  bool equality = false;
};

struct InclusionReport {
  std::vector<InclusionPoint> points;
  int checked = 0;
  int violations = 0;
  int equalities = 0;
};

/// For x in s and M in Ms with x in E(M, xi): phi(x) must lie in E(cM, lambda).
InclusionReport julia_inclusion_check(const Kernel& k, const SelfMap& phi, const BoundaryPoint& xi,
                                      const BoundaryPoint& lambda, double c, const std::vector<double>& Ms,
                                      const Sample& s, double rel_slack = 1e-9);

struct Trajectory {
  std::vector<Point> points;
  std::vector<double> diag;
  std::vector<double> e_level;
  std::vector<double> probe_residual;
  bool converged = false;
};

/// phi^n(x0) for n = 0..N, stopping once the probe residual to k_xi is below
/// `threshold`. PreconditionError if c >= 1 or a fixed point is met,
/// StalledError after 10 consecutive non-shrinking E-levels.
Trajectory iterate_to_boundary(const Kernel& k, const SelfMap& phi, const Point& x0, const BoundaryPoint& xi,
                               double c, int N, double threshold = 1e-6);

}  // namespace rkb
