#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rkb/kernel.hpp"
#include "rkb/sampling.hpp"

namespace rkb {

enum class Verdict { PSD, NotPSD, Borderline };
std::string to_string(Verdict v);

struct GramReport {
  std::string label;
  Eigen::MatrixXcd matrix;
  Eigen::VectorXd eigenvalues;  // ascending
  double min_eig = 0.0;
  double tol = 0.0;
  Verdict verdict = Verdict::PSD;
  /// Unit eigenvector of min_eig; present unless the verdict is PSD.
  std::optional<Eigen::VectorXcd> witness;
  std::vector<Point> points;

  int n() const { return static_cast<int>(matrix.rows()); }
};

/// Default tolerance 1e-9 * n * max |G_ii|.
double default_tol(const Eigen::MatrixXcd& g);
/// Roundoff floor 64 * eps * n * max |G_ii|; eigenvalues above -floor count as PSD.
double roundoff_floor(const Eigen::MatrixXcd& g);

Eigen::MatrixXcd gram_matrix(const Kernel& k, const Sample& s);
/// Eigen-analysis of (G + G*)/2. PSD when min_eig >= -floor, NotPSD below
/// -tol, Borderline in between.
GramReport analyze_gram(const Eigen::MatrixXcd& g, std::string label = {},
                        std::optional<double> tol = {});
GramReport gram(const Kernel& k, const Sample& s, std::optional<double> tol = {});

struct SampleNorm {
  double value_sq = 0.0;
  int sample_size = 0;
  /// Smallest retained eigenvalue of the Gram matrix.
  double conditioning = 0.0;
  int dropped = 0;
};

struct PinvOptions {
  /// Eigenvalues below rel_threshold * max_eig are dropped.
  double rel_threshold = 1e-10;
};

/// Eigen-thresholded f* G^+ f. IllConditioned when more than n/2 eigenvalues
/// above the roundoff floor are dropped.
SampleNorm sample_norm_sq(const Kernel& k, const PointFn& f, const Sample& s, PinvOptions opt = {});
SampleNorm sample_norm_sq(const Eigen::MatrixXcd& g, const Eigen::VectorXcd& f, PinvOptions opt = {});

/// Largest eigenvalue of A relative to G on the retained range of G.
double generalized_max_eig(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& g, PinvOptions opt = {});

double multiplier_norm_est(const Kernel& k, const PointFn& phi, const Sample& s, PinvOptions opt = {});
double comp_symbol_norm_est(const Kernel& k, const SelfMap& phi, const Sample& s, PinvOptions opt = {});

struct WeakLimit {
  /// table[n][p] = k(p, x_n)
  std::vector<std::vector<cplx>> table;
  std::vector<double> diagonal;
  /// per-step max over probes of |T[n][p] - T[last][p]| / (1 + |T[last][p]|)
  std::vector<double> residual_trace;
  /// max of residual_trace over the last quarter
  double residual = 0.0;
  bool converged = false;
  /// y -> k(y, x_last)
  PointFn limit;
};

WeakLimit weak_limit_probe(const Kernel& k, const std::vector<Point>& seq, const Sample& probes,
                           double threshold = 1e-6);

}  // namespace rkb
