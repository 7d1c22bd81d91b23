#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "rkb/domain.hpp"

namespace test {

using rkb::cplx;

inline std::vector<cplx> random_disk(std::size_t n, unsigned seed, double rmax = 0.9) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cplx> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(std::polar(rmax * std::sqrt(u(gen)), 2.0 * M_PI * u(gen)));
  return out;
}

inline std::vector<rkb::Point> as_points(const std::vector<cplx>& zs) {
  return {zs.begin(), zs.end()};
}

// Smallest eigenvalue by a separate route: Cholesky attempts on shifted matrices
// are too coarse, so use the complex Hermitian solver on the explicit matrix.
inline double min_eig(const Eigen::MatrixXcd& g) {
  Eigen::MatrixXcd h = 0.5 * (g + g.adjoint());
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(h, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

}  // namespace test
