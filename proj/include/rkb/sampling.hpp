#pragma once

#include <cstdint>
#include <vector>

#include "rkb/domain.hpp"

namespace rkb {

/// Ordered, pairwise-distinct points of one domain.
struct Sample {
  Domain domain;
  std::vector<Point> points;
  std::uint64_t seed = 0;

  std::size_t size() const { return points.size(); }
  const Point& operator[](std::size_t i) const { return points[i]; }
};

/// Minimum pairwise distance allowed inside a Sample.
inline constexpr double kMinSeparation = 1e-10;

/// Validates membership and separation; DomainError otherwise.
Sample make_sample(const Domain& d, std::vector<Point> points, std::uint64_t seed = 0);

/// Union keeping the order of `a` then the new points of `b`.
Sample merge(const Sample& a, const Sample& b);
/// First `n` points of `s`.
Sample prefix(const Sample& s, std::size_t n);

/// Radical-inverse of `index` in `base`.
double halton(std::uint64_t index, int base);

/// Low-discrepancy sample. Disk: Halton(2,3) from index seed+1, r = r_max sqrt(u),
/// theta = 2 pi v. Naturals: {1..n}.
Sample quasi_random_sample(const Domain& d, int n, std::uint64_t seed = 0, double r_max = 0.9);
/// mt19937_64 sample with the same radial law.
Sample random_sample(const Domain& d, int n, std::uint64_t seed, double r_max = 0.95);

/// Radii {0.2, 0.5, 0.8, 0.95} x angles {0, pi/2, pi, 3 pi/2}.
Sample grid_g16();

/// Eight fixed interior points per domain.
Sample probe_sample(const Domain& d);

}  // namespace rkb

namespace rkb {

/// Disk points inside the horocycles |zeta - z|^2 = L (1 - |z|^2): point i sits
/// on the horocycle of level L = M_i (0.05 + 0.95 u) with M_i cycling through
/// `levels`, at a uniformly drawn angle.
Sample horocycle_sample(cplx zeta, const std::vector<double>& levels, int n, std::uint64_t seed);

}  // namespace rkb
