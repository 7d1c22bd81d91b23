#include "rkb/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "rkb/errors.hpp"

namespace rkb {

namespace {

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                           79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139};

bool separated(const std::vector<Point>& pts, const Point& p) {
  return std::none_of(pts.begin(), pts.end(),
                      [&](const Point& q) { return distance(p, q) <= kMinSeparation; });
}

cplx polar(double r, double turn) { return std::polar(r, 2.0 * std::numbers::pi * turn); }

// Maps uniform coordinates u in [0,1)^m to a point of the domain.
Point from_unit_cube(const Domain& d, const std::vector<double>& u, double r_max) {
  switch (d.kind) {
    case DomainKind::UnitDisk:
      return Point(polar(r_max * std::sqrt(u[0]), u[1]));
    case DomainKind::Polydisk: {
      Point p;
      for (int j = 0; j < d.dim; ++j)
        p.coords.push_back(polar(r_max * std::sqrt(u[2 * j]), u[2 * j + 1]));
      return p;
    }
    case DomainKind::UnitBall: {
      Point p;
      double norm = 0.0;
      for (int j = 0; j < d.dim; ++j) {
        p.coords.push_back(polar(std::sqrt(u[2 * j] + 1e-3), u[2 * j + 1]));
        norm += std::norm(p.coords.back());
      }
      const double radius = r_max * std::pow(u[2 * d.dim], 1.0 / (2.0 * d.dim));
      return scaled(p, radius / std::sqrt(norm));
    }
    case DomainKind::HalfPlane:
      return Point(cplx(d.cut + 0.05 + 2.95 * u[0], -3.0 + 6.0 * u[1]));
    case DomainKind::Ray:
      return Point(0.1 + 9.9 * u[0]);
    case DomainKind::Naturals:
      break;
  }
  throw DomainError("no continuous sampler for " + d.name());
}

int cube_dim(const Domain& d) {
  if (d.kind == DomainKind::UnitBall) return 2 * d.dim + 1;
  if (d.kind == DomainKind::Polydisk) return 2 * d.dim;
  return 2;
}

Sample naturals_window(const Domain& d, int n, std::uint64_t seed) {
  Sample s{d, {}, seed};
  for (int i = 1; i <= n; ++i) s.points.emplace_back(static_cast<double>(i));
  return s;
}

template <class Draw>
Sample fill(const Domain& d, int n, std::uint64_t seed, double r_max, Draw draw) {
  if (n < 0) throw DomainError("sample size must be nonnegative");
  if (d.is_discrete()) return naturals_window(d, n, seed);
  Sample s{d, {}, seed};
  const int m = cube_dim(d);
  std::vector<double> u(static_cast<std::size_t>(m));
  for (int attempts = 0; static_cast<int>(s.points.size()) < n; ++attempts) {
    if (attempts > 100 * n + 100) throw DomainError("could not draw distinct sample points");
    for (int j = 0; j < m; ++j) u[static_cast<std::size_t>(j)] = draw(j);
    Point p = from_unit_cube(d, u, r_max);
    if (d.contains(p) && separated(s.points, p)) s.points.push_back(std::move(p));
  }
  return s;
}

}  // namespace

Sample make_sample(const Domain& d, std::vector<Point> points, std::uint64_t seed) {
  Sample s{d, {}, seed};
  for (auto& p : points) {
    d.require(p);
    if (!separated(s.points, p)) throw DomainError("sample point " + to_string(p) + " is a duplicate");
    s.points.push_back(std::move(p));
  }
  return s;
}

Sample merge(const Sample& a, const Sample& b) {
  Sample s = a;
  for (const auto& p : b.points)
    if (separated(s.points, p)) {
      a.domain.require(p);
      s.points.push_back(p);
    }
  return s;
}

Sample prefix(const Sample& s, std::size_t n) {
  Sample out{s.domain, {}, s.seed};
  out.points.assign(s.points.begin(), s.points.begin() + static_cast<std::ptrdiff_t>(std::min(n, s.size())));
  return out;
}

double halton(std::uint64_t index, int base) {
  double f = 1.0;
  double r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % static_cast<std::uint64_t>(base));
    index /= static_cast<std::uint64_t>(base);
  }
  return r;
}

Sample quasi_random_sample(const Domain& d, int n, std::uint64_t seed, double r_max) {
  std::uint64_t index = seed;
  std::vector<double> cache;
  int dim = 0;
  // Each call to draw(j) reads coordinate j of the current Halton vector.
  return fill(d, n, seed, r_max, [&](int j) {
    if (j == 0) {
      ++index;
      dim = cube_dim(d);
      cache.assign(static_cast<std::size_t>(dim), 0.0);
      for (int c = 0; c < dim; ++c) cache[static_cast<std::size_t>(c)] = halton(index, kPrimes[c]);
    }
    return cache[static_cast<std::size_t>(j)];
  });
}

Sample random_sample(const Domain& d, int n, std::uint64_t seed, double r_max) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  return fill(d, n, seed, r_max, [&](int) { return unif(rng); });
}

Sample grid_g16() {
  std::vector<Point> pts;
  for (double r : {0.2, 0.5, 0.8, 0.95})
    for (double turn : {0.0, 0.25, 0.5, 0.75}) pts.emplace_back(polar(r, turn));
  return make_sample(Domain::disk(), std::move(pts));
}

Sample probe_sample(const Domain& d) {
  std::vector<Point> pts;
  switch (d.kind) {
    case DomainKind::UnitDisk:
      pts = {cplx(0.0), cplx(0.3), cplx(-0.3), cplx(0, 0.3), cplx(0, -0.3), cplx(0.5, 0.2),
             cplx(-0.4, 0.4), cplx(0.1, -0.6)};
      break;
    case DomainKind::UnitBall:
    case DomainKind::Polydisk: {
      const cplx base[] = {cplx(0.0), cplx(0.3), cplx(-0.3), cplx(0, 0.3), cplx(0, -0.3), cplx(0.5, 0.2),
                           cplx(-0.4, 0.4), cplx(0.1, -0.6)};
      const double shrink = d.kind == DomainKind::UnitBall ? 1.0 / std::sqrt(static_cast<double>(d.dim)) : 1.0;
      for (int i = 0; i < 8; ++i) {
        Point p;
        for (int j = 0; j < d.dim; ++j) p.coords.push_back(shrink * base[(i + 3 * j) % 8]);
        pts.push_back(std::move(p));
      }
      break;
    }
    case DomainKind::HalfPlane:
      for (cplx s : {cplx(1.0), cplx(1.5), cplx(2.0), cplx(1, 1), cplx(1, -1), cplx(2, 2), cplx(0.8), cplx(3.0)})
        pts.emplace_back(s + (d.cut - 0.5));
      break;
    case DomainKind::Ray:
      for (double x : {0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0, 7.0}) pts.emplace_back(x);
      break;
    case DomainKind::Naturals:
      for (int i = 1; i <= 8; ++i) pts.emplace_back(static_cast<double>(i));
      break;
  }
  return make_sample(d, std::move(pts));
}

}  // namespace rkb

namespace rkb {

Sample horocycle_sample(cplx zeta, const std::vector<double>& levels, int n, std::uint64_t seed) {
  if (levels.empty()) throw DomainError("horocycle_sample needs at least one level");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Point> pts;
  const Domain d = Domain::disk();
  for (int i = 0; static_cast<int>(pts.size()) < n; ++i) {
    if (i > 100 * n + 100) throw DomainError("could not draw distinct horocycle points");
    const double M = levels[static_cast<std::size_t>(i) % levels.size()];
    const double L = M * (0.05 + 0.95 * unif(rng));
    const double theta = std::numbers::pi * (2.0 * unif(rng) - 1.0);
    const cplx z = zeta * (1.0 / (1.0 + L) + L / (1.0 + L) * std::polar(1.0, theta));
    const Point p(z);
    if (d.contains(p) && separated(pts, p)) pts.push_back(p);
  }
  return Sample{d, std::move(pts), seed};
}

}  // namespace rkb
