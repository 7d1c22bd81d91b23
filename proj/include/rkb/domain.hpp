#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace rkb {

using cplx = std::complex<double>;

/// A coordinate tuple. Real domains (ray, naturals) store their value in the
/// real part of a single coordinate.
struct Point {
  std::vector<cplx> coords;

  Point() = default;
  Point(cplx z) : coords{z} {}  // NOLINT(google-explicit-constructor)
  Point(double x) : coords{cplx(x, 0.0)} {}  // NOLINT(google-explicit-constructor)
  Point(std::initializer_list<cplx> zs) : coords(zs) {}
  explicit Point(std::vector<cplx> zs) : coords(std::move(zs)) {}

  std::size_t size() const { return coords.size(); }
  const cplx& operator[](std::size_t i) const { return coords[i]; }
  cplx& operator[](std::size_t i) { return coords[i]; }

  /// First coordinate; the whole point for one-dimensional domains.
  cplx z() const { return coords.front(); }

  double norm_sq() const;
  bool at_infinity() const;

  friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
};

/// Hermitian inner product sum_j a_j conj(b_j).
cplx inner(const Point& a, const Point& b);
double distance(const Point& a, const Point& b);
Point scaled(const Point& p, cplx s);

/// The formal point at infinity used as the anchor of the ray and the naturals.
Point infinity_point();

std::string to_string(const Point& p);

enum class DomainKind { UnitDisk, UnitBall, Polydisk, HalfPlane, Ray, Naturals };

struct Domain {
  DomainKind kind = DomainKind::UnitDisk;
  int dim = 1;
  double cut = 0.5;
  double tolerance = 1e-12;

  static Domain disk() { return {DomainKind::UnitDisk, 1}; }
  static Domain ball(int d);
  static Domain polydisk(int d);
  static Domain half_plane(double cut = 0.5);
  static Domain ray() { return {DomainKind::Ray, 1}; }
  static Domain naturals() { return {DomainKind::Naturals, 1}; }

  bool contains(const Point& p) const;
  /// Throws DomainError when `p` is not a member.
  void require(const Point& p) const;

  /// True when both describe the same underlying set (the disk is the 1-ball).
  bool same_set(const Domain& other) const;
  bool is_discrete() const { return kind == DomainKind::Naturals; }
  bool is_complex() const { return kind != DomainKind::Ray && kind != DomainKind::Naturals; }

  std::string name() const;
};

}  // namespace rkb
