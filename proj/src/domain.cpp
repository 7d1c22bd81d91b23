#include "rkb/domain.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "rkb/errors.hpp"

namespace rkb {

double Point::norm_sq() const {
  double s = 0.0;
  for (const auto& c : coords) s += std::norm(c);
  return s;
}

bool Point::at_infinity() const {
  for (const auto& c : coords)
    if (std::isinf(c.real())) return true;
  return false;
}

cplx inner(const Point& a, const Point& b) {
  cplx s = 0.0;
  for (std::size_t j = 0; j < a.size() && j < b.size(); ++j) s += a[j] * std::conj(b[j]);
  return s;
}

double distance(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size() && j < b.size(); ++j) s += std::norm(a[j] - b[j]);
  return std::sqrt(s);
}

Point scaled(const Point& p, cplx s) {
  Point out = p;
  for (auto& c : out.coords) c *= s;
  return out;
}

Point infinity_point() { return Point(std::numeric_limits<double>::infinity()); }

std::string to_string(const Point& p) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j) os << ", ";
    const cplx c = p[j];
    os << c.real();
    if (c.imag() != 0.0) os << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << 'i';
  }
  os << ')';
  return os.str();
}

Domain Domain::ball(int d) {
  if (d < 1) throw DomainError("ball dimension must be positive");
  return {DomainKind::UnitBall, d};
}

Domain Domain::polydisk(int d) {
  if (d < 1) throw DomainError("polydisk dimension must be positive");
  return {DomainKind::Polydisk, d};
}

Domain Domain::half_plane(double cut) {
  Domain d{DomainKind::HalfPlane, 1};
  d.cut = cut;
  return d;
}

bool Domain::contains(const Point& p) const {
  if (static_cast<int>(p.size()) != dim) return false;
  for (const auto& c : p.coords)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  switch (kind) {
    case DomainKind::UnitDisk:
    case DomainKind::UnitBall:
      return p.norm_sq() < 1.0;
    case DomainKind::Polydisk:
      for (const auto& c : p.coords)
        if (std::norm(c) >= 1.0) return false;
      return true;
    case DomainKind::HalfPlane:
      return p.z().real() > cut;
    case DomainKind::Ray:
      return std::abs(p.z().imag()) <= tolerance && p.z().real() >= 0.0;
    case DomainKind::Naturals: {
      const double x = p.z().real();
      return std::abs(p.z().imag()) <= tolerance && x >= 1.0 - tolerance &&
             std::abs(x - std::round(x)) <= tolerance;
    }
  }
  return false;
}

void Domain::require(const Point& p) const {
  if (!contains(p)) throw DomainError("point " + to_string(p) + " is not in " + name());
}

bool Domain::same_set(const Domain& other) const {
  auto disk_like = [](const Domain& d) {
    return d.kind == DomainKind::UnitDisk || (d.kind == DomainKind::UnitBall && d.dim == 1) ||
           (d.kind == DomainKind::Polydisk && d.dim == 1);
  };
  if (disk_like(*this) && disk_like(other)) return true;
  if (kind != other.kind || dim != other.dim) return false;
  if (kind == DomainKind::HalfPlane) return cut == other.cut;
  return true;
}

std::string Domain::name() const {
  switch (kind) {
    case DomainKind::UnitDisk:
      return "disk";
    case DomainKind::UnitBall:
      return "ball(" + std::to_string(dim) + ")";
    case DomainKind::Polydisk:
      return "polydisk(" + std::to_string(dim) + ")";
    case DomainKind::HalfPlane: {
      std::ostringstream os;
      os << "halfplane(Re>" << cut << ")";
      return os.str();
    }
    case DomainKind::Ray:
      return "ray";
    case DomainKind::Naturals:
      return "naturals";
  }
  return "?";
}

}  // namespace rkb
