#include "rkb/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "rkb/errors.hpp"
#include "rkb/zeta.hpp"
#include "util.hpp"

namespace rkb::zoo {

namespace {

// -log(1 - u) / u, analytic continuation through u = 0.
cplx log_quotient(cplx u) {
  if (std::abs(u) < 0.5) {
    cplx sum = 0.0;
    cplx pow = 1.0;
    for (int n = 0; n < 200; ++n) {
      const cplx term = pow / static_cast<double>(n + 1);
      sum += term;
      if (std::abs(term) < 1e-18) break;
      pow *= u;
    }
    return sum;
  }
  return -std::log(1.0 - u) / u;
}

Point origin(int d) { return Point(std::vector<cplx>(static_cast<std::size_t>(d), 0.0)); }

double parse_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw ParseError("not a number: '" + s + "'");
  return v;
}

int parse_int(const std::string& s) {
  const double v = parse_real(s);
  if (v != std::floor(v)) throw ParseError("not an integer: '" + s + "'");
  return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

// Kernels --------------------------------------------------------------------

Kernel szego() {
  auto f = [](const Point& z, const Point& w) { return 1.0 / (1.0 - z.z() * std::conj(w.z())); };
  return Kernel(Domain::disk(), "szego", f, Point(0.0), f);
}

Kernel szego_pow(double alpha) {
  const Kernel base = power_kernel(szego(), alpha);
  auto f = [base](const Point& z, const Point& w) { return base.raw(z, w); };
  auto ext = [base](const Point& z, const Point& a) { return base.extension(z, a); };
  return Kernel(Domain::disk(), "szego_pow:" + detail::fmt_real(alpha), f, Point(0.0), ext);
}

Kernel dirichlet_log() {
  auto f = [](const Point& z, const Point& w) { return log_quotient(z.z() * std::conj(w.z())); };
  return Kernel(Domain::disk(), "dirichlet_log", f, Point(0.0), f);
}

Kernel min_ray() {
  auto f = [](const Point& x, const Point& y) { return cplx(std::min(x.z().real(), y.z().real())); };
  return Kernel(Domain::ray(), "min_ray", f, std::nullopt, f);
}

cplx db_rovnyak_eval(cplx z, cplx w) {
  const cplx bz = (z + 1.0) / 2.0;
  const cplx bw = (w + 1.0) / 2.0;
  const cplx num = 1.0 - bz * std::conj(bw);
  const cplx den = 1.0 - z * std::conj(w);
  // Both vanish as z, w -> 1 together; the ratio tends to 1/2.
  if (std::abs(den) == 0.0) return 0.5;
  return num / den;
}

Kernel dbr_half() {
  auto f = [](const Point& z, const Point& w) { return db_rovnyak_eval(z.z(), w.z()); };
  return Kernel(Domain::disk(), "dbr_half", f, std::nullopt, f);
}

Kernel zeta_halfplane() {
  auto f = [](const Point& z, const Point& w) { return zeta_eval(z.z() + std::conj(w.z())); };
  return Kernel(Domain::half_plane(0.5), "zeta_halfplane", f, std::nullopt, f);
}

Kernel drury_arveson(int d) {
  auto f = [](const Point& z, const Point& w) { return 1.0 / (1.0 - inner(z, w)); };
  return Kernel(Domain::ball(d), "drury_arveson:" + std::to_string(d), f, origin(d), f);
}

Kernel da_pow(int d, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("da_pow exponent must be positive");
  auto f = [alpha](const Point& z, const Point& w) { return principal_pow(1.0 - inner(z, w), -alpha); };
  return Kernel(Domain::ball(d), "da_pow:" + std::to_string(d) + ":" + detail::fmt_real(alpha), f,
                origin(d), f);
}

Kernel polydisk_hardy(int d) {
  auto f = [](const Point& z, const Point& w) {
    cplx v = 1.0;
    for (std::size_t j = 0; j < z.size(); ++j) v /= (1.0 - z[j] * std::conj(w[j]));
    return v;
  };
  return Kernel(Domain::polydisk(d), "polydisk_hardy:" + std::to_string(d), f, origin(d), f);
}

double nat_matrix_eval(long i, long j) { return i == j ? static_cast<double>(i) : 1.0; }

Kernel nat_matrix() {
  auto f = [](const Point& x, const Point& y) {
    const double a = x.z().real();
    const double b = y.z().real();
    if (std::isinf(a) || std::isinf(b)) return cplx(a == b ? a : 1.0);
    return cplx(nat_matrix_eval(std::lround(a), std::lround(b)));
  };
  return Kernel(Domain::naturals(), "nat_matrix", f, std::nullopt, f);
}

Kernel exp_of(const Kernel& k) {
  const Kernel e = exp_kernel(k);
  return Kernel(
      e.domain(), "exp_of:" + k.label(), [e](const Point& x, const Point& y) { return e.raw(x, y); },
      std::nullopt, [e](const Point& x, const Point& a) { return e.extension(x, a); });
}

// Maps -----------------------------------------------------------------------

SelfMap identity(const Domain& d) { return identity_map(d); }

SelfMap square() {
  return SelfMap(Domain::disk(), Domain::disk(), "square",
                 [](const Point& z) { return Point(z.z() * z.z()); });
}

SelfMap mobius(cplx a) {
  if (!(std::norm(a) < 1.0)) throw DomainError("mobius parameter must lie in the open disk");
  return SelfMap(Domain::disk(), Domain::disk(), "mobius:" + detail::fmt_cplx(a),
                 [a](const Point& z) { return Point((a - z.z()) / (1.0 - std::conj(a) * z.z())); });
}

SelfMap halfway() {
  return SelfMap(Domain::disk(), Domain::disk(), "halfway",
                 [](const Point& z) { return Point((1.0 + z.z()) / 2.0); });
}

cplx halfway_iterate(cplx z, int n) { return 1.0 - (1.0 - z) / std::ldexp(1.0, n); }

SelfMap hartz(double alpha, cplx zeta) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("hartz exponent must lie in (0, 1]");
  if (std::abs(std::abs(zeta) - 1.0) > 1e-12) throw DomainError("hartz anchor must be unimodular");
  return SelfMap(Domain::disk(), Domain::disk(),
                 "hartz:" + detail::fmt_real(alpha) + ":" + detail::fmt_cplx(zeta),
                 [alpha, zeta](const Point& z) {
                   return Point(1.0 - principal_pow(1.0 - z.z() * std::conj(zeta), alpha));
                 });
}

SelfMap ball_hartz(const Point& zeta, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("hartz exponent must lie in (0, 1]");
  if (std::abs(zeta.norm_sq() - 1.0) > 1e-12) throw DomainError("ball anchor must be a unit vector");
  const int d = static_cast<int>(zeta.size());
  return SelfMap(Domain::ball(d), Domain::disk(), "ball_hartz:" + detail::fmt_real(alpha),
                 [alpha, zeta](const Point& z) {
                   return Point(1.0 - principal_pow(1.0 - inner(z, zeta), alpha));
                 });
}

SelfMap coord_dup() {
  return SelfMap(Domain::polydisk(2), Domain::polydisk(2), "coord_dup",
                 [](const Point& z) { return Point{z[0], z[0]}; });
}

SelfMap polydisk_product(const std::vector<SelfMap>& factors, const std::vector<int>& sigma) {
  const int d = static_cast<int>(factors.size());
  if (d < 1 || static_cast<int>(sigma.size()) != d) throw DomainError("polydisk_product arity mismatch");
  std::vector<int> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  for (int j = 0; j < d; ++j)
    if (sorted[static_cast<std::size_t>(j)] != j) throw DomainError("sigma is not a permutation");
  std::string label = "polydisk_product:";
  for (int j = 0; j < d; ++j) label += (j ? ";" : "") + factors[static_cast<std::size_t>(j)].label();
  label += "|";
  for (int j = 0; j < d; ++j) label += (j ? "," : "") + std::to_string(sigma[static_cast<std::size_t>(j)]);
  return SelfMap(Domain::polydisk(d), Domain::polydisk(d), label, [factors, sigma](const Point& z) {
    std::vector<cplx> w(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) w[j] = factors[j](Point(z[j])).z();
    Point out;
    out.coords.resize(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) out[j] = w[static_cast<std::size_t>(sigma[j])];
    return out;
  });
}

SelfMap constant(const Point& value, const Domain& d) { return constant_map(d, d, value); }

// Label grammar --------------------------------------------------------------

cplx parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != ' ') s += c;
  if (s.empty()) throw ParseError("empty complex literal");
  if (s.back() != 'i') return cplx(parse_real(s), 0.0);
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split_at = std::string::npos;
  for (std::size_t p = body.size(); p-- > 1;) {
    if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
      split_at = p;
      break;
    }
  }
  auto imag_of = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t);
  };
  if (split_at == std::string::npos) return cplx(0.0, imag_of(body));
  return cplx(parse_real(body.substr(0, split_at)), imag_of(body.substr(split_at)));
}

Point parse_point(const std::string& text) {
  Point p;
  for (const auto& part : split(text, ',')) p.coords.push_back(parse_complex(part));
  return p;
}

Kernel kernel_from_label(const std::string& label) {
  const auto colon = label.find(':');
  const std::string head = label.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : label.substr(colon + 1);
  const auto args = split(rest, ':');
  auto need = [&](std::size_t n) {
    if (colon == std::string::npos || args.size() != n)
      throw ParseError("kernel '" + head + "' expects " + std::to_string(n) + " argument(s)");
  };
  if (head == "exp_of") {
    if (rest.empty()) throw ParseError("exp_of needs an inner kernel label");
    return exp_of(kernel_from_label(rest));
  }
  if (head == "szego" && colon == std::string::npos) return szego();
  if (head == "szego_pow") return need(1), szego_pow(parse_real(args[0]));
  if (head == "dirichlet_log" && colon == std::string::npos) return dirichlet_log();
  if (head == "min_ray" && colon == std::string::npos) return min_ray();
  if (head == "dbr_half" && colon == std::string::npos) return dbr_half();
  if (head == "zeta_halfplane" && colon == std::string::npos) return zeta_halfplane();
  if (head == "drury_arveson") return need(1), drury_arveson(parse_int(args[0]));
  if (head == "da_pow") return need(2), da_pow(parse_int(args[0]), parse_real(args[1]));
  if (head == "polydisk_hardy") return need(1), polydisk_hardy(parse_int(args[0]));
  if (head == "nat_matrix" && colon == std::string::npos) return nat_matrix();
  throw ParseError("unknown kernel label '" + label + "'");
}

SelfMap map_from_label(const std::string& label) {
  const auto colon = label.find(':');
  const std::string head = label.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : label.substr(colon + 1);
  if (head == "polydisk_product") {
    const auto bar = rest.find('|');
    std::vector<SelfMap> factors;
    for (const auto& m : split(rest.substr(0, bar), ';')) factors.push_back(map_from_label(m));
    std::vector<int> sigma;
    if (bar == std::string::npos) {
      for (int j = 0; j < static_cast<int>(factors.size()); ++j) sigma.push_back(j);
    } else {
      for (const auto& s : split(rest.substr(bar + 1), ',')) sigma.push_back(parse_int(s));
    }
    return polydisk_product(factors, sigma);
  }
  const auto args = split(rest, ':');
  auto need = [&](std::size_t n) {
    if (colon == std::string::npos || args.size() != n)
      throw ParseError("map '" + head + "' expects " + std::to_string(n) + " argument(s)");
  };
  if (head == "identity" && colon == std::string::npos) return identity();
  if (head == "square" && colon == std::string::npos) return square();
  if (head == "halfway" && colon == std::string::npos) return halfway();
  if (head == "coord_dup" && colon == std::string::npos) return coord_dup();
  if (head == "mobius") return need(1), mobius(parse_complex(args[0]));
  if (head == "hartz") return need(2), hartz(parse_real(args[0]), parse_complex(args[1]));
  if (head == "const") return need(1), constant(Point(parse_complex(args[0])));
  throw ParseError("unknown map label '" + label + "'");
}

std::vector<std::string> kernel_labels() {
  return {"szego",           "szego_pow:0.5",    "dirichlet_log", "min_ray",
          "dbr_half",        "zeta_halfplane",   "drury_arveson:3", "da_pow:3:0.5",
          "polydisk_hardy:2", "nat_matrix",      "exp_of:szego"};
}

std::vector<std::string> map_labels() {
  return {"identity", "square",    "mobius:0.5+0i", "halfway",
          "hartz:0.5:1+0i", "coord_dup", "polydisk_product:square;halfway|1,0"};
}

}  // namespace rkb::zoo
