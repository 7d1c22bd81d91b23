#include "rkb/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "optimize.hpp"
#include "rkb/errors.hpp"
#include "rkb/zoo.hpp"
#include "util.hpp"

namespace rkb {

namespace {

constexpr double kAnchorTol = 1e-9;

double max_abs_coord(const Point& p) {
  double m = 0.0;
  for (const auto& c : p.coords) m = std::max(m, std::abs(c));
  return m;
}

void require_dim(const Domain& d, const Point& anchor) {
  if (static_cast<int>(anchor.size()) != d.dim)
    throw DomainError("anchor " + to_string(anchor) + " has the wrong dimension for " + d.name());
}

bool bounded(const Domain& d) {
  return d.kind == DomainKind::UnitDisk || d.kind == DomainKind::UnitBall || d.kind == DomainKind::Polydisk;
}

// Scalar path w -> w * anchor for the bounded domains.
Point along_anchor(const Point& anchor, cplx w) { return scaled(anchor, w); }

std::size_t quarter_start(std::size_t n) { return n - std::max<std::size_t>(1, n / 4); }

}  // namespace

PointFn BoundaryPoint::limit_fn() const {
  return [k = kernel, a = anchor](const Point& x) { return k.extension(x, a); };
}

std::vector<Point> BoundaryPoint::canonical(int n) const {
  if (n > max_index)
    throw DomainError(label + ": generator is limited to " + std::to_string(max_index) + " terms");
  std::vector<Point> out;
  for (int i = 1; i <= n; ++i) out.push_back(generator(i));
  return out;
}

BoundaryPoint boundary_point(const Kernel& k, const Point& anchor) {
  if (!k.has_extension()) throw DomainError(k.label() + " has no boundary continuation");
  const Domain& d = k.domain();
  BoundaryPoint b{k, anchor, {}, 0, k.label() + "@" + to_string(anchor)};
  switch (d.kind) {
    case DomainKind::UnitDisk:
    case DomainKind::UnitBall:
      require_dim(d, anchor);
      if (std::abs(std::sqrt(anchor.norm_sq()) - 1.0) > kAnchorTol)
        throw DomainError("anchor " + to_string(anchor) + " is not on the unit sphere");
      b.generator = [anchor](int n) { return along_anchor(anchor, 1.0 - std::ldexp(1.0, -n)); };
      b.max_index = 45;
      break;
    case DomainKind::Polydisk:
      require_dim(d, anchor);
      if (std::abs(max_abs_coord(anchor) - 1.0) > kAnchorTol)
        throw DomainError("anchor " + to_string(anchor) + " is not on the polydisk boundary");
      b.generator = [anchor](int n) { return along_anchor(anchor, 1.0 - std::ldexp(1.0, -n)); };
      b.max_index = 45;
      break;
    case DomainKind::HalfPlane:
      require_dim(d, anchor);
      if (std::abs(anchor.z().real() - d.cut) > kAnchorTol)
        throw DomainError("anchor " + to_string(anchor) + " is not on Re s = " + detail::fmt_real(d.cut));
      b.generator = [anchor](int n) { return Point(anchor.z() + std::ldexp(1.0, -n)); };
      b.max_index = 20;
      break;
    case DomainKind::Ray:
      if (!anchor.at_infinity()) throw DomainError("the ray's boundary anchor is the point at infinity");
      b.generator = [](int n) { return Point(std::ldexp(1.0, n)); };
      b.max_index = 60;
      break;
    case DomainKind::Naturals:
      if (!anchor.at_infinity()) throw DomainError("the naturals' boundary anchor is the point at infinity");
      b.generator = [](int n) { return Point(static_cast<double>(n)); };
      b.max_index = std::numeric_limits<int>::max();
      break;
  }
  return b;
}

double gamma_level(const BoundaryPoint& xi, const Point& x) {
  return xi.kernel.diag(x) / std::abs(xi.limit(x));
}

double e_level(const BoundaryPoint& xi, const Point& x) {
  return xi.kernel.diag(x) / std::norm(xi.limit(x));
}

bool gamma_member(const BoundaryPoint& xi, double M, const Point& x) {
  return xi.kernel.diag(x) <= M * std::abs(xi.limit(x)) + 1e-12;
}

bool e_member(const BoundaryPoint& xi, double M, const Point& x) {
  return xi.kernel.diag(x) <= M * std::norm(xi.limit(x)) + 1e-12;
}

bool ApproachRegion::contains(const Point& x) const {
  return kind == RegionKind::Gamma ? gamma_member(xi, M, x) : e_member(xi, M, x);
}

std::string to_string(const SequenceSpec& s) {
  switch (s.kind) {
    case SeqKind::Radial:
      return "radial";
    case SeqKind::Nontangential:
      return "nontangential:" + detail::fmt_real(s.param);
    case SeqKind::Horocyclic:
      return "horocyclic:" + detail::fmt_real(s.param);
    case SeqKind::Tangential:
      return "tangential:" + detail::fmt_real(s.param);
  }
  return "?";
}

double probe_residual(const BoundaryPoint& xi, const Point& x, const Sample& probes) {
  double r = 0.0;
  for (const auto& p : probes.points) {
    const cplx target = xi.limit(p);
    r = std::max(r, std::abs(xi.kernel(p, x) - target) / (1.0 + std::abs(target)));
  }
  return r;
}

std::vector<Point> make_sequence(const SequenceSpec& spec, const BoundaryPoint& xi, int N) {
  if (N < 1) throw DomainError("sequence length must be positive");
  const Domain& d = xi.kernel.domain();
  const Point& anchor = xi.anchor;
  std::vector<Point> seq;
  auto unsupported = [&] {
    return DomainError(to_string(spec) + " sequences are not defined on " + d.name());
  };

  if (d.kind == DomainKind::Ray || d.kind == DomainKind::Naturals) {
    if (spec.kind != SeqKind::Radial) throw unsupported();
    for (int n = 1; n <= N; ++n) seq.emplace_back(static_cast<double>(n));
  } else if (d.kind == DomainKind::HalfPlane) {
    if (N > xi.max_index) throw DomainError("half-plane sequences are limited to 20 terms");
    for (int n = 1; n <= N; ++n) {
      const double eps = std::ldexp(1.0, -n);
      if (spec.kind == SeqKind::Radial)
        seq.emplace_back(anchor.z() + eps);
      else if (spec.kind == SeqKind::Nontangential)
        seq.emplace_back(anchor.z() + eps * cplx(1.0, std::tan(spec.param)));
      else
        throw unsupported();
    }
  } else {
    for (int n = 1; n <= N; ++n) {
      const double eps = std::ldexp(1.0, -n);
      cplx w;
      switch (spec.kind) {
        case SeqKind::Radial:
          w = 1.0 - eps;
          break;
        case SeqKind::Nontangential:
          w = 1.0 - eps * cplx(1.0, std::tan(spec.param));
          if (std::abs(w) >= 1.0) w *= (1.0 - eps) / std::abs(w);
          break;
        case SeqKind::Horocyclic: {
          if (!(spec.param > 0.0)) throw NotApproaching("horocyclic level must be positive");
          // just inside the horocycle so roundoff in 1 - |z|^2 cannot push the tail out
          const double M = spec.param * (1.0 - 1e-3);
          w = 1.0 / (1.0 + M) + M / (1.0 + M) * std::polar(1.0, std::numbers::pi * std::sqrt(eps));
          break;
        }
        case SeqKind::Tangential: {
          const double beta = spec.param;
          if (!(beta > 0.0)) throw NotApproaching("tangential exponent must be positive");
          w = (1.0 - std::pow(static_cast<double>(n), -1.0 / beta)) * std::polar(1.0, 1.0 / n);
          break;
        }
      }
      Point x = along_anchor(anchor, w);
      if (!d.contains(x)) throw NotApproaching(to_string(spec) + " left the domain at n = " + std::to_string(n));
      seq.push_back(std::move(x));
    }
  }

  const Sample probes = probe_sample(d);
  const double first = probe_residual(xi, seq.front(), probes);
  const double last = probe_residual(xi, seq.back(), probes);
  if (seq.size() >= 2 && !(last < first || first < 1e-12))
    throw NotApproaching(to_string(spec) + ": probe residuals do not decrease toward " + xi.label);
  if (spec.kind == SeqKind::Horocyclic) {
    const double M = spec.param * (1.0 + 1e-9);
    for (std::size_t i = seq.size() / 2; i < seq.size(); ++i)
      if (!e_member(xi, M, seq[i]))
        throw NotApproaching("horocyclic tail leaves E(" + detail::fmt_real(spec.param) + ")");
  }
  return seq;
}

std::string to_string(TrichotomyVerdict v) {
  switch (v) {
    case TrichotomyVerdict::InteriorPointMatch:
      return "InteriorPointMatch";
    case TrichotomyVerdict::InteriorFunction:
      return "InteriorFunction";
    case TrichotomyVerdict::Boundary:
      return "Boundary";
  }
  return "?";
}

std::vector<Sample> default_nested_samples(const Kernel& k, const std::vector<Point>& seq, int count) {
  const Sample probes = probe_sample(k.domain());
  std::vector<Sample> out;
  Sample cur = probes;
  for (int m = 0; m < count && m < static_cast<int>(seq.size()); ++m) {
    cur = merge(cur, make_sample(k.domain(), {seq[static_cast<std::size_t>(m)]}));
    out.push_back(cur);
  }
  return out;
}

namespace {

bool search_admissible(const Domain& d, const Point& x, double margin) {
  if (!d.contains(x)) return false;
  switch (d.kind) {
    case DomainKind::UnitDisk:
    case DomainKind::UnitBall:
      return std::sqrt(x.norm_sq()) <= 1.0 - margin;
    case DomainKind::Polydisk:
      return max_abs_coord(x) <= 1.0 - margin;
    case DomainKind::HalfPlane:
      return x.z().real() >= d.cut + margin && std::abs(x.z()) <= 1.0 / margin;
    case DomainKind::Ray:
      return x.z().real() <= 1.0 / margin;
    case DomainKind::Naturals:
      return true;
  }
  return false;
}

std::vector<double> to_params(const Domain& d, const Point& x) {
  std::vector<double> v;
  for (const auto& c : x.coords) {
    v.push_back(c.real());
    if (d.is_complex()) v.push_back(c.imag());
  }
  return v;
}

Point from_params(const Domain& d, const std::vector<double>& v) {
  Point x;
  if (!d.is_complex()) return Point(v[0]);
  for (std::size_t j = 0; j + 1 < v.size(); j += 2) x.coords.emplace_back(v[j], v[j + 1]);
  return x;
}

}  // namespace

Trichotomy classify_limit(const Kernel& k, const std::vector<Point>& seq, const std::vector<Sample>& nested,
                          const ClassifyOptions& opt) {
  if (seq.size() < 2) throw InconclusiveError("classify_limit needs at least two sequence points");
  const Domain& d = k.domain();
  const Point x_last = seq.back();
  auto L = [&](const Point& p) { return k(p, x_last); };

  Trichotomy out;
  const Sample probes = probe_sample(d);
  for (const auto& p : probes.points) out.limit_on_probes.push_back(L(p));

  for (const auto& s : nested) {
    try {
      out.evidence.push_back(sample_norm_sq(k, L, s).value_sq);
    } catch (const IllConditioned&) {
      break;
    }
  }
  const std::size_t n = out.evidence.size();
  if (n < 4) throw InconclusiveError("too few well-conditioned nested samples to classify the limit");

  const std::size_t q0 = quarter_start(n) - 1;
  bool growing = out.evidence.back() > opt.divergence_threshold;
  double prev_inc = 0.0;
  double max_rel_inc = 0.0;
  for (std::size_t i = q0 + 1; i < n; ++i) {
    const double inc = out.evidence[i] - out.evidence[i - 1];
    if (inc <= 0.0 || inc < prev_inc) growing = false;
    prev_inc = inc;
    max_rel_inc = std::max(max_rel_inc, std::abs(inc) / std::max(std::abs(out.evidence[i]), 1e-300));
  }
  if (growing) {
    out.verdict = TrichotomyVerdict::Boundary;
    return out;
  }
  if (!(max_rel_inc < opt.stabilization))
    throw InconclusiveError("sample norms neither diverge nor stabilise (last relative increment " +
                            detail::fmt_real(max_rel_inc) + ")");
  out.verdict = TrichotomyVerdict::InteriorFunction;

  auto residual = [&](const Point& x) {
    double r = 0.0;
    for (std::size_t i = 0; i < probes.size(); ++i) {
      const cplx target = out.limit_on_probes[i];
      r = std::max(r, std::abs(k(probes[i], x) - target) / (1.0 + std::abs(target)));
    }
    return r;
  };

  double best = std::numeric_limits<double>::infinity();
  std::optional<Point> best_x;
  if (d.is_discrete()) {
    for (int i = 1; i <= 1000; ++i) {
      const double r = residual(Point(static_cast<double>(i)));
      if (r < best) {
        best = r;
        best_x = Point(static_cast<double>(i));
      }
      if (best < opt.match_tolerance) break;
    }
  } else {
    auto objective = [&](const std::vector<double>& v) {
      const Point x = from_params(d, v);
      if (!search_admissible(d, x, opt.search_margin)) return 1e300;
      return residual(x);
    };
    std::vector<Point> starts = probes.points;
    for (const auto& x : seq)
      if (search_admissible(d, x, opt.search_margin)) starts.push_back(x);
    for (const auto& s : starts) {
      const auto m = detail::nelder_mead(objective, to_params(d, s), 0.05, 1500, 1e-16);
      if (m.value < best) {
        best = m.value;
        best_x = from_params(d, m.x);
      }
      if (best < opt.match_tolerance) break;
    }
  }
  out.match_residual = best;
  if (best < opt.match_tolerance) {
    out.verdict = TrichotomyVerdict::InteriorPointMatch;
    out.match = best_x;
  }
  return out;
}

GrowthTrace growth_restriction_check(const Kernel& k, const PointFn& f, const std::vector<Point>& seq) {
  GrowthTrace out;
  for (const auto& x : seq) out.values.push_back(f(x) / std::sqrt(k.diag(x)));
  if (out.values.empty()) return out;
  bool monotone = true;
  for (std::size_t i = quarter_start(out.values.size()); i < out.values.size(); ++i)
    if (i > 0 && std::abs(out.values[i]) > std::abs(out.values[i - 1])) monotone = false;
  out.passed = monotone && std::abs(out.values.back()) < 1e-3;
  return out;
}

std::optional<Point> match_anchor(const Kernel& t, const std::vector<Point>& seq, double tolerance,
                                  double* residual) {
  if (seq.empty() || !t.has_extension()) return std::nullopt;
  const Domain& d = t.domain();
  const Point& y = seq.back();
  const Sample probes = probe_sample(d);
  auto fit = [&](const Point& anchor) {
    double r = 0.0;
    for (const auto& p : probes.points) {
      const cplx target = t.extension(p, anchor);
      r = std::max(r, std::abs(t(p, y) - target) / (1.0 + std::abs(target)));
    }
    return r;
  };
  Point anchor;
  switch (d.kind) {
    case DomainKind::UnitDisk: {
      const double theta0 = std::arg(y.z());
      const double theta =
          detail::golden_section([&](double th) { return fit(Point(std::polar(1.0, th))); }, theta0 - 0.25,
                                 theta0 + 0.25, 1e-13);
      anchor = Point(std::polar(1.0, theta));
      if (fit(Point(std::polar(1.0, theta0))) < fit(anchor)) anchor = Point(std::polar(1.0, theta0));
      break;
    }
    case DomainKind::UnitBall:
      anchor = scaled(y, 1.0 / std::sqrt(y.norm_sq()));
      break;
    case DomainKind::Polydisk:
      anchor = scaled(y, 1.0 / max_abs_coord(y));
      break;
    case DomainKind::HalfPlane:
      anchor = Point(cplx(d.cut, y.z().imag()));
      break;
    case DomainKind::Ray:
    case DomainKind::Naturals:
      anchor = infinity_point();
      break;
  }
  const double r = fit(anchor);
  if (residual) *residual = r;
  if (r <= tolerance) return anchor;
  return std::nullopt;
}

RegularityReport regularity_check(const Kernel& t, const BoundaryPoint& lambda, const Sample& s,
                                  const std::vector<std::vector<Point>>& seqs) {
  RegularityReport rep;
  rep.b_hat = std::numeric_limits<double>::infinity();
  for (const auto& y : s.points) rep.a_hat = std::max(rep.a_hat, std::abs(lambda.limit(y)) / t.diag(y));
  for (const auto& x : s.points)
    for (const auto& y : s.points) rep.b_hat = std::min(rep.b_hat, std::abs(t(x, y)));

  const Sample probes = probe_sample(t.domain());
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    const auto& seq = seqs[i];
    SequenceRegularity r;
    r.label = "seq" + std::to_string(i);
    if (seq.empty()) {
      rep.sequences.push_back(r);
      continue;
    }
    const Point& y = seq.back();
    r.boundary_divergent = std::abs(lambda.limit(y)) > 1e6;
    r.diagonal_divergent = t.diag(y) > 1e6;
    if (r.boundary_divergent) {
      r.residual = probe_residual(lambda, y, probes);
      r.converges_to_lambda = weak_limit_probe(t, seq, probes).converged && r.residual < 1e-6;
    }
    if (r.diagonal_divergent) r.matched_anchor = match_anchor(t, seq, 1e-3, &r.anchor_residual);
    rep.sequences.push_back(std::move(r));
  }
  return rep;
}

ParsedSequence parse_sequence(const std::string& text) {
  const auto at = text.find('@');
  if (at == std::string::npos) throw ParseError("sequence spec needs '@<anchor>': '" + text + "'");
  const std::string head = text.substr(0, at);
  ParsedSequence out{{}, zoo::parse_point(text.substr(at + 1))};
  const auto colon = head.find(':');
  const std::string kind = head.substr(0, colon);
  auto param = [&] {
    if (colon == std::string::npos) throw ParseError("sequence kind '" + kind + "' needs a parameter");
    try {
      return std::stod(head.substr(colon + 1));
    } catch (const std::exception&) {
      throw ParseError("bad sequence parameter in '" + text + "'");
    }
  };
  if (kind == "radial") {
    out.spec = {SeqKind::Radial, 0.0};
  } else if (kind == "nontangential") {
    out.spec = {SeqKind::Nontangential, param()};
  } else if (kind == "horocyclic") {
    out.spec = {SeqKind::Horocyclic, param()};
  } else if (kind == "tangential") {
    out.spec = {SeqKind::Tangential, param()};
  } else {
    throw ParseError("unknown sequence kind '" + kind + "'");
  }
  return out;
}

ParsedRegion parse_region(const std::string& text) {
  const auto at = text.find('@');
  const auto colon = text.find(':');
  if (at == std::string::npos || colon == std::string::npos || colon > at)
    throw ParseError("region spec must look like gamma:M=2@1+0i, got '" + text + "'");
  const std::string kind = text.substr(0, colon);
  const std::string arg = text.substr(colon + 1, at - colon - 1);
  if (arg.rfind("M=", 0) != 0) throw ParseError("region parameter must be M=<value>");
  ParsedRegion out{RegionKind::Gamma, 0.0, zoo::parse_point(text.substr(at + 1))};
  if (kind == "gamma")
    out.kind = RegionKind::Gamma;
  else if (kind == "e" || kind == "E")
    out.kind = RegionKind::E;
  else
    throw ParseError("unknown region kind '" + kind + "'");
  try {
    out.M = std::stod(arg.substr(2));
  } catch (const std::exception&) {
    throw ParseError("bad region level '" + arg + "'");
  }
  return out;
}

}  // namespace rkb
