#include "rkb/julia.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "rkb/errors.hpp"
#include "util.hpp"

namespace rkb {

namespace {

// min_eig in units of the report tolerance; below -1 means NotPSD.
double score(const GramReport& r) { return r.tol > 0.0 ? r.min_eig / r.tol : r.min_eig; }

Sample fixed_sample(const Domain& d) {
  if (d.kind == DomainKind::UnitDisk) return grid_g16();
  return probe_sample(d);
}

Point perturb(const Domain& d, const Point& p, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  if (d.kind == DomainKind::Naturals) {
    const double step = gauss(rng) < 0.0 ? -1.0 : 1.0;
    return Point(std::max(1.0, p.z().real() + step));
  }
  Point q = p;
  const double scale = d.kind == DomainKind::Ray || d.kind == DomainKind::HalfPlane
                           ? 0.1
                           : 0.1 * std::max(1e-3, 1.0 - std::sqrt(p.norm_sq()));
  for (auto& c : q.coords) {
    c += scale * cplx(gauss(rng), d.is_complex() ? gauss(rng) : 0.0);
  }
  return q;
}

Sample random_witness_sample(const Domain& d, int n, std::uint64_t seed) {
  if (d.kind != DomainKind::Naturals) return random_sample(d, n, seed, 0.98);
  std::mt19937_64 rng(seed);
  std::vector<int> idx(64);
  for (int i = 0; i < 64; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.emplace_back(static_cast<double>(idx[static_cast<std::size_t>(i)]));
  return make_sample(d, std::move(pts), seed);
}

Point origin_of(const Domain& d) {
  return Point(std::vector<cplx>(static_cast<std::size_t>(d.dim), 0.0));
}

std::vector<Point> generator_points(const BoundaryPoint& b, int lo, int hi) {
  std::vector<Point> out;
  for (int n = std::max(1, lo); n <= std::min(hi, b.max_index); ++n) out.push_back(b.generator(n));
  return out;
}

}  // namespace

std::string to_string(FactorStatus s) {
  return s == FactorStatus::CertifiedOnSamples ? "CertifiedOnSamples" : "Refuted";
}

FactorVerdict certify_factor(const Kernel& k, const Kernel& t, const SelfMap& phi, const EscalationPlan& plan) {
  const Kernel q = quotient_kernel(k, compose_kernel(t, phi));
  FactorVerdict out{q, {}, FactorStatus::CertifiedOnSamples, std::nullopt, 0};
  const Domain& d = q.domain();

  std::vector<std::pair<std::string, Sample>> samples;
  for (int n : plan.sizes)
    samples.emplace_back("quasi_random:" + std::to_string(n), quasi_random_sample(d, n, plan.seed));
  if (plan.fixed_samples)
    samples.emplace_back(d.kind == DomainKind::UnitDisk ? "grid_g16" : "probes", fixed_sample(d));

  bool near_zero = false;
  for (auto& [name, s] : samples) {
    GramReport r = gram(q, s, plan.tol);
    r.label = q.label() + " on " + name;
    if (r.min_eig < r.tol) near_zero = true;
    if (r.verdict == Verdict::NotPSD && (!out.witness || score(r) < score(*out.witness))) out.witness = r;
    out.reports.push_back(std::move(r));
  }

  if (!out.witness && near_zero) {
    std::mt19937_64 rng(plan.seed ^ 0x9e3779b97f4a7c15ULL);
    for (int restart = 0; restart < plan.restarts && !out.witness; ++restart) {
      ++out.search_restarts_run;
      Sample s = random_witness_sample(d, plan.witness_size, plan.seed * 1000003ULL + restart + 1);
      GramReport best = gram(q, s, plan.tol);
      for (int step = 0; step < plan.climb_steps && best.verdict != Verdict::NotPSD; ++step) {
        std::uniform_int_distribution<std::size_t> pick(0, s.size() - 1);
        const std::size_t i = pick(rng);
        std::vector<Point> pts = s.points;
        pts[i] = perturb(d, pts[i], rng);
        Sample cand;
        try {
          cand = make_sample(d, std::move(pts), s.seed);
        } catch (const DomainError&) {
          continue;
        }
        GramReport r = gram(q, cand, plan.tol);
        if (score(r) < score(best)) {
          best = std::move(r);
          s = std::move(cand);
        }
      }
      if (best.verdict == Verdict::NotPSD) {
        best.label = q.label() + " on witness search restart " + std::to_string(restart);
        out.witness = best;
        out.reports.push_back(std::move(best));
      }
    }
  }
  if (out.witness) out.status = FactorStatus::Refuted;
  return out;
}

bool transitivity_check(const Kernel& k, const Kernel& t, const Kernel& r, const SelfMap& phi,
                        const SelfMap& psi, const Sample& s) {
  if (gram(quotient_kernel(k, compose_kernel(t, phi)), s).verdict == Verdict::NotPSD)
    throw PreconditionError(phi.label() + " is refuted as a factor of (" + k.label() + ", " + t.label() + ")");
  if (gram(quotient_kernel(t, compose_kernel(r, psi)), s).verdict == Verdict::NotPSD)
    throw PreconditionError(psi.label() + " is refuted as a factor of (" + t.label() + ", " + r.label() + ")");
  const Kernel q = quotient_kernel(k, compose_kernel(r, compose_maps(psi, phi)));
  return gram(q, s).verdict != Verdict::NotPSD;
}

CEstimate estimate_c(const Kernel& k, const Kernel& t, const SelfMap& phi,
                     const std::vector<std::vector<Point>>& seqs) {
  if (seqs.empty()) throw DomainError("estimate_c needs at least one sequence");
  CEstimate out;
  out.c_hat = std::numeric_limits<double>::infinity();
  for (const auto& seq : seqs) {
    if (seq.empty()) throw DomainError("estimate_c got an empty sequence");
    std::vector<double> trace;
    for (const auto& x : seq) trace.push_back(k.diag(x) / t.diag(phi(x)));
    const std::size_t start = trace.size() - std::max<std::size_t>(1, trace.size() / 4);
    double mean = 0.0;
    for (std::size_t i = start; i < trace.size(); ++i) mean += trace[i];
    mean /= static_cast<double>(trace.size() - start);
    out.c_hat = std::min(out.c_hat, mean);
    out.tail_means.push_back(mean);
    out.traces.push_back(std::move(trace));
  }
  return out;
}

PointFn build_q_xi(const Kernel& k, const Kernel& t, const SelfMap& phi, const BoundaryPoint& xi,
                   const BoundaryPoint& lambda) {
  (void)k;
  (void)t;
  return [xi, lambda, phi](const Point& x) {
    const cplx den = lambda.limit(phi(x));
    if (std::abs(den) < 1e-14) throw DivisionError("t_lambda(phi(x)) vanishes at " + to_string(x));
    return xi.limit(x) / den;
  };
}

BoundaryPoint detect_lambda(const Kernel& t, const SelfMap& phi, const std::vector<Point>& seq, double tolerance,
                            double* residual) {
  std::vector<Point> images;
  images.reserve(seq.size());
  for (const auto& x : seq) images.push_back(phi(x));
  double r = 0.0;
  const auto anchor = match_anchor(t, images, tolerance, &r);
  if (residual) *residual = r;
  if (!anchor)
    throw NoMatch("no boundary anchor of " + t.label() + " matches the limit of " + phi.label() +
                  " (residual " + detail::fmt_real(r) + ")");
  return boundary_point(t, *anchor);
}

bool sandwich_check(const JCReport& r) {
  const double rhs = (r.M_used * r.a_lambda_hat) * (r.M_used * r.a_lambda_hat) * r.q_norm_sq_lb;
  return r.q_norm_sq_lb <= r.c_hat + 1e-6 && r.c_hat <= rhs + 1e-6;
}

JCReport jc_report(const Kernel& k, const Kernel& t, const SelfMap& phi, const Point& xi_anchor,
                   const JCOptions& opt) {
  const FactorVerdict cert = certify_factor(k, t, phi, opt.plan);
  if (cert.status == FactorStatus::Refuted)
    throw PreconditionError(phi.label() + " is refuted as a factor; no report is produced");

  JCReport rep;
  rep.kernel = k.label();
  rep.t_kernel = t.label();
  rep.map = phi.label();
  rep.xi = xi_anchor;

  const BoundaryPoint xi = boundary_point(k, xi_anchor);
  std::vector<std::vector<Point>> seqs;
  for (const auto& spec : opt.sequences) seqs.push_back(make_sequence(spec, xi, opt.N));
  if (seqs.empty()) throw DomainError("jc_report needs at least one sequence");
  const CEstimate est = estimate_c(k, t, phi, seqs);
  rep.c_hat = est.c_hat;
  for (std::size_t i = 0; i < seqs.size(); ++i)
    rep.sequences.push_back({to_string(opt.sequences[i]), seqs[i], est.traces[i], est.tail_means[i]});

  const BoundaryPoint lambda = detect_lambda(t, phi, seqs.front(), opt.lambda_tolerance, &rep.lambda_residual);
  rep.lambda_hat = lambda.anchor;

  const PointFn q = build_q_xi(k, t, phi, xi, lambda);
  const Domain& d = k.domain();
  Sample s = probe_sample(d);
  if (d.contains(origin_of(d))) s = merge(s, make_sample(d, {origin_of(d)}));
  std::vector<Point> tail;
  for (int n : {10, 20, 30})
    if (n <= xi.max_index) tail.push_back(xi.generator(n));
  s = merge(s, make_sample(d, tail));
  rep.q_norm_sq_lb = sample_norm_sq(cert.quotient, q, s).value_sq;

  const int hi = std::min(30, xi.max_index);
  for (const auto& x : generator_points(xi, hi - 10, hi)) rep.M_used = std::max(rep.M_used, gamma_level(xi, x));

  Sample a_sample = quasi_random_sample(t.domain(), opt.a_sample_size, opt.plan.seed);
  a_sample = merge(a_sample, make_sample(t.domain(), generator_points(lambda, 1, 30)));
  for (const auto& y : a_sample.points)
    rep.a_lambda_hat = std::max(rep.a_lambda_hat, std::abs(lambda.limit(y)) / t.diag(y));

  rep.sandwich_ok = sandwich_check(rep);
  return rep;
}

InclusionReport julia_inclusion_check(const Kernel& k, const SelfMap& phi, const BoundaryPoint& xi,
                                      const BoundaryPoint& lambda, double c, const std::vector<double>& Ms,
                                      const Sample& s, double rel_slack) {
  (void)k;
  InclusionReport rep;
  for (const auto& x : s.points) {
    for (double M : Ms) {
      if (!e_member(xi, M, x)) continue;
      InclusionPoint p;
      p.x = x;
      p.M = M;
      p.lhs = e_level(lambda, phi(x));
      p.rhs = c * e_level(xi, x);
      const double scale = std::max({std::abs(p.lhs), std::abs(p.rhs), 1e-300});
      p.holds = p.lhs <= p.rhs + rel_slack * scale;
      p.equality = std::abs(p.lhs - p.rhs) <= rel_slack * scale;
      ++rep.checked;
      if (!p.holds) ++rep.violations;
      if (p.equality) ++rep.equalities;
      rep.points.push_back(std::move(p));
    }
  }
  return rep;
}

Trajectory iterate_to_boundary(const Kernel& k, const SelfMap& phi, const Point& x0, const BoundaryPoint& xi,
                               double c, int N, double threshold) {
  if (!(c < 1.0)) throw PreconditionError("iteration needs c < 1, got " + detail::fmt_real(c));
  const Sample probes = probe_sample(k.domain());
  Trajectory tr;
  Point x = x0;
  int stalled = 0;
  for (int n = 0; n <= N; ++n) {
    tr.points.push_back(x);
    tr.diag.push_back(k.diag(x));
    tr.e_level.push_back(e_level(xi, x));
    tr.probe_residual.push_back(probe_residual(xi, x, probes));
    if (n > 0) {
      stalled = tr.e_level[n] < tr.e_level[n - 1] ? 0 : stalled + 1;
      if (stalled >= 10) throw StalledError("E-level stopped shrinking for 10 consecutive steps");
    }
    if (tr.probe_residual.back() < threshold) {
      tr.converged = true;
      break;
    }
    if (n == N) break;
    Point next = phi(x);
    if (distance(next, x) <= 1e-12) throw PreconditionError("fixed point encountered at " + to_string(x));
    x = std::move(next);
  }
  return tr;
}

}  // namespace rkb
