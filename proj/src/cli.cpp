#include "rkb/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <limits>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rkb/boundary.hpp"
#include "rkb/classical.hpp"
#include "rkb/errors.hpp"
#include "rkb/julia.hpp"
#include "rkb/report_io.hpp"
#include "rkb/zoo.hpp"

namespace rkb::cli {

namespace {

using io::json;

struct Common {
  std::string out;
  std::string format = "json";
  std::string plot;
  std::uint64_t seed = 0;
};

struct Emitter {
  const Common& common;
  std::ostream& out;

  void write(const std::string& text) const {
    if (common.out.empty()) {
      out << text;
      return;
    }
    std::ofstream f(common.out, std::ios::binary);
    if (!f) throw ParseError("cannot open output file " + common.out);
    f << text;
  }

  void emit(const json& j, const std::function<void(std::ostream&)>& csv) const {
    if (common.format == "csv") {
      std::ostringstream os;
      csv(os);
      write(os.str());
    } else {
      write(j.dump(2) + "\n");
    }
  }

  /// Long-format rows (series, n, quantity, value).
  void plot(const std::function<void(io::CsvWriter&)>& rows) const {
    if (common.plot.empty()) return;
    std::ofstream f(common.plot, std::ios::binary);
    if (!f) throw ParseError("cannot open plot-data file " + common.plot);
    io::CsvWriter w(f, {"series", "n", "quantity", "value"});
    rows(w);
  }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out, "Write the report to this file instead of stdout");
  sub->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--emit-plot-data", c.plot, "Also write long-format CSV (series,n,quantity,value) here");
  sub->add_option("--seed", c.seed, "Seed for quasi-random and random samples");
}

std::vector<ParsedSequence> sequences_or_default(const std::vector<std::string>& given, const Point& xi) {
  std::vector<ParsedSequence> out;
  for (const auto& s : given) out.push_back(parse_sequence(s));
  if (out.empty()) {
    out.push_back({{SeqKind::Radial, 0.0}, xi});
    out.push_back({{SeqKind::Nontangential, 0.5}, xi});
  }
  return out;
}

void plot_series(io::CsvWriter& w, const std::string& series, const std::string& quantity,
                 const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    w.cell(series).cell(static_cast<long long>(i + 1)).cell(quantity).cell(values[i]).end_row();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reproducing-kernel boundary experiments", "rkb"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  Common common;
  std::function<int()> action;

  // certify-factor -------------------------------------------------------
  std::string k_label, t_label, map_label, xi_text, lambda_text, x0_text;
  EscalationPlan plan;
  std::optional<double> tol;
  auto* cf = app.add_subcommand("certify-factor", "Certify or refute k / (t o phi) on escalating samples");
  add_common(cf, common);
  cf->add_option("--k", k_label, "Kernel label")->required();
  cf->add_option("--t", t_label, "Target kernel label (defaults to --k)");
  cf->add_option("--map", map_label, "Map label")->required();
  cf->add_option("--sizes", plan.sizes, "Escalating sample sizes")->delimiter(',');
  cf->add_option("--restarts", plan.restarts, "Witness-search restarts");
  cf->add_option("--witness-size", plan.witness_size, "Points per witness-search sample");
  cf->add_option("--tol", tol, "Verdict tolerance (default 1e-9 n max|G_ii|)");
  cf->callback([&] {
    action = [&] {
      const Kernel k = zoo::kernel_from_label(k_label);
      const Kernel t = zoo::kernel_from_label(t_label.empty() ? k_label : t_label);
      const SelfMap phi = zoo::map_from_label(map_label);
      plan.seed = common.seed;
      plan.tol = tol;
      const FactorVerdict v = certify_factor(k, t, phi, plan);
      json j;
      j["command"] = "certify-factor";
      j["kernel"] = k.label();
      j["t_kernel"] = t.label();
      j["map"] = phi.label();
      j.update(io::to_json(v));
      const Emitter e{common, out};
      e.emit(j, [&](std::ostream& os) {
        io::CsvWriter w(os, {"label", "n", "min_eig", "tol", "verdict"});
        for (const auto& r : v.reports) w.cell(r.label).cell(r.n()).cell(r.min_eig).cell(r.tol).cell(to_string(r.verdict)).end_row();
      });
      e.plot([&](io::CsvWriter& w) {
        for (const auto& r : v.reports)
          plot_series(w, r.label, "eigenvalue", std::vector<double>(r.eigenvalues.data(), r.eigenvalues.data() + r.eigenvalues.size()));
      });
      return v.status == FactorStatus::Refuted ? kRefuted : kPass;
    };
  });

  // estimate-c / jc-report ------------------------------------------------
  std::vector<std::string> seq_texts;
  int N = 30;
  JCOptions jc;
  auto* ec = app.add_subcommand("estimate-c", "Tail-mean estimate of the liminf of k(x,x)/t(phi x, phi x)");
  add_common(ec, common);
  ec->add_option("--k", k_label, "Kernel label")->required();
  ec->add_option("--t", t_label, "Target kernel label (defaults to --k)");
  ec->add_option("--map", map_label, "Map label")->required();
  ec->add_option("--xi", xi_text, "Boundary anchor")->required();
  ec->add_option("--seq", seq_texts, "Sequence specs (default radial and nontangential:0.5 at --xi)");
  ec->add_option("-N", N, "Sequence length");
  ec->callback([&] {
    action = [&] {
      const Kernel k = zoo::kernel_from_label(k_label);
      const Kernel t = zoo::kernel_from_label(t_label.empty() ? k_label : t_label);
      const SelfMap phi = zoo::map_from_label(map_label);
      const Point xi_anchor = zoo::parse_point(xi_text);
      std::vector<std::vector<Point>> seqs;
      std::vector<std::string> names;
      for (const auto& ps : sequences_or_default(seq_texts, xi_anchor)) {
        seqs.push_back(make_sequence(ps.spec, boundary_point(k, ps.anchor), N));
        names.push_back(to_string(ps.spec) + "@" + io::format_point(ps.anchor));
      }
      const CEstimate c = estimate_c(k, t, phi, seqs);
      json j;
      j["command"] = "estimate-c";
      j["kernel"] = k.label();
      j["t_kernel"] = t.label();
      j["map"] = phi.label();
      j["sequences"] = names;
      j.update(io::to_json(c));
      const Emitter e{common, out};
      e.emit(j, [&](std::ostream& os) {
        io::CsvWriter w(os, {"sequence", "n", "re", "im", "ratio"});
        for (std::size_t s = 0; s < seqs.size(); ++s)
          for (std::size_t i = 0; i < seqs[s].size(); ++i)
            w.cell(names[s]).cell(static_cast<long long>(i + 1)).cell(seqs[s][i].z().real()).cell(seqs[s][i].z().imag()).cell(c.traces[s][i]).end_row();
      });
      e.plot([&](io::CsvWriter& w) {
        for (std::size_t s = 0; s < seqs.size(); ++s) plot_series(w, names[s], "ratio", c.traces[s]);
      });
      return kPass;
    };
  });

  auto* jr = app.add_subcommand("jc-report", "Certify, estimate c, detect lambda and check the norm sandwich");
  add_common(jr, common);
  jr->add_option("--k", k_label, "Kernel label")->required();
  jr->add_option("--t", t_label, "Target kernel label (defaults to --k)");
  jr->add_option("--map", map_label, "Map label")->required();
  jr->add_option("--xi", xi_text, "Boundary anchor")->required();
  jr->add_option("--seq", seq_texts, "Sequence specs anchored at --xi (default radial and nontangential:0.5)");
  jr->add_option("-N", jc.N, "Sequence length");
  jr->add_option("--lambda-tol", jc.lambda_tolerance, "Residual allowed when matching the image anchor");
  jr->add_option("--restarts", jc.plan.restarts, "Witness-search restarts for the factor certification");
  jr->callback([&] {
    action = [&] {
      const Kernel k = zoo::kernel_from_label(k_label);
      const Kernel t = zoo::kernel_from_label(t_label.empty() ? k_label : t_label);
      const SelfMap phi = zoo::map_from_label(map_label);
      const Point xi_anchor = zoo::parse_point(xi_text);
      jc.sequences.clear();
      for (const auto& ps : sequences_or_default(seq_texts, xi_anchor)) {
        if (!(ps.anchor == xi_anchor)) throw ParseError("sequence anchors must equal --xi");
        jc.sequences.push_back(ps.spec);
      }
      jc.plan.seed = common.seed;
      const JCReport r = jc_report(k, t, phi, xi_anchor, jc);
      json j;
      j["command"] = "jc-report";
      j.update(io::to_json(r));
      const Emitter e{common, out};
      e.emit(j, [&](std::ostream& os) {
        io::CsvWriter w(os, {"sequence", "n", "re", "im", "ratio"});
        for (const auto& s : r.sequences)
          for (std::size_t i = 0; i < s.points.size(); ++i)
            w.cell(s.spec).cell(static_cast<long long>(i + 1)).cell(s.points[i].z().real()).cell(s.points[i].z().imag()).cell(s.ratio[i]).end_row();
      });
      e.plot([&](io::CsvWriter& w) {
        for (const auto& s : r.sequences) plot_series(w, s.spec, "ratio", s.ratio);
      });
      return r.sandwich_ok ? kPass : kRefuted;
    };
  });

  // julia-check -------------------------------------------------------------
  std::optional<double> c_opt;
  std::vector<double> Ms{0.5, 1.0, 2.0, 4.0};
  int n_points = 500;
  double slack = 1e-9;
  auto* jl = app.add_subcommand("julia-check", "Check phi(E(M, xi)) inside E(cM, lambda) on sampled points");
  add_common(jl, common);
  jl->add_option("--k", k_label, "Kernel label")->required();
  jl->add_option("--map", map_label, "Map label")->required();
  jl->add_option("--xi", xi_text, "Boundary anchor")->required();
  jl->add_option("--lambda", lambda_text, "Image anchor (detected along the radial sequence when omitted)");
  jl->add_option("--c", c_opt, "Julia constant (estimated when omitted)");
  jl->add_option("--M", Ms, "Region levels")->delimiter(',');
  jl->add_option("--points", n_points, "Number of sampled points");
  jl->add_option("--slack", slack, "Relative slack for violations and equality detection");
  jl->add_option("-N", N, "Sequence length used for estimation");
  jl->callback([&] {
    action = [&] {
      const Kernel k = zoo::kernel_from_label(k_label);
      const SelfMap phi = zoo::map_from_label(map_label);
      const BoundaryPoint xi = boundary_point(k, zoo::parse_point(xi_text));
      const auto radial = make_sequence({SeqKind::Radial, 0.0}, xi, N);
      const BoundaryPoint lambda =
          lambda_text.empty() ? detect_lambda(k, phi, radial) : boundary_point(k, zoo::parse_point(lambda_text));
      const double c = c_opt ? *c_opt
                             : estimate_c(k, k, phi, {radial, make_sequence({SeqKind::Nontangential, 0.5}, xi, N)}).c_hat;
      const Sample s = k.domain().kind == DomainKind::UnitDisk ? horocycle_sample(xi.anchor.z(), Ms, n_points, common.seed)
                                                               : quasi_random_sample(k.domain(), n_points, common.seed);
      const InclusionReport r = julia_inclusion_check(k, phi, xi, lambda, c, Ms, s, slack);
      json j;
      j["command"] = "julia-check";
      j["kernel"] = k.label();
      j["map"] = phi.label();
      j["xi"] = io::format_point(xi.anchor);
      j["lambda"] = io::format_point(lambda.anchor);
      j["c"] = c;
      j["M"] = Ms;
      j.update(io::to_json(r));
      const Emitter e{common, out};
      e.emit(j, [&](std::ostream& os) {
        io::CsvWriter w(os, {"re", "im", "M", "lhs", "rhs", "holds", "equality"});
        for (const auto& p : r.points) w.cell(p.x.z().real()).cell(p.x.z().imag()).cell(p.M).cell(p.lhs).cell(p.rhs).cell(p.holds).cell(p.equality).end_row();
      });
      e.plot([&](io::CsvWriter& w) {
        for (std::size_t i = 0; i < r.points.size(); ++i) {
          w.cell("inclusion").cell(static_cast<long long>(i + 1)).cell("lhs").cell(r.points[i].lhs).end_row();
          w.cell("inclusion").cell(static_cast<long long>(i + 1)).cell("rhs").cell(r.points[i].rhs).end_row();
        }
      });
      return r.violations > 0 ? kRefuted : kPass;
    };
  });

  // iterate -------------------------------------------------------------------
  int iter_N = 40;
  double threshold = 1e-6;
  auto* it = app.add_subcommand("iterate", "Iterate phi from x0 toward the boundary point xi");
  add_common(it, common);
  it->add_option("--k", k_label, "Kernel label")->required();
  it->add_option("--map", map_label, "Map label")->required();
  it->add_option("--x0", x0_text, "Starting point")->required();
  it->add_option("--xi", xi_text, "Boundary anchor")->required();
  it->add_option("--c", c_opt, "Julia constant (estimated when omitted)");
  it->add_option("-N", iter_N, "Maximum number of steps");
  it->add_option("--threshold", threshold, "Probe residual that counts as converged");
  it->callback([&] {
    action = [&] {
      const Kernel k = zoo::kernel_from_label(k_label);
      const SelfMap phi = zoo::map_from_label(map_label);
      const BoundaryPoint xi = boundary_point(k, zoo::parse_point(xi_text));
      const double c = c_opt ? *c_opt
                             : estimate_c(k, k, phi, {make_sequence({SeqKind::Radial, 0.0}, xi, 30),
                                                      make_sequence({SeqKind::Nontangential, 0.5}, xi, 30)}).c_hat;
      const Trajectory tr = iterate_to_boundary(k, phi, zoo::parse_point(x0_text), xi, c, iter_N, threshold);
      json j;
      j["command"] = "iterate";
      j["kernel"] = k.label();
      j["map"] = phi.label();
      j["xi"] = io::format_point(xi.anchor);
      j["c"] = c;
      j["verdict"] = tr.converged ? "Converged" : "NotConverged";
      j.update(io::to_json(tr));
      const Emitter e{common, out};
      e.emit(j, [&](std::ostream& os) {
        io::CsvWriter w(os, {"n", "re", "im", "diag", "E_level", "probe_residual"});
        for (std::size_t i = 0; i < tr.points.size(); ++i)
          w.cell(static_cast<long long>(i)).cell(tr.points[i].z().real()).cell(tr.points[i].z().imag()).cell(tr.diag[i]).cell(tr.e_level[i]).cell(tr.probe_residual[i]).end_row();
      });
      e.plot([&](io::CsvWriter& w) {
        plot_series(w, "trajectory", "diag", tr.diag);
        plot_series(w, "trajectory", "E_level", tr.e_level);
        plot_series(w, "trajectory", "probe_residual", tr.probe_residual);
      });
      return tr.converged ? kPass : kInconclusive;
    };
  });

  // boundary-scan ---------------------------------------------------------------
  std::string seq_text, region_text;
  bool classify = false;
  bool pmetric_squared = false;
  int nested_count = 16;
  ClassifyOptions copt;
  auto* bs = app.add_subcommand("boundary-scan", "Trace a sequence toward the boundary and classify its limit");
  add_common(bs, common);
  bs->add_option("--k", k_label, "Kernel label")->required();
  bs->add_option("--seq", seq_text, "Sequence spec, e.g. radial@1+0i")->required();
  bs->add_option("--region", region_text, "Approach region for the member column, e.g. gamma:M=2@1+0i");
  bs->add_option("-N", N, "Sequence length");
  bs->add_flag("--classify", classify, "Run the trichotomy classifier");
  bs->add_option("--nested", nested_count, "Number of nested samples for the classifier");
  bs->add_option("--divergence", copt.divergence_threshold, "Sample-norm level that counts as divergence");
  bs->add_option("--stabilization", copt.stabilization, "Relative increment that counts as stable");
  bs->add_flag("--pmetric-squared", pmetric_squared, "Use k(x,x) k(y,y) in the p-metric denominator");
  bs->callback([&] {
    action = [&] {
      const Kernel k = zoo::kernel_from_label(k_label);
      const ParsedSequence ps = parse_sequence(seq_text);
      const BoundaryPoint xi = boundary_point(k, ps.anchor);
      const auto seq = make_sequence(ps.spec, xi, N);
      std::optional<ApproachRegion> region;
      if (!region_text.empty()) {
        const ParsedRegion pr = parse_region(region_text);
        region = ApproachRegion{pr.kind, pr.M, boundary_point(k, pr.anchor)};
      }
      const Sample probes = probe_sample(k.domain());
      const WeakLimit wl = weak_limit_probe(k, seq, probes);
      const PMetricForm form = pmetric_squared ? PMetricForm::Squared : PMetricForm::AsPrinted;
      std::vector<double> residual, pm;
      std::vector<bool> member;
      for (std::size_t i = 0; i < seq.size(); ++i) {
        residual.push_back(probe_residual(xi, seq[i], probes));
        if (region) member.push_back(region->contains(seq[i]));
        if (i == 0) continue;
        try {
          pm.push_back(p_metric(k, seq[i - 1], seq[i], form));
        } catch (const DegenerateError&) {
          pm.push_back(std::numeric_limits<double>::quiet_NaN());
        }
      }
      json j;
      j["command"] = "boundary-scan";
      j["kernel"] = k.label();
      j["sequence"] = to_string(ps.spec) + "@" + io::format_point(ps.anchor);
      json pts = json::array();
      for (const auto& p : seq) pts.push_back(io::format_point(p));
      j["points"] = pts;
      j["diag"] = wl.diagonal;
      j["probe_residual"] = residual;
      if (region) j["member"] = member;
      j["p_metric"] = pm;
      j["p_metric_form"] = pmetric_squared ? "squared" : "as_printed";
      j["weak_limit"] = {{"residual", wl.residual}, {"converged", wl.converged}};
      int code = kPass;
      if (classify) {
        try {
          const Trichotomy tri = classify_limit(k, seq, default_nested_samples(k, seq, nested_count), copt);
          j["trichotomy"] = io::to_json(tri);
        } catch (const InconclusiveError& ex) {
          j["trichotomy"] = {{"verdict", "Inconclusive"}, {"reason", ex.what()}};
          code = kInconclusive;
        }
      }
      const Emitter e{common, out};
      e.emit(j, [&](std::ostream& os) {
        io::CsvWriter w(os, {"n", "re", "im", "diag", "member"});
        for (std::size_t i = 0; i < seq.size(); ++i) {
          w.cell(static_cast<long long>(i + 1)).cell(seq[i].z().real()).cell(seq[i].z().imag()).cell(wl.diagonal[i]);
          if (region) w.cell(static_cast<bool>(member[i])); else w.cell(std::string());
          w.end_row();
        }
      });
      e.plot([&](io::CsvWriter& w) {
        plot_series(w, "scan", "diag", wl.diagonal);
        plot_series(w, "scan", "probe_residual", residual);
        plot_series(w, "scan", "p_metric", pm);
      });
      return code;
    };
  });

  // regularity ------------------------------------------------------------------
  int sample_size = 64;
  auto* rg = app.add_subcommand("regularity", "Sampled regularity constants a and b plus sequence checks at lambda");
  add_common(rg, common);
  rg->add_option("--t", t_label, "Kernel label")->required();
  rg->add_option("--lambda", lambda_text, "Boundary anchor")->required();
  rg->add_option("--samples", sample_size, "Quasi-random sample size");
  rg->add_option("--seq", seq_texts, "Sequence specs to examine");
  rg->add_option("-N", N, "Sequence length");
  rg->callback([&] {
    action = [&] {
      const Kernel t = zoo::kernel_from_label(t_label);
      const BoundaryPoint lambda = boundary_point(t, zoo::parse_point(lambda_text));
      std::vector<std::vector<Point>> seqs;
      for (const auto& s : seq_texts) {
        const ParsedSequence ps = parse_sequence(s);
        seqs.push_back(make_sequence(ps.spec, boundary_point(t, ps.anchor), N));
      }
      const RegularityReport r = regularity_check(t, lambda, quasi_random_sample(t.domain(), sample_size, common.seed), seqs);
      json j;
      j["command"] = "regularity";
      j["t_kernel"] = t.label();
      j["lambda"] = io::format_point(lambda.anchor);
      j.update(io::to_json(r));
      const Emitter e{common, out};
      e.emit(j, [&](std::ostream& os) {
        io::CsvWriter w(os, {"sequence", "boundary_divergent", "diagonal_divergent", "converges_to_lambda", "residual", "matched_anchor"});
        for (const auto& s : r.sequences)
          w.cell(s.label).cell(s.boundary_divergent).cell(s.diagonal_divergent).cell(s.converges_to_lambda).cell(s.residual).cell(s.matched_anchor ? io::format_point(*s.matched_anchor) : std::string()).end_row();
      });
      e.plot([&](io::CsvWriter& w) {
        w.cell("constants").cell(1LL).cell("a_hat").cell(r.a_hat).end_row();
        w.cell("constants").cell(1LL).cell("b_hat").cell(r.b_hat).end_row();
      });
      return kPass;
    };
  });

  // weighted-derivative ------------------------------------------------------------
  std::string zeta_text = "1+0i";
  double alpha = 1.0;
  int wd_N = 20;
  std::optional<std::string> c_text;
  auto* wd = app.add_subcommand("weighted-derivative", "Weighted difference quotient and derivative along Stolz sequences");
  add_common(wd, common);
  wd->add_option("--map", map_label, "Disk map label")->required();
  wd->add_option("--zeta", zeta_text, "Boundary point of the source");
  wd->add_option("--lambda", lambda_text, "Boundary point of the image (defaults to phi along the radius)");
  wd->add_option("--alpha", alpha, "Weight exponent in (0, 1]");
  wd->add_option("--c", c_text, "Expected difference-quotient limit (defaults to the last value)");
  wd->add_option("--seq", seq_texts, "Stolz sequence specs (default nontangential:0, 0.5, 1 at --zeta)");
  wd->add_option("-N", wd_N, "Sequence length");
  wd->callback([&] {
    action = [&] {
      const SelfMap phi = zoo::map_from_label(map_label);
      const cplx zeta = zoo::parse_complex(zeta_text);
      const BoundaryPoint anchor = boundary_point(zoo::szego(), Point(zeta));
      std::vector<ParsedSequence> specs;
      for (const auto& s : seq_texts) specs.push_back(parse_sequence(s));
      if (specs.empty())
        for (double th : {0.0, 0.5, 1.0}) specs.push_back({{SeqKind::Nontangential, th}, Point(zeta)});
      cplx lambda;
      if (lambda_text.empty()) {
        const auto radial = make_sequence({SeqKind::Radial, 0.0}, anchor, wd_N);
        const cplx w = phi(radial.back()).z();
        lambda = w / std::abs(w);
      } else {
        lambda = zoo::parse_complex(lambda_text);
      }
      std::optional<cplx> c;
      if (c_text) c = zoo::parse_complex(*c_text);
      json reports = json::array();
      std::vector<WeightedDerivativeReport> reps;
      bool all = true;
      for (const auto& ps : specs) {
        const auto seq = make_sequence(ps.spec, boundary_point(zoo::szego(), ps.anchor), wd_N);
        reps.push_back(weighted_derivative_check(phi, zeta, lambda, alpha, seq, c));
        json r = io::to_json(reps.back());
        r["sequence"] = to_string(ps.spec) + "@" + io::format_point(ps.anchor);
        reports.push_back(r);
        all = all && reps.back().passed;
      }
      json j;
      j["command"] = "weighted-derivative";
      j["map"] = phi.label();
      j["passed"] = all;
      j["reports"] = reports;
      const Emitter e{common, out};
      e.emit(j, [&](std::ostream& os) {
        io::CsvWriter w(os, {"sequence", "n", "re", "im", "dq_re", "dq_im", "wd_re", "wd_im"});
        for (std::size_t s = 0; s < reps.size(); ++s)
          for (std::size_t i = 0; i < reps[s].points.size(); ++i) {
            const cplx z = reps[s].points[i].z();
            w.cell(to_string(specs[s].spec)).cell(static_cast<long long>(i + 1)).cell(z.real()).cell(z.imag())
                .cell(reps[s].dq_trace[i].real()).cell(reps[s].dq_trace[i].imag())
                .cell(reps[s].wd_trace[i].real()).cell(reps[s].wd_trace[i].imag()).end_row();
          }
      });
      e.plot([&](io::CsvWriter& w) {
        for (std::size_t s = 0; s < reps.size(); ++s) {
          std::vector<double> dq, wdv;
          for (std::size_t i = 0; i < reps[s].dq_trace.size(); ++i) {
            dq.push_back(std::abs(reps[s].dq_trace[i]));
            wdv.push_back(std::abs(reps[s].wd_trace[i]));
          }
          plot_series(w, to_string(specs[s].spec), "abs_dq", dq);
          plot_series(w, to_string(specs[s].spec), "abs_wd", wdv);
        }
      });
      return all ? kPass : kRefuted;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kPass : kUsage;
  }
  if (!action) {
    err << "error: no subcommand given\n";
    return kUsage;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  }
}

}  // namespace rkb::cli
