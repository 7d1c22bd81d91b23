#include "rkb/report_io.hpp"

#include <cmath>
#include <cstdio>

namespace rkb::io {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(cplx z) {
  const double im = z.imag();
  std::string s = format_double(z.real());
  s += (std::signbit(im) ? "-" : "+");
  s += format_double(std::abs(im));
  s += "i";
  return s;
}

std::string format_point(const Point& p) {
  std::string s;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j) s += ",";
    s += format_complex(p[j]);
  }
  return s;
}

namespace {

// JSON has no infinities; they are written as strings.
json number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

json complex_pair(cplx z) { return json::array({number(z.real()), number(z.imag())}); }

json points(const std::vector<Point>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(format_point(p));
  return a;
}

json reals(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

json complexes(const std::vector<cplx>& v) {
  json a = json::array();
  for (cplx z : v) a.push_back(complex_pair(z));
  return a;
}

}  // namespace

json to_json(const GramReport& r, bool with_matrix) {
  json j;
  j["label"] = r.label;
  j["n"] = r.n();
  j["min_eig"] = number(r.min_eig);
  j["tol"] = number(r.tol);
  j["verdict"] = to_string(r.verdict);
  if (r.witness) {
    json w = json::array();
    for (Eigen::Index i = 0; i < r.witness->size(); ++i) w.push_back(complex_pair((*r.witness)(i)));
    j["witness"] = w;
  }
  if (!r.points.empty()) j["points"] = points(r.points);
  if (with_matrix) {
    json m = json::array();
    for (Eigen::Index i = 0; i < r.matrix.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index k = 0; k < r.matrix.cols(); ++k) row.push_back(complex_pair(r.matrix(i, k)));
      m.push_back(row);
    }
    j["matrix"] = m;
  }
  return j;
}

json to_json(const FactorVerdict& v) {
  json j;
  j["quotient"] = v.quotient.label();
  j["verdict"] = to_string(v.status);
  json reps = json::array();
  for (const auto& r : v.reports) reps.push_back(to_json(r));
  j["reports"] = reps;
  j["search_restarts"] = v.search_restarts_run;
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

json to_json(const CEstimate& c) {
  json j;
  j["c_hat"] = number(c.c_hat);
  j["tail_means"] = reals(c.tail_means);
  json traces = json::array();
  for (const auto& t : c.traces) traces.push_back(reals(t));
  j["traces"] = traces;
  return j;
}

json to_json(const JCReport& r) {
  json j;
  j["kernel"] = r.kernel;
  j["t_kernel"] = r.t_kernel;
  j["map"] = r.map;
  j["xi"] = format_point(r.xi);
  j["lambda_hat"] = format_point(r.lambda_hat);
  j["c_hat"] = number(r.c_hat);
  j["q_norm_sq_lb"] = number(r.q_norm_sq_lb);
  j["M_used"] = number(r.M_used);
  j["a_lambda_hat"] = number(r.a_lambda_hat);
  j["sandwich_ok"] = r.sandwich_ok;
  json seqs = json::array();
  for (const auto& s : r.sequences) {
    json e;
    e["spec"] = s.spec;
    e["tail_mean"] = number(s.tail_mean);
    e["points"] = points(s.points);
    e["ratio"] = reals(s.ratio);
    seqs.push_back(e);
  }
  j["sequences"] = seqs;
  j["lambda_residual"] = number(r.lambda_residual);
  return j;
}

json to_json(const InclusionReport& r) {
  json j;
  j["checked"] = r.checked;
  j["violations"] = r.violations;
  j["equalities"] = r.equalities;
  json pts = json::array();
  for (const auto& p : r.points) {
    if (p.holds && !p.equality) continue;
    json e;
    e["x"] = format_point(p.x);
    e["M"] = number(p.M);
    e["lhs"] = number(p.lhs);
    e["rhs"] = number(p.rhs);
    e["holds"] = p.holds;
    e["equality"] = p.equality;
    pts.push_back(e);
  }
  j["flagged"] = pts;
  return j;
}

json to_json(const Trajectory& t) {
  json j;
  j["converged"] = t.converged;
  j["steps"] = static_cast<int>(t.points.size()) - 1;
  j["points"] = points(t.points);
  j["diag"] = reals(t.diag);
  j["E_level"] = reals(t.e_level);
  j["probe_residual"] = reals(t.probe_residual);
  return j;
}

json to_json(const Trichotomy& t) {
  json j;
  j["verdict"] = to_string(t.verdict);
  j["evidence"] = reals(t.evidence);
  j["limit_on_probes"] = complexes(t.limit_on_probes);
  if (t.match) j["match"] = format_point(*t.match);
  j["match_residual"] = number(t.match_residual);
  return j;
}

json to_json(const RegularityReport& r) {
  json j;
  j["a_hat"] = number(r.a_hat);
  j["b_hat"] = number(r.b_hat);
  json seqs = json::array();
  for (const auto& s : r.sequences) {
    json e;
    e["label"] = s.label;
    e["boundary_divergent"] = s.boundary_divergent;
    e["diagonal_divergent"] = s.diagonal_divergent;
    e["converges_to_lambda"] = s.converges_to_lambda;
    e["residual"] = number(s.residual);
    if (s.matched_anchor) e["matched_anchor"] = format_point(*s.matched_anchor);
    e["anchor_residual"] = number(s.anchor_residual);
    seqs.push_back(e);
  }
  j["sequences"] = seqs;
  return j;
}

json to_json(const WeightedDerivativeReport& r) {
  json j;
  j["alpha"] = number(r.alpha);
  j["zeta"] = format_complex(r.zeta);
  j["lambda"] = format_complex(r.lambda);
  j["c"] = format_complex(r.c);
  j["target"] = format_complex(r.target);
  j["dq_converged"] = r.dq_converged;
  j["wd_converged"] = r.wd_converged;
  j["dq_residual"] = number(r.dq_residual);
  j["wd_residual"] = number(r.wd_residual);
  j["phi_to_lambda"] = r.phi_to_lambda;
  j["phi_residual"] = number(r.phi_residual);
  j["passed"] = r.passed;
  j["points"] = points(r.points);
  j["dq_trace"] = complexes(r.dq_trace);
  j["wd_trace"] = complexes(r.wd_trace);
  return j;
}

CsvWriter::CsvWriter(std::ostream& os, const std::vector<std::string>& header) : os_(os) {
  for (const auto& h : header) cell(h);
  end_row();
}

CsvWriter& CsvWriter::cell(const std::string& s) {
  if (!first_) os_ << ',';
  first_ = false;
  if (s.find_first_of(",\"\n") != std::string::npos) {
    os_ << '"';
    for (char c : s) {
      if (c == '"') os_ << '"';
      os_ << c;
    }
    os_ << '"';
  } else {
    os_ << s;
  }
  return *this;
}

CsvWriter& CsvWriter::cell(double v) { return cell(format_double(v)); }
CsvWriter& CsvWriter::cell(long long v) { return cell(std::to_string(v)); }

void CsvWriter::end_row() {
  os_ << '\n';
  first_ = true;
}

}  // namespace rkb::io
