#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rkb/kernel.hpp"
#include "rkb/numerics.hpp"
#include "rkb/sampling.hpp"

namespace rkb {

/// A reproductive-boundary point: the anchor of a boundary family together
/// with the kernel whose continuation at the anchor is k_xi.
struct BoundaryPoint {
  Kernel kernel;
  Point anchor;
  std::function<Point(int)> generator;
  int max_index = 0;
  std::string label;

  /// k_xi(x) = lim_{y -> anchor} k(x, y)
  cplx limit(const Point& x) const { return kernel.extension(x, anchor); }
  PointFn limit_fn() const;
  /// generator(1..n)
  std::vector<Point> canonical(int n) const;
};

/// Builds the boundary point of `k` at `anchor`. The anchor must sit on the
/// boundary of the domain: |zeta| = 1 (disk), ||zeta|| = 1 (ball), some
/// |zeta_j| = 1 (polydisk), Re s = cut (half-plane), infinity (ray, naturals).
BoundaryPoint boundary_point(const Kernel& k, const Point& anchor);

enum class RegionKind { Gamma, E };

struct ApproachRegion {
  RegionKind kind;
  double M;
  BoundaryPoint xi;

  bool contains(const Point& x) const;
};

/// k(x,x) / |k_xi(x)|, the least M with x in Gamma(M, xi).
double gamma_level(const BoundaryPoint& xi, const Point& x);
/// k(x,x) / |k_xi(x)|^2, the least M with x in E(M, xi).
double e_level(const BoundaryPoint& xi, const Point& x);
bool gamma_member(const BoundaryPoint& xi, double M, const Point& x);
bool e_member(const BoundaryPoint& xi, double M, const Point& x);

enum class SeqKind { Radial, Nontangential, Horocyclic, Tangential };

struct SequenceSpec {
  SeqKind kind = SeqKind::Radial;
  /// theta for nontangential, M for horocyclic, beta for tangential.
  double param = 0.0;
};

std::string to_string(const SequenceSpec& s);

/// Points n = 1..N. Verified against the probe residuals of k_xi before
/// returning; NotApproaching when they do not decrease or a horocyclic tail
/// leaves E(M(1 + 1e-9), xi).
std::vector<Point> make_sequence(const SequenceSpec& spec, const BoundaryPoint& xi, int N);

/// max over probes of |k(p, x) - k_xi(p)| / (1 + |k_xi(p)|)
double probe_residual(const BoundaryPoint& xi, const Point& x, const Sample& probes);

enum class TrichotomyVerdict { InteriorPointMatch, InteriorFunction, Boundary };
std::string to_string(TrichotomyVerdict v);

struct ClassifyOptions {
  double divergence_threshold = 1e4;
  double stabilization = 1e-3;
  double match_tolerance = 1e-8;
  /// Local search keeps |x| <= 1 - margin on bounded domains.
  double search_margin = 1e-4;
};

struct Trichotomy {
  TrichotomyVerdict verdict = TrichotomyVerdict::Boundary;
  /// Sample norms of the limit over the nested samples.
  std::vector<double> evidence;
  /// Limit values on the probe set.
  std::vector<cplx> limit_on_probes;
  std::optional<Point> match;
  double match_residual = 0.0;
};

/// probes followed by the first m sequence points, m = 1..count.
std::vector<Sample> default_nested_samples(const Kernel& k, const std::vector<Point>& seq, int count);

/// Classifies the pointwise limit L(p) = k(p, x_last) of the sections along `seq`.
/// InconclusiveError if neither growth nor stabilisation is seen.
Trichotomy classify_limit(const Kernel& k, const std::vector<Point>& seq,
                          const std::vector<Sample>& nested, const ClassifyOptions& opt = {});

struct GrowthTrace {
  std::vector<cplx> values;
  bool passed = false;
};

/// f(x_n) / k(x_n, x_n)^{1/2}; passes when the last magnitude is below 1e-3
/// and the magnitudes decrease over the last quarter.
GrowthTrace growth_restriction_check(const Kernel& k, const PointFn& f, const std::vector<Point>& seq);

struct SequenceRegularity {
  std::string label;
  bool boundary_divergent = false;  ///< |t_lambda(y_n)| grew past 1e6
  bool diagonal_divergent = false;  ///< t(y_n, y_n) grew past 1e6
  bool converges_to_lambda = false;
  double residual = 0.0;
  std::optional<Point> matched_anchor;
  double anchor_residual = 0.0;
};

struct RegularityReport {
  double a_hat = 0.0;
  double b_hat = 0.0;
  std::vector<SequenceRegularity> sequences;
};

/// Sampled boundary-to-diagonal and lower kernel bounds of t at lambda, plus per-sequence
/// convergence and anchor-matching checks.
RegularityReport regularity_check(const Kernel& t, const BoundaryPoint& lambda, const Sample& s,
                                  const std::vector<std::vector<Point>>& seqs);

/// Anchor of the boundary family of t whose section best matches the limit
/// of `seq` on the probes; nullopt when the residual exceeds `tolerance`.
std::optional<Point> match_anchor(const Kernel& t, const std::vector<Point>& seq, double tolerance,
                                  double* residual = nullptr);

struct ParsedSequence {
  SequenceSpec spec;
  Point anchor;
};
struct ParsedRegion {
  RegionKind kind;
  double M;
  Point anchor;
};

/// `radial@1+0i`, `nontangential:0.5@1+0i`, `horocyclic:1@...`, `tangential:2@...`
ParsedSequence parse_sequence(const std::string& text);
/// `gamma:M=2@1+0i`, `e:M=2@1+0i`
ParsedRegion parse_region(const std::string& text);

}  // namespace rkb
