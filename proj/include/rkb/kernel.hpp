#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "rkb/domain.hpp"

namespace rkb {

using KernelFn = std::function<cplx(const Point&, const Point&)>;
/// Continuation of y -> k(x, y) to a boundary anchor: returns lim_{y -> anchor} k(x, y).
using ExtensionFn = std::function<cplx(const Point& x, const Point& anchor)>;
using PointFn = std::function<cplx(const Point&)>;
using MapFn = std::function<Point(const Point&)>;

/// Immutable two-argument kernel on a domain. Copies share the evaluator.
class Kernel {
 public:
  Kernel(Domain domain, std::string label, KernelFn fn, std::optional<Point> normalization = {},
         ExtensionFn extension = {});

  /// k(x, y) with membership checks. On the diagonal the value is returned
  /// with its imaginary part discarded; a residue above 1e-12 (relative)
  /// raises EvaluationError.
  cplx operator()(const Point& x, const Point& y) const;
  double diag(const Point& x) const;

  const Domain& domain() const { return impl_->domain; }
  const std::string& label() const { return impl_->label; }
  const std::optional<Point>& normalization_point() const { return impl_->normalization; }

  bool has_extension() const { return static_cast<bool>(impl_->extension); }
  /// lim_{y -> anchor} k(x, y); the anchor is not checked for membership.
  cplx extension(const Point& x, const Point& anchor) const;

  /// Raw evaluator without membership or diagonal checks.
  cplx raw(const Point& x, const Point& y) const { return impl_->fn(x, y); }

 private:
  struct Impl {
    Domain domain;
    std::string label;
    KernelFn fn;
    std::optional<Point> normalization;
    ExtensionFn extension;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Map between domains; images are checked against the target.
class SelfMap {
 public:
  SelfMap(Domain source, Domain target, std::string label, MapFn fn);

  Point operator()(const Point& x) const;
  const Domain& source() const { return impl_->source; }
  const Domain& target() const { return impl_->target; }
  const std::string& label() const { return impl_->label; }

 private:
  struct Impl {
    Domain source;
    Domain target;
    std::string label;
    MapFn fn;
  };
  std::shared_ptr<const Impl> impl_;
};

SelfMap identity_map(const Domain& d);
SelfMap constant_map(const Domain& source, const Domain& target, const Point& value);
/// psi o phi
SelfMap compose_maps(const SelfMap& psi, const SelfMap& phi);

cplx eval_kernel(const Kernel& k, const Point& x, const Point& y);

Kernel ones_kernel(const Domain& d);
Kernel zero_kernel(const Domain& d);

Kernel product_kernel(const Kernel& k, const Kernel& t);
/// Principal-branch power; BranchError when |arg k| >= pi - 1e-9 or k = 0.
Kernel power_kernel(const Kernel& k, double alpha);
Kernel compose_kernel(const Kernel& k, const SelfMap& phi);
/// Pointwise quotient; DivisionError when |t_comp| < 1e-14.
Kernel quotient_kernel(const Kernel& k, const Kernel& t_comp);
/// OverflowError when Re k > 700.
Kernel exp_kernel(const Kernel& k);

/// y -> k(y, x) / k(x, x)^{1/2}
PointFn normalized_section(const Kernel& k, const Point& x);

enum class PMetricForm {
  AsPrinted,  ///< 1 - |k(x,y)|^2 / (k(x,x)^{1/2} k(y,y)^{1/2})
  Squared,    ///< 1 - |k(x,y)|^2 / (k(x,x) k(y,y))
};

/// sqrt of the radicand selected by `form`. Radicands in [-1e-12, 0) are
/// clamped to zero; anything more negative raises DegenerateError.
double p_metric(const Kernel& k, const Point& x, const Point& y,
                PMetricForm form = PMetricForm::AsPrinted);

/// Principal power z^a = exp(a Log z) with the branch guard used by power_kernel.
cplx principal_pow(cplx z, double a);

}  // namespace rkb
