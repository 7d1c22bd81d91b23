#include "rkb/kernel.hpp"

#include <cmath>
#include <numbers>

#include "rkb/errors.hpp"
#include "util.hpp"

namespace rkb {

Kernel::Kernel(Domain domain, std::string label, KernelFn fn, std::optional<Point> normalization,
               ExtensionFn extension)
    : impl_(std::make_shared<const Impl>(Impl{domain, std::move(label), std::move(fn),
                                              std::move(normalization), std::move(extension)})) {}

cplx Kernel::operator()(const Point& x, const Point& y) const {
  impl_->domain.require(x);
  impl_->domain.require(y);
  cplx v = impl_->fn(x, y);
  if (x == y) {
    if (std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v.real())))
      throw EvaluationError(label() + ": diagonal value at " + to_string(x) +
                            " has imaginary part " + detail::fmt_real(v.imag()));
    v = cplx(v.real(), 0.0);
  }
  return v;
}

double Kernel::diag(const Point& x) const { return (*this)(x, x).real(); }

cplx Kernel::extension(const Point& x, const Point& anchor) const {
  if (!impl_->extension) throw DomainError(label() + " has no boundary continuation");
  impl_->domain.require(x);
  return impl_->extension(x, anchor);
}

SelfMap::SelfMap(Domain source, Domain target, std::string label, MapFn fn)
    : impl_(std::make_shared<const Impl>(Impl{source, target, std::move(label), std::move(fn)})) {}

Point SelfMap::operator()(const Point& x) const {
  impl_->source.require(x);
  Point y = impl_->fn(x);
  if (!impl_->target.contains(y))
    throw DomainError(label() + ": image " + to_string(y) + " of " + to_string(x) +
                      " leaves " + impl_->target.name());
  return y;
}

SelfMap identity_map(const Domain& d) {
  return SelfMap(d, d, "identity", [](const Point& x) { return x; });
}

SelfMap constant_map(const Domain& source, const Domain& target, const Point& value) {
  target.require(value);
  return SelfMap(source, target, "const" + to_string(value), [value](const Point&) { return value; });
}

SelfMap compose_maps(const SelfMap& psi, const SelfMap& phi) {
  if (!phi.target().same_set(psi.source()))
    throw DomainError("cannot compose " + psi.label() + " after " + phi.label());
  return SelfMap(phi.source(), psi.target(), psi.label() + "." + phi.label(),
                 [psi, phi](const Point& x) { return psi(phi(x)); });
}

cplx eval_kernel(const Kernel& k, const Point& x, const Point& y) { return k(x, y); }

Kernel ones_kernel(const Domain& d) {
  return Kernel(
      d, "ones", [](const Point&, const Point&) { return cplx(1.0); }, std::nullopt,
      [](const Point&, const Point&) { return cplx(1.0); });
}

Kernel zero_kernel(const Domain& d) {
  return Kernel(
      d, "zero", [](const Point&, const Point&) { return cplx(0.0); }, std::nullopt,
      [](const Point&, const Point&) { return cplx(0.0); });
}

namespace {

void require_same_domain(const Kernel& k, const Kernel& t) {
  if (!k.domain().same_set(t.domain()))
    throw DomainError("kernels " + k.label() + " and " + t.label() + " live on different domains");
}

std::optional<Point> common_normalization(const Kernel& k, const Kernel& t) {
  if (k.normalization_point() && t.normalization_point() &&
      *k.normalization_point() == *t.normalization_point())
    return k.normalization_point();
  return std::nullopt;
}

cplx guarded_quotient(cplx num, cplx den) {
  if (std::abs(den) < 1e-14) throw DivisionError("quotient denominator below 1e-14");
  return num / den;
}

cplx guarded_exp(cplx v) {
  if (v.real() > 700.0) throw OverflowError("exp argument real part exceeds 700");
  return std::exp(v);
}

}  // namespace

Kernel product_kernel(const Kernel& k, const Kernel& t) {
  require_same_domain(k, t);
  ExtensionFn ext;
  if (k.has_extension() && t.has_extension())
    ext = [k, t](const Point& x, const Point& a) { return k.extension(x, a) * t.extension(x, a); };
  return Kernel(
      k.domain(), "product(" + k.label() + "," + t.label() + ")",
      [k, t](const Point& x, const Point& y) { return k.raw(x, y) * t.raw(x, y); },
      common_normalization(k, t), std::move(ext));
}

cplx principal_pow(cplx z, double a) {
  if (z == cplx(0.0)) throw BranchError("power of zero kernel value");
  if (std::abs(std::arg(z)) >= std::numbers::pi - 1e-9)
    throw BranchError("kernel value " + detail::fmt_cplx(z) + " is on the principal branch cut");
  if (z.imag() == 0.0 && z.real() > 0.0) return std::pow(z.real(), a);
  return std::exp(a * std::log(z));
}

Kernel power_kernel(const Kernel& k, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("power exponent must be positive");
  ExtensionFn ext;
  if (k.has_extension())
    ext = [k, alpha](const Point& x, const Point& a) { return principal_pow(k.extension(x, a), alpha); };
  auto norm = k.normalization_point();
  return Kernel(
      k.domain(), "pow(" + k.label() + "," + detail::fmt_real(alpha) + ")",
      [k, alpha](const Point& x, const Point& y) { return principal_pow(k.raw(x, y), alpha); },
      norm, std::move(ext));
}

Kernel compose_kernel(const Kernel& k, const SelfMap& phi) {
  if (!phi.target().same_set(k.domain()))
    throw DomainError("map " + phi.label() + " does not land in the domain of " + k.label());
  return Kernel(phi.source(), "compose(" + k.label() + "," + phi.label() + ")",
                [k, phi](const Point& x, const Point& y) { return k.raw(phi(x), phi(y)); });
}

Kernel quotient_kernel(const Kernel& k, const Kernel& t_comp) {
  require_same_domain(k, t_comp);
  ExtensionFn ext;
  if (k.has_extension() && t_comp.has_extension())
    ext = [k, t_comp](const Point& x, const Point& a) {
      return guarded_quotient(k.extension(x, a), t_comp.extension(x, a));
    };
  return Kernel(
      k.domain(), "quotient(" + k.label() + "," + t_comp.label() + ")",
      [k, t_comp](const Point& x, const Point& y) {
        return guarded_quotient(k.raw(x, y), t_comp.raw(x, y));
      },
      common_normalization(k, t_comp), std::move(ext));
}

Kernel exp_kernel(const Kernel& k) {
  ExtensionFn ext;
  if (k.has_extension())
    ext = [k](const Point& x, const Point& a) { return guarded_exp(k.extension(x, a)); };
  return Kernel(
      k.domain(), "exp(" + k.label() + ")",
      [k](const Point& x, const Point& y) { return guarded_exp(k.raw(x, y)); }, std::nullopt,
      std::move(ext));
}

PointFn normalized_section(const Kernel& k, const Point& x) {
  const double kxx = k.diag(x);
  if (kxx <= 1e-14) throw DegenerateError("k(x,x) <= 1e-14 at " + to_string(x));
  const double root = std::sqrt(kxx);
  return [k, x, root](const Point& y) { return k(y, x) / root; };
}

double p_metric(const Kernel& k, const Point& x, const Point& y, PMetricForm form) {
  const double kxx = k.diag(x);
  const double kyy = k.diag(y);
  if (kxx <= 1e-14 || kyy <= 1e-14) throw DegenerateError("p_metric needs a nonvanishing diagonal");
  const double num = std::norm(k(x, y));
  const double den = form == PMetricForm::AsPrinted ? std::sqrt(kxx) * std::sqrt(kyy) : kxx * kyy;
  double radicand = 1.0 - num / den;
  if (radicand < 0.0) {
    if (radicand < -1e-12)
      throw DegenerateError("p_metric radicand " + detail::fmt_real(radicand) + " is negative");
    radicand = 0.0;
  }
  return std::sqrt(radicand);
}

}  // namespace rkb
