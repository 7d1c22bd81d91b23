#include "rkb/zeta.hpp"

#include <cmath>
#include <vector>

#include "rkb/errors.hpp"

namespace rkb {

namespace {

constexpr int kMaxTerms = 10000;

// 2^{-n} sum_j C(n, j) S_j over partial sums S_0..S_n of sum_j (-1)^j (j+1)^{-s}.
cplx euler_average(cplx s, int n) {
  std::vector<cplx> partial(static_cast<std::size_t>(n) + 1);
  cplx acc = 0.0;
  for (int j = 0; j <= n; ++j) {
    const cplx term = std::exp(-s * std::log(static_cast<double>(j + 1)));
    acc += (j % 2 == 0) ? term : -term;
    partial[static_cast<std::size_t>(j)] = acc;
  }
  // Binomial weights C(n, j) / 2^n by recurrence outward from the centre, then normalised.
  std::vector<double> w(static_cast<std::size_t>(n) + 1, 0.0);
  const int mid = n / 2;
  w[static_cast<std::size_t>(mid)] = 1.0;
  for (int j = mid; j < n; ++j)
    w[static_cast<std::size_t>(j) + 1] = w[static_cast<std::size_t>(j)] * (n - j) / (j + 1.0);
  for (int j = mid; j > 0; --j)
    w[static_cast<std::size_t>(j) - 1] = w[static_cast<std::size_t>(j)] * j / (n - j + 1.0);
  double total = 0.0;
  for (double x : w) total += x;
  cplx out = 0.0;
  for (int j = 0; j <= n; ++j) out += (w[static_cast<std::size_t>(j)] / total) * partial[static_cast<std::size_t>(j)];
  return out;
}

}  // namespace

cplx dirichlet_eta(cplx s) {
  cplx prev = euler_average(s, 16);
  for (int n = 32; n <= kMaxTerms; n *= 2) {
    const cplx cur = euler_average(s, n);
    if (std::abs(cur - prev) <= 1e-14 * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  const cplx last = euler_average(s, kMaxTerms);
  if (std::abs(last - prev) <= 1e-11 * std::max(1.0, std::abs(last))) return last;
  throw ConvergenceError("eta series did not settle within 10000 terms");
}

cplx zeta_eval(cplx s) {
  if (!(s.real() > 0.5 + 1e-3)) throw DomainError("zeta_eval requires Re s > 0.501");
  if (std::abs(s - 1.0) < 1e-6) throw PoleError("zeta has a pole at s = 1");
  const cplx den = 1.0 - std::exp((1.0 - s) * std::log(2.0));
  if (std::abs(den) < 1e-8)
    throw PoleError("eta/zeta conversion factor vanishes near s = 1 + 2 pi i k / log 2");
  return dirichlet_eta(s) / den;
}

}  // namespace rkb
