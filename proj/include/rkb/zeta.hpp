#pragma once

#include "rkb/domain.hpp"

namespace rkb {

/// Dirichlet eta function via the Euler transform of its alternating series,
/// written as binomial averaging of partial sums (van Wijngaarden form).
/// Doubles the term count from 32 until two estimates agree to 1e-14
/// (relative); ConvergenceError past 10000 terms.
cplx dirichlet_eta(cplx s);

/// zeta(s) = eta(s) / (1 - 2^{1-s}) for Re s > 0.5 + 1e-3.
/// PoleError within 1e-6 of s = 1, DomainError left of the admissible strip.
cplx zeta_eval(cplx s);

}  // namespace rkb
