#pragma once

#include <functional>
#include <vector>

namespace rkb::detail {

struct Minimum {
  std::vector<double> x;
  double value = 0.0;
};

/// Nelder-Mead simplex search from x0 with initial edge `step`.
Minimum nelder_mead(const std::function<double(const std::vector<double>&)>& f, std::vector<double> x0,
                    double step, int max_iter = 2000, double ftol = 1e-15);

/// Golden-section minimisation of a unimodal f on [a, b].
double golden_section(const std::function<double(double)>& f, double a, double b, double tol = 1e-12);

}  // namespace rkb::detail
