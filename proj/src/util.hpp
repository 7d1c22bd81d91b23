#pragma once

#include <cstdio>
#include <string>

#include "rkb/domain.hpp"

namespace rkb::detail {

inline std::string fmt_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

inline std::string fmt_cplx(cplx z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g%+.10gi", z.real(), z.imag());
  return buf;
}

}  // namespace rkb::detail
