#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "rkb/boundary.hpp"
#include "rkb/classical.hpp"
#include "rkb/julia.hpp"
#include "rkb/numerics.hpp"

namespace rkb::io {

using json = nlohmann::ordered_json;

/// Round-trippable "a+bi" text accepted by zoo::parse_complex.
std::string format_complex(cplx z);
/// Comma-separated coordinates, accepted by zoo::parse_point.
std::string format_point(const Point& p);

json to_json(const GramReport& r, bool with_matrix = false);
json to_json(const FactorVerdict& v);
json to_json(const JCReport& r);
json to_json(const CEstimate& c);
json to_json(const InclusionReport& r);
json to_json(const Trajectory& t);
json to_json(const Trichotomy& t);
json to_json(const RegularityReport& r);
json to_json(const WeightedDerivativeReport& r);

/// Writes `header` then rows; values are written with 17 significant digits.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const std::vector<std::string>& header);
  CsvWriter& cell(const std::string& s);
  CsvWriter& cell(double v);
  CsvWriter& cell(long long v);
  CsvWriter& cell(int v) { return cell(static_cast<long long>(v)); }
  CsvWriter& cell(bool v) { return cell(std::string(v ? "true" : "false")); }
  void end_row();

 private:
  std::ostream& os_;
  bool first_ = true;
};

std::string format_double(double v);

}  // namespace rkb::io
