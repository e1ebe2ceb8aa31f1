#include "fraccalc/report.hpp"

#include <cmath>

namespace fraccalc {

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::Pass: return "pass";
  case Verdict::Fail: return "fail";
  case Verdict::DivergesAsExpected: return "diverges-as-expected";
  }
  return "fail";
}

bool ladder_decreasing(const std::vector<double>& errors) {
  for (size_t k = 0; k + 1 < errors.size(); ++k)
    if (!(errors[k + 1] <= 0.99 * errors[k] + 1e-12))
      return false;
  return true;
}

bool sustained_growth(const std::vector<double>& values, double factor) {
  if (values.size() < 3)
    return false;
  for (size_t k = 0; k + 1 < values.size(); ++k)
    if (!(values[k + 1] >= factor * values[k]))
      return false;
  return true;
}

double fit_rate(const std::vector<int>& grid_sizes,
                const std::vector<double>& errors, double interval_length) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (size_t i = 0; i < grid_sizes.size() && i < errors.size(); ++i) {
    if (!(errors[i] > 0.0))
      continue;
    double x = std::log(interval_length / grid_sizes[i]);
    double y = std::log(errors[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++m;
  }
  if (m < 2)
    return 0.0;
  double denom = m * sxx - sx * sx;
  return denom == 0.0 ? 0.0 : (m * sxy - sx * sy) / denom;
}

} // namespace fraccalc
