#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fraccalc {

enum class Verdict { Pass, Fail, DivergesAsExpected };

std::string to_string(Verdict v);

// Outcome of one identity/inequality check on a refinement ladder.
struct VerificationReport {
  std::string identity;
  std::vector<std::pair<std::string, double>> params;
  std::vector<int> grid_sizes;
  std::vector<double> errors;
  double rate = 0.0; // least-squares slope of log(error) vs log(h)
  Verdict verdict = Verdict::Fail;
  std::vector<std::string> notes;
  double wall_time_s = 0.0;

  void note(const std::string& s) { notes.push_back(s); }
};

// e_{k+1} <= 0.99 e_k + 1e-12: identically-zero ladders count as decreasing
// (exact cancellations happen after the singular split).
bool ladder_decreasing(const std::vector<double>& errors);

// every consecutive ratio >= factor, over at least 3 levels
bool sustained_growth(const std::vector<double>& values, double factor);

// least-squares slope of log(error) against log(h); zero errors are skipped
double fit_rate(const std::vector<int>& grid_sizes,
                const std::vector<double>& errors, double interval_length);

} // namespace fraccalc
