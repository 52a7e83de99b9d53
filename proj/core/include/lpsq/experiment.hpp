#pragma once

#include <cstdint>

#include "lpsq/kernels.hpp"
#include "lpsq/trig_poly.hpp"

namespace lpsq {

struct RateRow {
  int d = 1;
  double p = 1.0;
  int N = 1;
  double numerator = 0.0;
  double denominator = 0.0;
  double ratio = 0.0;
  bool operator==(const RateRow&) const = default;
};

// Run metadata carried into reports. `timestamp` is caller-supplied and
// defaults to 0 so that identical configurations emit identical bytes.
struct TableMeta {
  uint64_t seed = 0;
  int resolution = 0;
  int oversample = 0;
  int64_t timestamp = 0;
  bool operator==(const TableMeta&) const = default;
};

struct RateTable {
  std::vector<RateRow> rows;
  TableMeta meta;
  bool operator==(const RateTable&) const = default;
};

enum class ExperimentKind { rate, zygmund, weaktype };

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::rate;
  int d = 1;
  // rate: strictly decreasing toward 1
  std::vector<double> p_grid = {1.5, 1.25, 1.125, 1.0625, 1.03125};
  int n_min = 4, n_max = 10;         // zygmund / weaktype N range
  double orlicz_r = -1.0;            // zygmund denominator exponent; < 0 means r = d
  FamilyName family = FamilyName::pichorides;
  int resolution = 4096;             // per-axis square-function grid
  int oversample = 8;                // denominator-norm oversampling
  uint64_t seed = 0;
  unsigned threads = 0;
  int64_t timestamp = 0;
};

// Largest admissible family parameter for a per-axis resolution.
int max_family_n(FamilyName family, int resolution);

// For each p: N = round(1/(p-1)) capped by the resolution, then
// ratio = ||S(g_N)||_p / ||g_N||_p with g_N the d-fold family member.
RateTable rate_experiment(const ExperimentConfig& cfg);

// Rows (N, ||S(g_N)||_1, orlicz_norm(g_N, r), ratio) for N in [n_min, n_max].
RateTable zygmund_experiment(const ExperimentConfig& cfg);

// Rows (N, weak_quasinorm(S(g_N)), den, ratio); den is the L^1 norm for
// d = 1 and the L log^{d-1} L norm for d > 1.
RateTable weak_type_experiment(const ExperimentConfig& cfg);

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
};

// Ordinary least squares of log(ratio) against log(1/(p-1)). Requires at
// least three rows, p > 1 throughout, and non-degenerate abscissae.
FitResult fit_exponent(const RateTable& table);

}  // namespace lpsq
