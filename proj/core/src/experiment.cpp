#include "lpsq/experiment.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lpsq/multipliers.hpp"
#include "lpsq/orlicz.hpp"

namespace lpsq {

namespace {

int64_t family_support_width(FamilyName name, int N) {
  switch (name) {
    case FamilyName::fejer:
      return 2 * static_cast<int64_t>(N);
    default:
      // vallee_poussin and the modulated trapezoid families span a
      // (2^{N+2} - 2)-wide frequency interval per axis.
      return (int64_t{1} << (N + 2)) - 2;
  }
}

void check_config(const ExperimentConfig& cfg) {
  if (cfg.d < 1) throw std::invalid_argument("experiment: d must be >= 1");
  if (cfg.resolution < 2 || !is_pow2(static_cast<std::size_t>(cfg.resolution)))
    throw std::invalid_argument("experiment: resolution must be a power of two >= 2");
  if (cfg.oversample < 2) throw std::invalid_argument("experiment: oversample must be >= 2");
}

TrigPoly family_member(const ExperimentConfig& cfg, int N) {
  return make_family({cfg.family, N, cfg.d});
}

std::vector<int> square_shape(const ExperimentConfig& cfg) {
  return std::vector<int>(static_cast<std::size_t>(cfg.d), cfg.resolution);
}

// Synthesis grid for denominator norms evaluated through the Orlicz or weak
// functionals (they consume grids, not polynomials).
GridFunction family_grid(const ExperimentConfig& cfg, const TrigPoly& g) {
  std::vector<int> res(static_cast<std::size_t>(cfg.d));
  for (int j = 0; j < cfg.d; ++j) {
    const auto base = next_pow2(static_cast<std::size_t>(g.support_width(j)) + 1);
    res[static_cast<std::size_t>(j)] =
        static_cast<int>(std::max<std::size_t>(2, base * next_pow2(static_cast<std::size_t>(cfg.oversample))));
  }
  return synthesize(g, res);
}

void require_fits(const ExperimentConfig& cfg, int N, const std::string& what) {
  if (family_support_width(cfg.family, N) >= cfg.resolution) {
    throw std::runtime_error("experiment: resolution " + std::to_string(cfg.resolution) +
                             " is insufficient for " + what + " (family " +
                             family_to_string(cfg.family) + ", N = " + std::to_string(N) + ")");
  }
}

TableMeta meta_of(const ExperimentConfig& cfg) {
  return TableMeta{cfg.seed, cfg.resolution, cfg.oversample, cfg.timestamp};
}

}  // namespace

int max_family_n(FamilyName family, int resolution) {
  int n = 0;
  while (n < 28 && family_support_width(family, n + 1) < resolution) ++n;
  return n;
}

RateTable rate_experiment(const ExperimentConfig& cfg) {
  check_config(cfg);
  for (std::size_t i = 0; i < cfg.p_grid.size(); ++i) {
    if (!(cfg.p_grid[i] > 1.0)) throw std::invalid_argument("rate_experiment: p-grid values must exceed 1");
    if (i > 0 && !(cfg.p_grid[i] < cfg.p_grid[i - 1]))
      throw std::invalid_argument("rate_experiment: p-grid must be strictly decreasing");
  }

  RateTable table;
  table.meta = meta_of(cfg);
  const int cap = max_family_n(cfg.family, cfg.resolution);
  if (cap < 1 && !cfg.p_grid.empty())
    throw std::runtime_error("rate_experiment: resolution admits no family member (limiting p = " +
                             std::to_string(cfg.p_grid.front()) + ")");
  const auto shape = square_shape(cfg);
  for (double p : cfg.p_grid) {
    const int requested = static_cast<int>(std::lround(1.0 / (p - 1.0)));
    const int N = std::max(1, std::min(requested, cap));
    const TrigPoly g = family_member(cfg, N);
    const double num = lp_norm(square_function(g, shape, cfg.threads), p);
    const double den = lp_norm(g, p, cfg.oversample);
    table.rows.push_back({cfg.d, p, N, num, den, num / den});
  }
  return table;
}

RateTable zygmund_experiment(const ExperimentConfig& cfg) {
  check_config(cfg);
  if (cfg.n_min < 1 || cfg.n_max < cfg.n_min)
    throw std::invalid_argument("zygmund_experiment: bad N range");
  const double r = cfg.orlicz_r < 0.0 ? static_cast<double>(cfg.d) : cfg.orlicz_r;

  RateTable table;
  table.meta = meta_of(cfg);
  const auto shape = square_shape(cfg);
  for (int N = cfg.n_min; N <= cfg.n_max; ++N) {
    require_fits(cfg, N, "N = " + std::to_string(N));
    const TrigPoly g = family_member(cfg, N);
    const double num = lp_norm(square_function(g, shape, cfg.threads), 1.0);
    const double den = orlicz_norm(family_grid(cfg, g), OrliczParams{.r = r});
    table.rows.push_back({cfg.d, 1.0, N, num, den, num / den});
  }
  return table;
}

RateTable weak_type_experiment(const ExperimentConfig& cfg) {
  check_config(cfg);
  if (cfg.n_min < 1 || cfg.n_max < cfg.n_min)
    throw std::invalid_argument("weak_type_experiment: bad N range");

  RateTable table;
  table.meta = meta_of(cfg);
  const auto shape = square_shape(cfg);
  for (int N = cfg.n_min; N <= cfg.n_max; ++N) {
    require_fits(cfg, N, "N = " + std::to_string(N));
    const TrigPoly g = family_member(cfg, N);
    const double num = weak_quasinorm(square_function(g, shape, cfg.threads));
    const double den = cfg.d == 1
                           ? lp_norm(g, 1.0, cfg.oversample)
                           : orlicz_norm(family_grid(cfg, g), OrliczParams{.r = static_cast<double>(cfg.d - 1)});
    table.rows.push_back({cfg.d, 1.0, N, num, den, num / den});
  }
  return table;
}

FitResult fit_exponent(const RateTable& table) {
  if (table.rows.size() < 3) throw std::invalid_argument("fit_exponent: needs at least 3 rows");
  std::vector<double> x, y;
  x.reserve(table.rows.size());
  y.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    if (!(row.p > 1.0)) throw std::invalid_argument("fit_exponent: rows must have p > 1");
    if (!(row.ratio > 0.0)) throw std::invalid_argument("fit_exponent: rows must have positive ratio");
    x.push_back(std::log(1.0 / (row.p - 1.0)));
    y.push_back(std::log(row.ratio));
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx < 1e-12) throw std::invalid_argument("fit_exponent: degenerate abscissae");

  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < x.size(); ++i) {
    fit.max_residual = std::max(fit.max_residual, std::abs(y[i] - fit.slope * x[i] - fit.intercept));
  }
  return fit;
}

}  // namespace lpsq
