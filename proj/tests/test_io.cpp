#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "lpsq/io.hpp"
#include "test_util.hpp"

using namespace lpsq;
using lpsq::testing::Rng;
using lpsq::testing::random_poly;

namespace {

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("coefficient JSON round-trips polynomials exactly") {
  Rng rng(157);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 1 + trial % 3;
    const TrigPoly f = random_poly(rng, d, -20, 20, 8);
    const TrigPoly back = poly_from_json(poly_to_json(f));
    CHECK(back == f);
  }
  const std::string text = poly_to_json(TrigPoly::constant(2, cd{1, -2}));
  CHECK(text.find("\"dim\": 2") != std::string::npos);
  CHECK(text.find("\"entries\"") != std::string::npos);
}

TEST_CASE("grid CSV: one sample per row, index-major order") {
  GridFunction g({2, 2}, {cd{1, 0}, cd{0, 1}, cd{-1, 0}, cd{0.5, -0.25}});
  CHECK(grid_to_csv(g) == "1,0\n0,1\n-1,0\n0.5,-0.25\n");
}

TEST_CASE("multiplier JSON: signs and table kinds, bad kinds rejected") {
  const std::string text = R"({
    "axes": [
      {"kind": "signs", "signs": {"0": 1, "1": -1, "2": 1, "3": -1}},
      {"kind": "table", "entries": {"0": [1, 0], "1": [0, -1], "5": [2, 0]}}
    ]
  })";
  const auto axes = multiplier_axes_from_json(text);
  REQUIRE(axes.size() == 2);
  CHECK(axes[0].kind == AxisSymbolInput::Kind::signs);
  CHECK(axes[1].table.at(5) == cd{2, 0});

  Rng rng(163);
  const TrigPoly f = random_poly(rng, 2, 0, 5, 5);
  const MultiplierSpec spec = materialize_multiplier(axes, f);
  CHECK(spec.axes.size() == 2);

  CHECK_THROWS_AS((void)multiplier_axes_from_json(R"({"axes": [{"kind": "wat"}]})"), std::invalid_argument);
}

TEST_CASE("rate table CSV and JSON: header, determinism, parse fixpoint") {
  RateTable t;
  t.meta = {7, 1024, 8, 0};

  CHECK(table_to_csv(t) == "d,p,N,num,den,ratio\n");

  t.rows.push_back({1, 1.5, 2, 2.25, 1.75, 2.25 / 1.75});
  t.rows.push_back({2, 1.25, 4, 3.5, 1.125, 3.5 / 1.125});
  CHECK(table_to_csv(t) == table_to_csv(t));

  const RateTable back = table_from_json(table_to_json(t));
  CHECK(back == t);
  CHECK(table_to_json(back) == table_to_json(t));
}

TEST_CASE("emit_report writes files and reports path failures") {
  RateTable t;
  t.rows.push_back({1, 1.5, 2, 1.0, 2.0, 0.5});
  const auto path = temp_file("lpsq_io_test.csv");
  emit_report(t, ReportFormat::csv, path);
  CHECK(read_text_file(path) == table_to_csv(t));
  std::filesystem::remove(path);

  try {
    emit_report(t, ReportFormat::json, "/nonexistent_dir_zzz/out.json");
    FAIL("expected write failure");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("/nonexistent_dir_zzz/out.json") != std::string::npos);
  }
}

TEST_CASE("kx report JSON carries the contract fields") {
  KxReport rep{0.8, 0.79, 1.0, 1.3, 1e-12};
  const std::string j = kx_report_to_json(rep);
  for (const char* key : {"\"lambda\"", "\"h_sup\"", "\"bullet1_C\"", "\"bullet2_C\"", "\"residual\""}) {
    CHECK(j.find(key) != std::string::npos);
  }
}

TEST_CASE("band-limited JSON round-trips samples and metadata") {
  Rng rng(167);
  std::vector<cd> amp(5);
  for (auto& a : amp) a = rng.complex_gaussian();
  const BandlimitedFn f = BandlimitedFn::from_spectrum_1d(
      16.0, 256,
      [&](double xi) {
        cd v{0, 0};
        for (int b = 0; b < 5; ++b) {
          const double t = (std::abs(xi) - (1.0 + 0.4 * b)) / 0.3;
          v += amp[static_cast<std::size_t>(b)] * std::exp(-0.5 * t * t);
        }
        return v;
      },
      {-3.5, 3.5});
  const BandlimitedFn back = bandlimited_from_json(bandlimited_to_json(f));
  CHECK(back.halfwidth() == f.halfwidth());
  CHECK(back.shape() == f.shape());
  double worst = 0.0, peak = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    worst = std::max(worst, std::abs(back.samples()[i] - f.samples()[i]));
    peak = std::max(peak, std::abs(f.samples()[i]));
  }
  CHECK(worst < 1e-12 * peak);
}

TEST_CASE("experiment config JSON parses fields and rejects unknown kinds") {
  const std::string text = R"({
    "experiment": "zygmund", "d": 2, "n_min": 3, "n_max": 7, "orlicz_r": 1.0,
    "family": "zygmund_tensor", "resolution": 512, "oversample": 2, "seed": 9
  })";
  const ExperimentConfig cfg = experiment_config_from_json(text);
  CHECK(cfg.kind == ExperimentKind::zygmund);
  CHECK(cfg.d == 2);
  CHECK(cfg.n_min == 3);
  CHECK(cfg.n_max == 7);
  CHECK(cfg.orlicz_r == 1.0);
  CHECK(cfg.family == FamilyName::zygmund_tensor);
  CHECK(cfg.resolution == 512);
  CHECK(cfg.oversample == 2);
  CHECK(cfg.seed == 9);

  CHECK_THROWS_AS((void)experiment_config_from_json(R"({"experiment": "frobnicate"})"),
                  std::invalid_argument);
}
