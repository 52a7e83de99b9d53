// lpsq: square functions, tensor multipliers and Hardy/Orlicz norms on the
// torus, plus the desk-scale rate experiments. Subcommands: gen, apply,
// norm, sqfn, kx-split, rate, zygmund, weaktype.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lpsq/experiment.hpp"
#include "lpsq/hardy.hpp"
#include "lpsq/io.hpp"
#include "lpsq/kernels.hpp"
#include "lpsq/multipliers.hpp"
#include "lpsq/orlicz.hpp"

namespace {

using namespace lpsq;

struct GlobalOpts {
  int resolution = 4096;
  int oversample = 8;
  uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
  unsigned threads = 0;
};

void write_or_print(const std::string& out, const std::string& content) {
  if (out.empty()) {
    std::fputs(content.c_str(), stdout);
  } else {
    write_text_file(out, content);
  }
}

std::string fmt_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g\n", v);
  return buf;
}

std::vector<double> parse_p_grid(const std::string& csv) {
  std::vector<double> ps;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t next = csv.find(',', pos);
    if (next == std::string::npos) next = csv.size();
    ps.push_back(std::stod(csv.substr(pos, next - pos)));
    pos = next + 1;
  }
  return ps;
}

// Shared flags -> config, with an optional JSON --config as the base layer.
ExperimentConfig build_config(ExperimentKind kind, const std::string& config_path,
                              const GlobalOpts& g, int d, const std::string& p_grid_csv, int n_min,
                              int n_max, double orlicz_r, const std::string& family) {
  ExperimentConfig cfg;
  if (!config_path.empty()) cfg = experiment_config_from_json(read_text_file(config_path));
  cfg.kind = kind;
  if (d > 0) cfg.d = d;
  if (!p_grid_csv.empty()) cfg.p_grid = parse_p_grid(p_grid_csv);
  if (n_min > 0) cfg.n_min = n_min;
  if (n_max > 0) cfg.n_max = n_max;
  if (orlicz_r >= 0.0) cfg.orlicz_r = orlicz_r;
  if (!family.empty()) cfg.family = family_from_string(family);
  cfg.resolution = g.resolution;
  cfg.oversample = g.oversample;
  cfg.seed = g.seed;
  cfg.threads = g.threads;
  return cfg;
}

void emit_table(const RateTable& table, const GlobalOpts& g) {
  const ReportFormat format = report_format_from_string(g.format);
  if (g.out.empty()) {
    std::fputs((format == ReportFormat::csv ? table_to_csv(table) : table_to_json(table)).c_str(), stdout);
  } else {
    emit_report(table, format, g.out);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Littlewood-Paley square functions on analytic Hardy spaces"};
  app.require_subcommand(1);
  // Global flags may appear on either side of the subcommand.
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--resolution", g.resolution, "per-axis grid resolution (power of two)")
      ->capture_default_str();
  app.add_option("--oversample", g.oversample, "norm quadrature oversampling")->capture_default_str();
  app.add_option("--seed", g.seed, "seed recorded in experiment metadata")->capture_default_str();
  app.add_option("--out", g.out, "output path (stdout when empty)");
  app.add_option("--format", g.format, "report format: csv or json")->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads (0 = hardware)")->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "generate a kernel-family member as coefficient JSON");
  std::string family = "pichorides";
  int genN = 4, gend = 1;
  gen->add_option("--family", family, "fejer|vallee_poussin|pichorides|zygmund_tensor|diagonal")
      ->capture_default_str();
  gen->add_option("--N", genN, "scale parameter")->capture_default_str();
  gen->add_option("--d", gend, "dimension")->capture_default_str();

  // apply
  auto* apply = app.add_subcommand("apply", "apply a tensor multiplier to a coefficient file");
  std::string apply_spec, apply_in;
  apply->add_option("--spec", apply_spec, "multiplier JSON file")->required();
  apply->add_option("--in", apply_in, "input coefficient JSON file")->required();

  // norm
  auto* norm = app.add_subcommand("norm", "evaluate a norm of a coefficient file");
  std::string norm_in, norm_kind = "lp";
  double norm_p = 2.0, norm_r = 1.0;
  norm->add_option("--in", norm_in, "input coefficient JSON file")->required();
  norm->add_option("--kind", norm_kind, "lp|orlicz|weak|h1")->capture_default_str();
  norm->add_option("--p", norm_p, "exponent for lp")->capture_default_str();
  norm->add_option("--r", norm_r, "exponent for orlicz")->capture_default_str();

  // sqfn
  auto* sqfn = app.add_subcommand("sqfn", "square function sampled on a grid, emitted as CSV");
  std::string sqfn_in;
  sqfn->add_option("--in", sqfn_in, "input coefficient JSON file")->required();

  // kx-split
  auto* kx = app.add_subcommand("kx-split", "bounded/integrable splitting of an analytic polynomial");
  std::string kx_in;
  double kx_lambda = 1.0;
  kx->add_option("--in", kx_in, "input coefficient JSON file")->required();
  kx->add_option("--lambda", kx_lambda, "splitting threshold")->required();

  // experiments
  std::string config_path, p_grid_csv, exp_family;
  int exp_d = 0, exp_nmin = 0, exp_nmax = 0;
  double exp_r = -1.0;
  auto add_experiment_flags = [&](CLI::App* cmd, bool wants_p_grid) {
    cmd->add_option("--config", config_path, "JSON config file (flags override)");
    cmd->add_option("--d", exp_d, "dimension");
    if (wants_p_grid) cmd->add_option("--p-grid", p_grid_csv, "comma-separated p values, decreasing");
    cmd->add_option("--N-min", exp_nmin, "first scale parameter");
    cmd->add_option("--N-max", exp_nmax, "last scale parameter");
    cmd->add_option("--r", exp_r, "Orlicz exponent for the denominator");
    cmd->add_option("--family", exp_family, "kernel family");
  };
  auto* rate = app.add_subcommand("rate", "square-function blowup-rate rows over a p grid");
  add_experiment_flags(rate, true);
  auto* zygmund = app.add_subcommand("zygmund", "L1-vs-Orlicz rows over an N range");
  add_experiment_flags(zygmund, false);
  auto* weaktype = app.add_subcommand("weaktype", "weak-quasinorm rows over an N range");
  add_experiment_flags(weaktype, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      const TrigPoly f = make_family({family_from_string(family), genN, gend});
      write_or_print(g.out, poly_to_json(f));
    } else if (apply->parsed()) {
      const TrigPoly f = poly_from_json(read_text_file(apply_in));
      const auto axes = multiplier_axes_from_json(read_text_file(apply_spec));
      const TrigPoly out = apply_tensor_multiplier(materialize_multiplier(axes, f), f);
      write_or_print(g.out, poly_to_json(out));
    } else if (norm->parsed()) {
      const TrigPoly f = poly_from_json(read_text_file(norm_in));
      double value = 0.0;
      if (norm_kind == "lp") {
        value = lp_norm(f, norm_p, g.oversample);
      } else if (norm_kind == "orlicz") {
        std::vector<int> res(static_cast<std::size_t>(f.dim()), g.resolution);
        value = orlicz_norm(synthesize(f, res), {.r = norm_r});
      } else if (norm_kind == "weak") {
        std::vector<int> res(static_cast<std::size_t>(f.dim()), g.resolution);
        value = weak_quasinorm(synthesize(f, res));
      } else if (norm_kind == "h1") {
        value = h1_norm(f, g.oversample);
      } else {
        throw std::invalid_argument("norm: unknown kind '" + norm_kind + "'");
      }
      write_or_print(g.out, fmt_value(value));
    } else if (sqfn->parsed()) {
      const TrigPoly f = poly_from_json(read_text_file(sqfn_in));
      std::vector<int> res(static_cast<std::size_t>(f.dim()), g.resolution);
      write_or_print(g.out, grid_to_csv(square_function(f, res, g.threads)));
    } else if (kx->parsed()) {
      const TrigPoly f = poly_from_json(read_text_file(kx_in));
      const KxSplit split = kx_split(f, kx_lambda, g.resolution);
      write_or_print(g.out, kx_report_to_json(kx_report(f, split, g.resolution)));
    } else if (rate->parsed()) {
      emit_table(rate_experiment(build_config(ExperimentKind::rate, config_path, g, exp_d, p_grid_csv,
                                              exp_nmin, exp_nmax, exp_r, exp_family)),
                 g);
    } else if (zygmund->parsed()) {
      emit_table(zygmund_experiment(build_config(ExperimentKind::zygmund, config_path, g, exp_d,
                                                 p_grid_csv, exp_nmin, exp_nmax, exp_r, exp_family)),
                 g);
    } else if (weaktype->parsed()) {
      emit_table(weak_type_experiment(build_config(ExperimentKind::weaktype, config_path, g, exp_d,
                                                   p_grid_csv, exp_nmin, exp_nmax, exp_r, exp_family)),
                 g);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
