#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "lpsq/euclid.hpp"
#include "lpsq/experiment.hpp"
#include "lpsq/hardy.hpp"
#include "lpsq/multipliers.hpp"
#include "lpsq/trig_poly.hpp"

namespace lpsq {

// Coefficient files: { "dim": d, "entries": [ {"n": [n1..nd], "re": r, "im": i}, ... ] }.
std::string poly_to_json(const TrigPoly& f);
TrigPoly poly_from_json(const std::string& text);

// Band-limited line functions use the same entry layout plus
// "domain_halfwidth" and "resolution"; entry n is the integer bin at
// frequency n / (2 * domain_halfwidth).
std::string bandlimited_to_json(const BandlimitedFn& f);
BandlimitedFn bandlimited_from_json(const std::string& text);

// Grid dumps: CSV, one sample per row in index-major (C) order, "re,im".
std::string grid_to_csv(const GridFunction& g);

// Multiplier files: { "axes": [ {"kind": "signs", "signs": {"k": +-1}} |
//                               {"kind": "table", "entries": {"n": [re, im]}} ] }.
struct AxisSymbolInput {
  enum class Kind { signs, table } kind = Kind::signs;
  std::map<int, int> signs;
  std::map<int32_t, cd> table;
};
std::vector<AxisSymbolInput> multiplier_axes_from_json(const std::string& text);
// Materializes symbols over the frequency ranges f actually occupies.
MultiplierSpec materialize_multiplier(std::span<const AxisSymbolInput> axes, const TrigPoly& f);

std::string kx_report_to_json(const KxReport& report);

// Rate tables. CSV header is exactly "d,p,N,num,den,ratio"; JSON mirrors the
// table fields and parses back to an equal table.
std::string table_to_csv(const RateTable& table);
std::string table_to_json(const RateTable& table);
RateTable table_from_json(const std::string& text);

enum class ReportFormat { csv, json };
ReportFormat report_format_from_string(const std::string& s);

// Writes the table in the requested format; failures carry the path.
void emit_report(const RateTable& table, ReportFormat format, const std::filesystem::path& path);

// Experiment configuration files mirror ExperimentConfig field names:
// { "experiment": "rate", "d": 1, "p_grid": [...], "n_min":, "n_max":,
//   "family":, "resolution":, "oversample":, "orlicz_r":, "seed":, "threads": }.
ExperimentConfig experiment_config_from_json(const std::string& text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace lpsq
