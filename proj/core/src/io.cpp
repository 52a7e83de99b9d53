#include "lpsq/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lpsq {

namespace {

using ordered_json = nlohmann::ordered_json;

// Shortest round-trip decimal formatting, used everywhere a double lands in
// CSV so identical runs emit identical bytes.
std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  double back = 0.0;
  std::sscanf(buf, "%lf", &back);
  if (back == v) {
    // Try shorter representations first for readability.
    for (int prec = 1; prec <= 16; ++prec) {
      char shorter[64];
      std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
      std::sscanf(shorter, "%lf", &back);
      if (back == v) return shorter;
    }
  }
  return buf;
}

ordered_json poly_to_json_obj(const TrigPoly& f) {
  ordered_json j;
  j["dim"] = f.dim();
  ordered_json entries = ordered_json::array();
  for (std::size_t i = 0; i < f.term_count(); ++i) {
    ordered_json e;
    e["n"] = std::vector<int32_t>(f.exponent(i).begin(), f.exponent(i).end());
    e["re"] = f.amplitude(i).real();
    e["im"] = f.amplitude(i).imag();
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

TrigPoly poly_from_json_obj(const ordered_json& j) {
  const int dim = j.at("dim").get<int>();
  TrigPolyBuilder b(dim);
  for (const auto& e : j.at("entries")) {
    const auto n = e.at("n").get<std::vector<int32_t>>();
    if (static_cast<int>(n.size()) != dim)
      throw std::invalid_argument("coefficient file: entry rank does not match dim");
    b.add(n, cd{e.at("re").get<double>(), e.at("im").get<double>()});
  }
  return std::move(b).build();
}

}  // namespace

std::string poly_to_json(const TrigPoly& f) { return poly_to_json_obj(f).dump(2) + "\n"; }

TrigPoly poly_from_json(const std::string& text) {
  return poly_from_json_obj(ordered_json::parse(text));
}

std::string bandlimited_to_json(const BandlimitedFn& f) {
  if (f.dim() != 1) throw std::invalid_argument("bandlimited_to_json: expects a 1-D function");
  std::vector<cd> spec(f.samples().begin(), f.samples().end());
  dft_nd(spec, f.shape(), -1);
  const int r = f.shape()[0];
  const double scale = 1.0 / static_cast<double>(f.size());

  ordered_json j;
  j["dim"] = 1;
  j["domain_halfwidth"] = f.halfwidth();
  j["resolution"] = r;
  j["spectral_support"] = {f.spectral_support()[0].first, f.spectral_support()[0].second};
  ordered_json entries = ordered_json::array();
  double peak = 0.0;
  for (cd v : spec) peak = std::max(peak, std::abs(v));
  for (int s = 0; s < r; ++s) {
    const int m = s < r / 2 ? s : s - r;
    cd v = spec[static_cast<std::size_t>(s)] * scale;
    // Undo the -L grid-offset phase so entries are plain bin coefficients.
    if (m & 1) v = -v;
    if (std::abs(v) > 1e-15 * peak * scale) {
      ordered_json e;
      e["n"] = std::vector<int32_t>{static_cast<int32_t>(m)};
      e["re"] = v.real();
      e["im"] = v.imag();
      entries.push_back(std::move(e));
    }
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

BandlimitedFn bandlimited_from_json(const std::string& text) {
  const auto j = ordered_json::parse(text);
  if (j.at("dim").get<int>() != 1)
    throw std::invalid_argument("bandlimited_from_json: only 1-D files are supported");
  const double L = j.at("domain_halfwidth").get<double>();
  const int r = j.at("resolution").get<int>();
  std::pair<double, double> support{0.0, 0.0};
  if (j.contains("spectral_support")) {
    support = {j["spectral_support"][0].get<double>(), j["spectral_support"][1].get<double>()};
  }
  std::vector<cd> slots(static_cast<std::size_t>(r), cd{0.0, 0.0});
  for (const auto& e : j.at("entries")) {
    const int m = e.at("n")[0].get<int>();
    if (m < -r / 2 || m >= r / 2) throw std::invalid_argument("bandlimited_from_json: bin out of range");
    cd v{e.at("re").get<double>(), e.at("im").get<double>()};
    if (m & 1) v = -v;
    slots[static_cast<std::size_t>((m % r + r) % r)] = v;
  }
  if (!j.contains("spectral_support")) {
    const double dxi = 1.0 / (2.0 * L);
    support = {-(r / 2) * dxi, (r / 2 - 1) * dxi};
  }
  const int shape[1] = {r};
  dft_nd(slots, shape, +1);
  return BandlimitedFn(L, {r}, std::move(slots), {support});
}

std::string grid_to_csv(const GridFunction& g) {
  std::string out;
  out.reserve(g.size() * 24);
  for (cd v : g.samples()) {
    out += fmt_double(v.real());
    out += ',';
    out += fmt_double(v.imag());
    out += '\n';
  }
  return out;
}

std::vector<AxisSymbolInput> multiplier_axes_from_json(const std::string& text) {
  const auto j = ordered_json::parse(text);
  std::vector<AxisSymbolInput> axes;
  for (const auto& a : j.at("axes")) {
    AxisSymbolInput in;
    const std::string kind = a.at("kind").get<std::string>();
    if (kind == "signs") {
      in.kind = AxisSymbolInput::Kind::signs;
      for (const auto& [key, val] : a.at("signs").items()) {
        in.signs[std::stoi(key)] = val.get<int>();
      }
    } else if (kind == "table") {
      in.kind = AxisSymbolInput::Kind::table;
      for (const auto& [key, val] : a.at("entries").items()) {
        in.table[std::stoi(key)] = cd{val[0].get<double>(), val[1].get<double>()};
      }
    } else {
      throw std::invalid_argument("multiplier file: unknown axis kind '" + kind + "'");
    }
    axes.push_back(std::move(in));
  }
  return axes;
}

MultiplierSpec materialize_multiplier(std::span<const AxisSymbolInput> axes, const TrigPoly& f) {
  if (static_cast<int>(axes.size()) != f.dim())
    throw std::invalid_argument("multiplier file: axis count does not match polynomial dim");
  MultiplierSpec spec;
  for (int j = 0; j < f.dim(); ++j) {
    const auto& in = axes[static_cast<std::size_t>(j)];
    if (in.kind == AxisSymbolInput::Kind::signs) {
      int32_t lo = 0, hi = 0;
      if (!f.empty()) {
        lo = f.support().min[static_cast<std::size_t>(j)];
        hi = f.support().max[static_cast<std::size_t>(j)];
      }
      spec.axes.push_back(sign_symbol(SignPattern(in.signs), std::min<int32_t>(lo, 0), std::max<int32_t>(hi, 0)));
    } else {
      spec.axes.push_back(AxisSymbol::from_table(in.table));
    }
  }
  return spec;
}

std::string kx_report_to_json(const KxReport& report) {
  ordered_json j;
  j["lambda"] = report.lambda;
  j["h_sup"] = report.h_sup;
  j["bullet1_C"] = report.bullet1_c;
  j["bullet2_C"] = report.bullet2_c;
  j["residual"] = report.residual;
  return j.dump(2) + "\n";
}

std::string table_to_csv(const RateTable& table) {
  std::string out = "d,p,N,num,den,ratio\n";
  for (const auto& row : table.rows) {
    out += std::to_string(row.d);
    out += ',';
    out += fmt_double(row.p);
    out += ',';
    out += std::to_string(row.N);
    out += ',';
    out += fmt_double(row.numerator);
    out += ',';
    out += fmt_double(row.denominator);
    out += ',';
    out += fmt_double(row.ratio);
    out += '\n';
  }
  return out;
}

std::string table_to_json(const RateTable& table) {
  ordered_json j;
  j["metadata"] = {{"seed", table.meta.seed},
                   {"resolution", table.meta.resolution},
                   {"oversample", table.meta.oversample},
                   {"timestamp", table.meta.timestamp}};
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json r;
    r["d"] = row.d;
    r["p"] = row.p;
    r["N"] = row.N;
    r["num"] = row.numerator;
    r["den"] = row.denominator;
    r["ratio"] = row.ratio;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

RateTable table_from_json(const std::string& text) {
  const auto j = ordered_json::parse(text);
  RateTable table;
  const auto& meta = j.at("metadata");
  table.meta.seed = meta.at("seed").get<uint64_t>();
  table.meta.resolution = meta.at("resolution").get<int>();
  table.meta.oversample = meta.at("oversample").get<int>();
  table.meta.timestamp = meta.at("timestamp").get<int64_t>();
  for (const auto& r : j.at("rows")) {
    table.rows.push_back({r.at("d").get<int>(), r.at("p").get<double>(), r.at("N").get<int>(),
                          r.at("num").get<double>(), r.at("den").get<double>(), r.at("ratio").get<double>()});
  }
  return table;
}

ReportFormat report_format_from_string(const std::string& s) {
  if (s == "csv") return ReportFormat::csv;
  if (s == "json") return ReportFormat::json;
  throw std::invalid_argument("unknown report format: " + s);
}

void emit_report(const RateTable& table, ReportFormat format, const std::filesystem::path& path) {
  write_text_file(path, format == ReportFormat::csv ? table_to_csv(table) : table_to_json(table));
}

ExperimentConfig experiment_config_from_json(const std::string& text) {
  const auto j = ordered_json::parse(text);
  ExperimentConfig cfg;
  if (j.contains("experiment")) {
    const std::string kind = j["experiment"].get<std::string>();
    if (kind == "rate") {
      cfg.kind = ExperimentKind::rate;
    } else if (kind == "zygmund") {
      cfg.kind = ExperimentKind::zygmund;
    } else if (kind == "weaktype") {
      cfg.kind = ExperimentKind::weaktype;
    } else {
      throw std::invalid_argument("config: unknown experiment '" + kind + "'");
    }
  }
  if (j.contains("d")) cfg.d = j["d"].get<int>();
  if (j.contains("p_grid")) cfg.p_grid = j["p_grid"].get<std::vector<double>>();
  if (j.contains("n_min")) cfg.n_min = j["n_min"].get<int>();
  if (j.contains("n_max")) cfg.n_max = j["n_max"].get<int>();
  if (j.contains("orlicz_r")) cfg.orlicz_r = j["orlicz_r"].get<double>();
  if (j.contains("family")) cfg.family = family_from_string(j["family"].get<std::string>());
  if (j.contains("resolution")) cfg.resolution = j["resolution"].get<int>();
  if (j.contains("oversample")) cfg.oversample = j["oversample"].get<int>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<uint64_t>();
  if (j.contains("threads")) cfg.threads = j["threads"].get<unsigned>();
  if (j.contains("timestamp")) cfg.timestamp = j["timestamp"].get<int64_t>();
  return cfg;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << content;
  if (!out.flush()) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace lpsq
