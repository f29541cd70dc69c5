#include "ipgp/io.hpp"

#include <unistd.h>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ipgp/version.hpp"
#include "json.hpp"

namespace ipgp {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_label(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt_px(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

ordered_json coeff_array(const IntPoly& p) {
  ordered_json arr = ordered_json::array();
  if (p.degree() < 0) {
    arr.push_back("0");
    return arr;
  }
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i).get_str());
  return arr;
}

IntPoly poly_from_coeff_array(const ordered_json& arr) {
  if (!arr.is_array() || arr.empty())
    throw std::runtime_error("polynomial JSON: \"coeffs\" must be a nonempty array");
  std::vector<mpz_class> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& entry : arr) {
    if (!entry.is_string())
      throw std::runtime_error("polynomial JSON: coefficients must be decimal strings");
    coeffs.emplace_back(entry.get<std::string>(), 10);
  }
  return IntPoly(std::move(coeffs));
}

ordered_json parse_checked(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("invalid JSON: expected an object");
  if (!j.contains("schema") || !j["schema"].is_number_integer() || j["schema"].get<int>() != 1)
    throw std::runtime_error("invalid JSON: unsupported or missing \"schema\" (expected 1)");
  return j;
}

std::string iso8601_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string poly_to_json(const IntPoly& p) {
  ordered_json j;
  j["schema"] = 1;
  j["coeffs"] = coeff_array(p);
  return j.dump(2) + "\n";
}

IntPoly poly_from_json(const std::string& text) {
  const ordered_json j = parse_checked(text);
  if (!j.contains("coeffs")) throw std::runtime_error("polynomial JSON: missing \"coeffs\"");
  return poly_from_coeff_array(j["coeffs"]);
}

std::string result_to_json(const GPParams& params, const IntPoly& p) {
  ordered_json j;
  j["schema"] = 1;
  j["n"] = params.n;
  j["k"] = params.k;
  j["coeffs"] = coeff_array(p);
  j["alpha"] = p.degree();
  return j.dump(2) + "\n";
}

IntPoly result_from_json(const std::string& text, GPParams* params_out) {
  const ordered_json j = parse_checked(text);
  for (const char* key : {"n", "k", "alpha"})
    if (!j.contains(key) || !j[key].is_number_integer())
      throw std::runtime_error(std::string("result JSON: missing integer field \"") + key + "\"");
  if (!j.contains("coeffs")) throw std::runtime_error("result JSON: missing \"coeffs\"");
  IntPoly p = poly_from_coeff_array(j["coeffs"]);
  if (p.degree() != j["alpha"].get<int>())
    throw std::runtime_error("result JSON: \"alpha\" does not match the coefficient degree");
  if (params_out) *params_out = GPParams{j["n"].get<int>(), j["k"].get<int>()};
  return p;
}

std::string roots_to_csv(const GPParams& params, const RootReport& report) {
  std::string out = "n,k,root_index,re,im,residual\n";
  for (size_t i = 0; i < report.roots.size(); ++i) {
    const NumericRoot& r = report.roots[i];
    out += std::to_string(params.n) + "," + std::to_string(params.k) + "," + std::to_string(i) +
           "," + fmt17(r.re) + "," + fmt17(r.im) + "," + fmt17(r.residual) + "\n";
  }
  return out;
}

std::string sweep_to_csv(const std::vector<ConjectureRow>& rows) {
  std::string out =
      "n,k,degree,real_count,real_rooted,parity_prediction,agrees,max_im,min_re,max_re\n";
  for (const ConjectureRow& row : rows) {
    if (row.failed) continue;
    out += std::to_string(row.n) + "," + std::to_string(row.k) + "," + std::to_string(row.degree) +
           "," + std::to_string(row.exact_real_count) + "," + bool_str(row.is_real_rooted) + "," +
           bool_str(row.parity_prediction) + "," + bool_str(row.agrees) + "," + fmt17(row.max_im) +
           "," + fmt17(row.min_re) + "," + fmt17(row.max_re) + "\n";
  }
  return out;
}

std::string sweep_to_json(const SweepResult& result) {
  ordered_json j;
  j["schema"] = 1;
  ordered_json rows = ordered_json::array();
  for (const ConjectureRow& row : result.rows) {
    ordered_json r;
    r["n"] = row.n;
    r["k"] = row.k;
    if (row.failed) {
      r["failed"] = true;
      r["error"] = row.error;
    } else {
      r["degree"] = row.degree;
      r["real_count"] = row.exact_real_count;
      r["real_rooted"] = row.is_real_rooted;
      r["parity_prediction"] = row.parity_prediction;
      r["agrees"] = row.agrees;
      r["max_im"] = row.max_im;
      r["min_re"] = row.min_re;
      r["max_re"] = row.max_re;
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

namespace {

struct PanelBounds {
  double xmin, xmax, ymin, ymax;
};

PanelBounds padded_bounds(double xmin, double xmax, double ymin, double ymax) {
  if (xmax - xmin < 1e-12) {
    xmin -= 0.5;
    xmax += 0.5;
  }
  if (ymax - ymin < 1e-12) {
    ymin -= 0.5;
    ymax += 0.5;
  }
  const double xpad = 0.08 * (xmax - xmin);
  const double ypad = 0.08 * (ymax - ymin);
  return {xmin - xpad, xmax + xpad, ymin - ypad, ymax + ypad};
}

void append_panel(std::string& svg, const RootReport& report, const PanelBounds& b, double ox,
                  double oy, double w, double h, const std::string& subtitle, bool nonreal_only) {
  auto px = [&](double x) { return ox + (x - b.xmin) / (b.xmax - b.xmin) * w; };
  auto py = [&](double y) { return oy + h - (y - b.ymin) / (b.ymax - b.ymin) * h; };

  svg += "<rect x=\"" + fmt_px(ox) + "\" y=\"" + fmt_px(oy) + "\" width=\"" + fmt_px(w) +
         "\" height=\"" + fmt_px(h) + "\" fill=\"white\" stroke=\"#333\"/>\n";
  // real axis (im = 0)
  if (b.ymin < 0.0 && b.ymax > 0.0)
    svg += "<line x1=\"" + fmt_px(ox) + "\" y1=\"" + fmt_px(py(0)) + "\" x2=\"" + fmt_px(ox + w) +
           "\" y2=\"" + fmt_px(py(0)) + "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  // imaginary axis (re = 0)
  if (b.xmin < 0.0 && b.xmax > 0.0)
    svg += "<line x1=\"" + fmt_px(px(0)) + "\" y1=\"" + fmt_px(oy) + "\" x2=\"" + fmt_px(px(0)) +
           "\" y2=\"" + fmt_px(oy + h) + "\" stroke=\"#999\" stroke-width=\"1\"/>\n";

  for (const NumericRoot& r : report.roots) {
    const bool real = (r.im == 0.0);
    if (nonreal_only && real) continue;
    if (r.re < b.xmin || r.re > b.xmax || r.im < b.ymin || r.im > b.ymax) continue;
    svg += "<circle cx=\"" + fmt_px(px(r.re)) + "\" cy=\"" + fmt_px(py(r.im)) + "\" r=\"3.5\" fill=\"" +
           (real ? std::string("#1f77b4") : std::string("#d62728")) + "\" fill-opacity=\"0.85\"/>\n";
  }

  svg += "<text x=\"" + fmt_px(ox + w / 2) + "\" y=\"" + fmt_px(oy - 8) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" + subtitle +
         "</text>\n";
  svg += "<text x=\"" + fmt_px(ox) + "\" y=\"" + fmt_px(oy + h + 16) +
         "\" font-family=\"sans-serif\" font-size=\"11\">Re: [" + fmt_label(b.xmin) + ", " +
         fmt_label(b.xmax) + "]</text>\n";
  svg += "<text x=\"" + fmt_px(ox) + "\" y=\"" + fmt_px(oy + h + 32) +
         "\" font-family=\"sans-serif\" font-size=\"11\">Im: [" + fmt_label(b.ymin) + ", " +
         fmt_label(b.ymax) + "]</text>\n";
}

}  // namespace

std::string roots_to_svg(const GPParams& params, const RootReport& report) {
  bool has_nonreal = false;
  double min_re = 0.0, max_re = 0.0, max_abs_im = 0.0;
  double nr_min_re = 0.0, nr_max_re = 0.0, nr_max_abs_im = 0.0;
  bool first = true, nr_first = true;
  for (const NumericRoot& r : report.roots) {
    if (first || r.re < min_re) min_re = r.re;
    if (first || r.re > max_re) max_re = r.re;
    max_abs_im = std::max(max_abs_im, std::fabs(r.im));
    first = false;
    if (r.im != 0.0) {
      has_nonreal = true;
      if (nr_first || r.re < nr_min_re) nr_min_re = r.re;
      if (nr_first || r.re > nr_max_re) nr_max_re = r.re;
      nr_max_abs_im = std::max(nr_max_abs_im, std::fabs(r.im));
      nr_first = false;
    }
  }

  const double panel_w = 480.0, panel_h = 380.0;
  const double width = has_nonreal ? 1120.0 : 560.0;
  const double height = 500.0;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt_px(width) + "\" height=\"" +
         fmt_px(height) + "\" viewBox=\"0 0 " + fmt_px(width) + " " + fmt_px(height) + "\">\n";
  svg += "<desc>ipgp " + std::string(kToolVersion) + "</desc>\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + fmt_px(width / 2) + "\" y=\"28\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"18\">GP(" + std::to_string(params.n) + "," +
         std::to_string(params.k) + ")</text>\n";

  const PanelBounds global = padded_bounds(min_re, max_re, -max_abs_im, max_abs_im);
  append_panel(svg, report, global, 40.0, 60.0, panel_w, panel_h, "all roots", false);
  if (has_nonreal) {
    const PanelBounds zoom = padded_bounds(nr_min_re, nr_max_re, -nr_max_abs_im, nr_max_abs_im);
    append_panel(svg, report, zoom, 600.0, 60.0, panel_w, panel_h, "non-real cluster", true);
  }
  svg += "</svg>\n";
  return svg;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read failed: " + path.string());
  return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path dir = path.parent_path();
  if (dir.empty()) dir = ".";
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create directory: " + dir.string());

  static std::atomic<unsigned> counter{0};
  const std::filesystem::path tmp =
      dir / (".tmp-" + std::to_string(::getpid()) + "-" + std::to_string(counter.fetch_add(1)) +
             "-" + path.filename().string());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + tmp.string());
    out << content;
    out.flush();
    if (!out.good()) {
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("write failed: " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot move temp file into place: " + path.string());
  }
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ResultCache::default_dir() {
  const char* env = std::getenv("IPGP_CACHE_DIR");
  if (env != nullptr && env[0] != '\0') return env;
  return "./.ipgp-cache";
}

std::filesystem::path ResultCache::entry_path(const GPParams& params) const {
  return dir_ / ("gp_" + std::to_string(params.n) + "_" + std::to_string(params.k) + ".json");
}

std::optional<IntPoly> ResultCache::lookup(const GPParams& params) const {
  try {
    const std::string text = read_file(entry_path(params));
    const auto j = nlohmann::ordered_json::parse(text);
    if (!j.is_object() || !j.contains("schema") || j["schema"].get<int>() != 1) return std::nullopt;
    if (j["n"].get<int>() != params.n || j["k"].get<int>() != params.k) return std::nullopt;
    if (!j.contains("tool_version") || j["tool_version"].get<std::string>() != kToolVersion)
      return std::nullopt;
    IntPoly p = poly_from_coeff_array(j.at("coeffs"));
    if (j.contains("alpha") && p.degree() != j["alpha"].get<int>()) return std::nullopt;
    return p;
  } catch (...) {
    return std::nullopt;  // unreadable or stale entries are misses
  }
}

void ResultCache::store(const GPParams& params, const IntPoly& p) const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["n"] = params.n;
  j["k"] = params.k;
  j["coeffs"] = coeff_array(p);
  j["alpha"] = p.degree();
  j["tool_version"] = kToolVersion;
  j["created_at"] = iso8601_utc_now();
  write_file_atomic(entry_path(params), j.dump(2) + "\n");
}

}  // namespace ipgp
