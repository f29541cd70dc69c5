#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ipgp/analysis.hpp"
#include "ipgp/gp_graph.hpp"
#include "ipgp/int_poly.hpp"
#include "ipgp/roots.hpp"

namespace ipgp {

// Coefficients travel as decimal strings so values beyond 64 bits round-trip
// bit-exactly.  All JSON outputs carry "schema": 1.

// {"schema":1,"coeffs":["1","10",...]}
std::string poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const std::string& text);

// {"schema":1,"n":...,"k":...,"coeffs":[...],"alpha":degree}
std::string result_to_json(const GPParams& params, const IntPoly& p);
IntPoly result_from_json(const std::string& text, GPParams* params_out = nullptr);

// header "n,k,root_index,re,im,residual", one row per root, 17 significant digits
std::string roots_to_csv(const GPParams& params, const RootReport& report);

// header "n,k,degree,real_count,real_rooted,parity_prediction,agrees,max_im,min_re,max_re";
// rows with failed=true are omitted here (they carry no numbers) but kept in the JSON
std::string sweep_to_csv(const std::vector<ConjectureRow>& rows);

// {"schema":1,"rows":[...]} with one object per row, error rows included
std::string sweep_to_json(const SweepResult& result);

// Deterministic scatter plot of the roots in the complex plane: a global
// panel, plus a zoom panel on the non-real cluster when one exists.
std::string roots_to_svg(const GPParams& params, const RootReport& report);

std::string read_file(const std::filesystem::path& path);
// Writes via a temp file in the same directory followed by an atomic rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

// On-disk polynomial cache keyed by (n, k, tool version).  Entries from other
// tool versions (or unreadable files) are treated as misses and overwritten.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  // IPGP_CACHE_DIR environment variable, else ./.ipgp-cache
  static std::filesystem::path default_dir();

  std::optional<IntPoly> lookup(const GPParams& params) const;
  void store(const GPParams& params, const IntPoly& p) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path entry_path(const GPParams& params) const;
  std::filesystem::path dir_;
};

}  // namespace ipgp
