#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ipgp/analysis.hpp"
#include "ipgp/gp_graph.hpp"
#include "ipgp/int_poly.hpp"
#include "ipgp/io.hpp"
#include "ipgp/oracle.hpp"
#include "ipgp/roots.hpp"
#include "ipgp/transfer.hpp"
#include "ipgp/version.hpp"

namespace {

// Exit codes (stable; scripts may rely on them):
//   0 success
//   1 invalid parameters or flags
//   2 I/O or internal failure
//   3 verification mismatch
//   4 oracle cap exceeded
//   5 root finding did not converge (partial output written)
//  10 parity-conjecture counterexample found by sweep
enum ExitCode : int {
  kOk = 0,
  kInvalidParams = 1,
  kIoFailure = 2,
  kVerifyMismatch = 3,
  kOracleCapExceeded = 4,
  kRootsNotConverged = 5,
  kCounterexample = 10,
};

int parse_int_strict(const std::string& s, const std::string& what) {
  size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": not an integer: '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument(what + ": not an integer: '" + s + "'");
  return value;
}

// "--n" accepts either a single integer or an inclusive range "a..b".
std::pair<int, int> parse_n_range(const std::string& s) {
  const size_t dots = s.find("..");
  if (dots == std::string::npos) {
    const int n = parse_int_strict(s, "--n");
    return {n, n};
  }
  const int lo = parse_int_strict(s.substr(0, dots), "--n range start");
  const int hi = parse_int_strict(s.substr(dots + 2), "--n range end");
  if (lo > hi) throw std::invalid_argument("--n: empty range '" + s + "'");
  return {lo, hi};
}

int parse_n_single(const std::string& s) {
  if (s.find("..") != std::string::npos)
    throw std::invalid_argument("--n: ranges are only valid for 'sweep'");
  return parse_int_strict(s, "--n");
}

std::vector<int> parse_k_list(const std::string& s) {
  std::vector<int> ks;
  size_t start = 0;
  while (start <= s.size()) {
    const size_t comma = s.find(',', start);
    const std::string item =
        s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (item.empty()) throw std::invalid_argument("--k: empty entry in list '" + s + "'");
    ks.push_back(parse_int_strict(item, "--k"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (ks.empty()) throw std::invalid_argument("--k: empty list");
  return ks;
}

int parse_k_single(const std::string& s) {
  const std::vector<int> ks = parse_k_list(s);
  if (ks.size() != 1) throw std::invalid_argument("--k: exactly one value expected here");
  return ks[0];
}

// The environment variable takes precedence over the flag.
std::filesystem::path resolve_cache_dir(const std::string& flag_value) {
  const char* env = std::getenv("IPGP_CACHE_DIR");
  if (env != nullptr && env[0] != '\0') return env;
  return flag_value;
}

ipgp::IntPoly cached_polynomial(const ipgp::GPParams& params, const ipgp::ResultCache& cache,
                                int threads) {
  if (auto hit = cache.lookup(params)) return std::move(*hit);
  ipgp::IntPoly poly = ipgp::independence_polynomial(params, threads);
  cache.store(params, poly);
  return poly;
}

struct CommonFlags {
  std::string n_arg;
  std::string k_arg;
  std::string out_path;
  std::string svg_path;
  std::string csv_path;
  std::string cache_dir = "./.ipgp-cache";
  long precision_bits = 128;
  int threads = 0;  // 0 = all hardware threads
};

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--n", f.n_arg, "n parameter (sweep also accepts an inclusive range a..b)")
      ->required();
  cmd->add_option("--k", f.k_arg, "k parameter (sweep accepts a comma-separated list)")
      ->required();
  cmd->add_option("--out", f.out_path, "output path (compute: JSON file; sweep: directory)");
  cmd->add_option("--svg", f.svg_path, "write a root scatter plot SVG here");
  cmd->add_option("--csv", f.csv_path, "write CSV output here");
  cmd->add_option("--cache-dir", f.cache_dir, "polynomial cache directory")
      ->capture_default_str();
  cmd->add_option("--precision-bits", f.precision_bits, "starting root-finder precision")
      ->capture_default_str();
  cmd->add_option("--threads", f.threads, "worker threads (0 = all)")->capture_default_str();
}

ipgp::RootFindOptions root_options(const CommonFlags& f) {
  ipgp::RootFindOptions opts;
  opts.precision_bits = std::max(f.precision_bits, 2L);
  opts.max_precision_bits = std::max(opts.precision_bits, 1024L);
  return opts;
}

int cmd_compute(const CommonFlags& f) {
  const ipgp::GPParams params =
      ipgp::validate_params(parse_n_single(f.n_arg), parse_k_single(f.k_arg));
  const ipgp::ResultCache cache(resolve_cache_dir(f.cache_dir));
  const ipgp::IntPoly poly = cached_polynomial(params, cache, f.threads);
  const std::string json = ipgp::result_to_json(params, poly);
  if (!f.out_path.empty())
    ipgp::write_file_atomic(f.out_path, json);
  else
    std::cout << json;
  std::cout << "GP(" << params.n << "," << params.k << "): degree " << poly.degree() << ", "
            << poly.degree() + 1 << " coefficients\n";
  return kOk;
}

int cmd_verify(const CommonFlags& f) {
  const ipgp::GPParams params =
      ipgp::validate_params(parse_n_single(f.n_arg), parse_k_single(f.k_arg));
  const ipgp::Graph g = ipgp::build_gp(params);
  if (g.vertex_count > ipgp::kOracleVertexCap) {
    std::cerr << "error: oracle cap exceeded (" << g.vertex_count << " vertices > "
              << ipgp::kOracleVertexCap << ")\n";
    return kOracleCapExceeded;
  }
  const ipgp::IntPoly transfer = ipgp::independence_polynomial(params, f.threads);
  const ipgp::IntPoly oracle = ipgp::census_to_poly(ipgp::census(g));
  if (transfer == oracle) {
    std::cout << "MATCH: Ind(GP(" << params.n << "," << params.k << "), x) = "
              << transfer.to_string() << "\n";
    return kOk;
  }
  std::cout << "MISMATCH for GP(" << params.n << "," << params.k << "):\n";
  const int top = std::max(transfer.degree(), oracle.degree());
  for (int i = 0; i <= top; ++i) {
    const mpz_class a = transfer.coeff(i);
    const mpz_class b = oracle.coeff(i);
    if (a != b)
      std::cout << "  x^" << i << ": transfer=" << a.get_str() << " oracle=" << b.get_str()
                << "\n";
  }
  return kVerifyMismatch;
}

int cmd_roots(const CommonFlags& f) {
  const ipgp::GPParams params =
      ipgp::validate_params(parse_n_single(f.n_arg), parse_k_single(f.k_arg));
  const ipgp::ResultCache cache(resolve_cache_dir(f.cache_dir));
  const ipgp::IntPoly poly = cached_polynomial(params, cache, f.threads);
  const ipgp::RootReport report = ipgp::find_roots(poly, root_options(f));

  const std::string csv = ipgp::roots_to_csv(params, report);
  if (!f.csv_path.empty())
    ipgp::write_file_atomic(f.csv_path, csv);
  else
    std::cout << csv;
  if (!f.svg_path.empty()) ipgp::write_file_atomic(f.svg_path, ipgp::roots_to_svg(params, report));

  std::ostream& info = f.csv_path.empty() ? std::cerr : std::cout;
  info << "GP(" << params.n << "," << params.k << "): degree " << report.degree
       << ", exact real count " << report.exact_real_count << ", real-rooted: "
       << (report.is_real_rooted ? "yes" : "no") << ", max residual ";
  {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", report.max_residual);
    info << buf << "\n";
  }

  if (!report.converged || !report.pairing_ok) {
    if (!report.converged)
      std::cerr << "warning: " << report.failed_indices.size()
                << " root(s) missed the residual target; partial results written\n";
    if (!report.pairing_ok)
      std::cerr << "warning: conjugate pairing failed beyond tolerance\n";
    return kRootsNotConverged;
  }
  return kOk;
}

int cmd_sweep(const CommonFlags& f) {
  const auto [n_min, n_max] = parse_n_range(f.n_arg);
  const std::vector<int> ks = parse_k_list(f.k_arg);
  const ipgp::ResultCache cache(resolve_cache_dir(f.cache_dir));

  const size_t pair_estimate = static_cast<size_t>(n_max - n_min + 1) * ks.size();
  const int per_pair_threads = pair_estimate > 1 ? 1 : f.threads;

  ipgp::SweepOptions opts;
  opts.root_options = root_options(f);
  opts.threads = f.threads;
  opts.provider = [&cache, per_pair_threads](const ipgp::GPParams& p) {
    return cached_polynomial(p, cache, per_pair_threads);
  };

  const ipgp::SweepResult result = ipgp::sweep_conjecture(n_min, n_max, ks, opts);

  for (const ipgp::GPParams& p : result.skipped)
    std::cout << "notice: skipped invalid pair (n=" << p.n << ", k=" << p.k << ")\n";

  std::printf("%5s %3s %7s %11s %12s %11s %7s\n", "n", "k", "degree", "real_count", "real_rooted",
              "prediction", "agrees");
  for (const ipgp::ConjectureRow& row : result.rows) {
    if (row.failed) {
      std::printf("%5d %3d  FAILED: %s\n", row.n, row.k, row.error.c_str());
      continue;
    }
    std::printf("%5d %3d %7d %11ld %12s %11s %7s\n", row.n, row.k, row.degree,
                row.exact_real_count, row.is_real_rooted ? "true" : "false",
                row.parity_prediction ? "true" : "false", row.agrees ? "true" : "false");
  }

  const std::filesystem::path out_dir = f.out_path.empty() ? "." : f.out_path;
  const std::filesystem::path csv_path =
      f.csv_path.empty() ? out_dir / "sweep.csv" : std::filesystem::path(f.csv_path);
  ipgp::write_file_atomic(csv_path, ipgp::sweep_to_csv(result.rows));
  ipgp::write_file_atomic(out_dir / "sweep.json", ipgp::sweep_to_json(result));

  bool any_failed = false;
  for (const ipgp::ConjectureRow& row : result.rows) any_failed |= row.failed;
  if (any_failed) std::cerr << "warning: some pairs failed to compute; see the JSON report\n";

  if (result.counterexample_found) {
    std::cout << "COUNTEREXAMPLE FOUND at (" << result.first_counterexample->n << ","
              << result.first_counterexample->k << ")\n";
    return kCounterexample;
  }
  std::cout << "PARITY CONJECTURE: consistent\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact independence polynomials of generalized Petersen graphs GP(n,k)"};
  app.set_version_flag("--version", std::string(ipgp::kToolVersion));
  app.require_subcommand(1);

  CommonFlags flags;
  CLI::App* compute = app.add_subcommand("compute", "compute Ind(GP(n,k),x) exactly");
  CLI::App* verify =
      app.add_subcommand("verify", "cross-check the transfer matrix against brute force");
  CLI::App* roots = app.add_subcommand("roots", "locate all roots and certify realness");
  CLI::App* sweep = app.add_subcommand("sweep", "test the parity prediction over an (n,k) grid");
  for (CLI::App* cmd : {compute, verify, roots, sweep}) add_common_flags(cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidParams;
  }

  try {
    if (compute->parsed()) return cmd_compute(flags);
    if (verify->parsed()) return cmd_verify(flags);
    if (roots->parsed()) return cmd_roots(flags);
    return cmd_sweep(flags);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidParams;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoFailure;
  }
}
