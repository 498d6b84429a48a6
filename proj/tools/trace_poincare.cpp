#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "tracepoincare/cli.hpp"

using namespace tracepoincare;

namespace {

struct CommonFlags {
  std::optional<std::string> cache_dir;
  bool no_cache = false;
  bool json = false;
};

void add_common(CLI::App* app, CommonFlags& flags) {
  app->add_option("--cache-dir", flags.cache_dir, "Series cache directory (overrides TRACE_POINCARE_CACHE)");
  app->add_flag("--no-cache", flags.no_cache, "Do not read or write the series cache");
  app->add_flag("--json", flags.json, "Machine-readable output on stdout");
}

std::optional<molien::SeriesCache> open_cache(const CommonFlags& flags) {
  if (flags.no_cache) return std::nullopt;
  return molien::SeriesCache(cli::resolve_cache_dir(flags.cache_dir));
}

std::vector<molien::Ring> parse_rings(const std::string& text) {
  if (text == "both") return {molien::Ring::Pure, molien::Ring::Mixed};
  try {
    return {molien::parse_ring(text)};
  } catch (const std::invalid_argument&) {
    throw cli::UsageError("unknown ring '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poincare series of trace rings of generic matrices"};
  app.require_subcommand(1);

  CommonFlags compute_flags;
  int n = 2;
  int k = 2;
  std::string ring = "pure";
  std::string engine = "molien";
  std::optional<int> order;
  auto* compute = app.add_subcommand("compute", "Compute one Poincare series as a rational function");
  compute->add_option("--n", n, "Matrix size")->required();
  compute->add_option("--k", k, "Number of generic matrices")->required();
  compute->add_option("--ring", ring, "pure or mixed")->capture_default_str();
  compute->add_option("--engine", engine, "molien, closed, derivative or residue-sum")->capture_default_str();
  compute->add_option("--order", order, "Truncation order D (default: denominator degree + 10)");
  add_common(compute, compute_flags);

  CommonFlags verify_flags;
  std::string scope = "all";
  double tolerance = 0.01;
  std::optional<std::string> report_path;
  auto* verify = app.add_subcommand("verify", "Run invariant suites; exit status 0 iff all checks pass");
  verify->add_option("--scope", scope, "all, n2, n3, conjecture or asymptotics")->capture_default_str();
  verify->add_option("--tolerance", tolerance, "Allowed |ratio - 1| in the asymptotic ratio test")->capture_default_str();
  verify->add_option("--report", report_path, "Also write the JSON report to this file");
  add_common(verify, verify_flags);

  CommonFlags scan_flags;
  std::string n_range = "2..3";
  std::string k_range = "2..4";
  std::string scan_ring = "pure";
  cli::ScanOptions scan_options;
  auto* scan = app.add_subcommand("scan", "Tabulate conjectured denominators as CSV and test them where feasible");
  scan->add_option("--n", n_range, "Range a..b of matrix sizes")->capture_default_str();
  scan->add_option("--k", k_range, "Range a..b of matrix counts")->capture_default_str();
  scan->add_option("--ring", scan_ring, "pure, mixed or both")->capture_default_str();
  scan->add_option("--order", scan_options.order, "Truncation order (default: denominator degree + 10)");
  scan->add_option("--timeout", scan_options.timeout, "Per-cell time budget in seconds")->capture_default_str();
  scan->add_option("--jobs", scan_options.jobs, "Parallel cells (default: hardware threads)");
  scan->add_option("--max-molien-n", scan_options.max_molien_n, "Largest n to run the series engine on")
      ->capture_default_str();
  scan->add_flag("--probe-smaller", scan_options.probe_smaller,
                 "Also try every denominator with one cyclotomic exponent lowered by 1");
  add_common(scan, scan_flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) {
      auto cache = open_cache(compute_flags);
      cli::ComputeOptions options{{n, k, molien::parse_ring(ring)}, cli::parse_engine(engine), order,
                                  cache ? &*cache : nullptr};
      cli::ComputeResult result = cli::compute(options);
      for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
      if (compute_flags.json) {
        std::cout << cli::to_json(result).dump(2) << "\n";
      } else {
        cli::print(std::cout, result);
      }
      return 0;
    }
    if (verify->parsed()) {
      auto cache = open_cache(verify_flags);
      cli::VerifyOptions options{cli::parse_scope(scope), tolerance, cache ? &*cache : nullptr};
      verify::Report report = cli::run_verify(options);
      if (report_path) {
        std::ofstream out(*report_path);
        out << report.to_json().dump(2) << "\n";
      }
      if (verify_flags.json) {
        std::cout << report.to_json().dump(2) << "\n";
      } else {
        cli::print(std::cout, report);
      }
      return report.passed() ? 0 : 1;
    }
    if (scan->parsed()) {
      auto cache = open_cache(scan_flags);
      scan_options.n = cli::parse_range(n_range);
      scan_options.k = cli::parse_range(k_range);
      scan_options.rings = parse_rings(scan_ring);
      scan_options.cache = cache ? &*cache : nullptr;
      cli::write_csv(std::cout, cli::run_scan(scan_options));
      return 0;
    }
  } catch (const cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
