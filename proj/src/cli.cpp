#include "pixgrid/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pixgrid/areas.hpp"

namespace pixgrid::cli {

namespace {

constexpr int kPgmMax = 65535;

std::vector<std::vector<double>> fraction_raster(const CoverageMap& map) {
  std::vector<std::vector<double>> raster(
      static_cast<std::size_t>(map.grid.rows),
      std::vector<double>(static_cast<std::size_t>(map.grid.cols), 0.0));
  for (const auto& e : map.entries) {
    raster[static_cast<std::size_t>(e.index.row)][static_cast<std::size_t>(e.index.col)] =
        e.fraction;
  }
  return raster;
}

// Checks shared by every subcommand before the pipeline runs.
std::optional<std::string> validation_error(const RunOptions& o) {
  const auto& g = o.grid;
  if (!(g.size > 0.0) || !std::isfinite(g.size)) return "--size must be positive";
  if (!(g.gap >= 0.0) || !std::isfinite(g.gap)) return "--gap must be non-negative";
  if (g.rows < 1 || g.cols < 1) return "--rows and --cols must be at least 1";
  if (!std::isfinite(o.circle.cx) || !std::isfinite(o.circle.cy)) {
    return "--cx and --cy must be finite";
  }
  if (!(o.circle.radius > 2.0 * g.size) || !std::isfinite(o.circle.radius)) {
    return "--radius must be more than twice --size";
  }
  if (!(o.classify.eps_rel >= 0.0 && o.classify.eps_rel < 1e-6)) {
    return std::string(kEpsEnv) + " must lie in [0, 1e-6)";
  }
  return std::nullopt;
}

// Runs the pipeline, reporting failures through the exit-code contract.
int build_map(const RunOptions& opts, std::ostream& err, CoverageMap& map) {
  if (auto msg = validation_error(opts)) {
    err << "error: " << *msg << "\n";
    return kExitInvalid;
  }
  try {
    map = compute_coverage(opts.grid, opts.circle, opts.classify);
  } catch (const PixelUnrealizable& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const DispatchError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  if (opts.check_oracle) {
    const double tol = 1e-8 * opts.grid.size * opts.grid.size;
    OracleConfig oc;
    oc.abs_tol = 1e-12 * opts.grid.size * opts.grid.size;
    const VerificationReport report = verify_map(map, oc, tol);
    if (!report.pass) {
      err << "oracle check failed: max deviation "
          << format_double(report.max_deviation) << ", max outside area "
          << format_double(report.max_outside_area) << ", pixels:";
      for (const auto& idx : report.offending) {
        err << " (" << idx.row << "," << idx.col << ")";
      }
      err << "\n";
      return kExitOracle;
    }
  }
  return kExitOk;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const CoverageMap& map, std::ostream& out) {
  out << "row,col,code,area,fraction\n";
  for (const auto& e : map.entries) {
    out << e.index.row << ',' << e.index.col << ',' << e.code.str() << ','
        << format_double(e.area) << ',' << format_double(e.fraction) << '\n';
  }
}

void write_json(const CoverageMap& map, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["grid"] = {{"size", map.grid.size},
                 {"gap", map.grid.gap},
                 {"rows", map.grid.rows},
                 {"cols", map.grid.cols}};
  doc["circle"] = {{"cx", map.circle.cx},
                   {"cy", map.circle.cy},
                   {"radius", map.circle.radius}};
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : map.entries) {
    entries.push_back({{"row", e.index.row},
                       {"col", e.index.col},
                       {"code", e.code.str()},
                       {"area", e.area},
                       {"fraction", e.fraction}});
  }
  doc["entries"] = std::move(entries);
  doc["total_area"] = total_covered_area(map);
  out << doc.dump(2) << '\n';
}

void write_pgm(const CoverageMap& map, std::ostream& out) {
  out << "P2\n" << map.grid.cols << ' ' << map.grid.rows << '\n' << kPgmMax << '\n';
  for (const auto& row : fraction_raster(map)) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ' ';
      out << std::lround(row[c] * kPgmMax);
    }
    out << '\n';
  }
}

int run_coverage(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  CoverageMap map;
  if (const int rc = build_map(opts, err, map); rc != kExitOk) {
    return rc;
  }
  switch (opts.format) {
    case OutputFormat::Csv: write_csv(map, out); break;
    case OutputFormat::Json: write_json(map, out); break;
    case OutputFormat::Pgm: write_pgm(map, out); break;
  }
  return kExitOk;
}

int run_total(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  CoverageMap map;
  if (const int rc = build_map(opts, err, map); rc != kExitOk) {
    return rc;
  }
  out << format_double(total_covered_area(map)) << '\n';
  return kExitOk;
}

int run_cases(std::ostream& out) {
  for (int i = 0; i < 81; ++i) {
    const LocationCode code = LocationCode::from_ordinal(i);
    const auto family = family_of(code);
    out << code.str();
    if (family) {
      out << " realizable " << family_name(*family) << '\n';
    } else {
      out << " unrealizable\n";
    }
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact circle coverage of a gapped square pixel grid", "pixgrid"};
  app.require_subcommand(1);

  RunOptions opts;
  std::optional<double> gap;
  std::optional<double> fill_factor;
  std::string format = "csv";

  auto add_geometry = [&](CLI::App* sub) {
    sub->add_option("--size", opts.grid.size, "Pixel edge length")->required();
    sub->add_option("--gap", gap, "Gap between neighbouring pixels");
    sub->add_option("--fill-factor", fill_factor, "size^2 / pitch^2, in (0, 1]");
    sub->add_option("--rows", opts.grid.rows, "Number of pixel rows")->required();
    sub->add_option("--cols", opts.grid.cols, "Number of pixel columns")->required();
    sub->add_option("--cx", opts.circle.cx, "Circle centre x (grid frame)")->required();
    sub->add_option("--cy", opts.circle.cy, "Circle centre y (grid frame)")->required();
    sub->add_option("--radius", opts.circle.radius, "Circle radius")->required();
    sub->add_flag("--check-oracle", opts.check_oracle,
                  "Cross-check every pixel against numerical quadrature");
  };

  CLI::App* coverage = app.add_subcommand("coverage", "Per-pixel coverage map");
  add_geometry(coverage);
  coverage->add_option("--format", format, "csv, json or pgm")
      ->check(CLI::IsMember({"csv", "json", "pgm"}));
  CLI::App* total = app.add_subcommand("total", "Total covered area");
  add_geometry(total);
  app.add_subcommand("cases", "List location codes and their families");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  if (app.got_subcommand("cases")) {
    return run_cases(out);
  }

  if (gap && fill_factor) {
    err << "error: --gap and --fill-factor are mutually exclusive\n";
    return kExitInvalid;
  }
  if (fill_factor) {
    if (!(*fill_factor > 0.0 && *fill_factor <= 1.0)) {
      err << "error: --fill-factor must lie in (0, 1]\n";
      return kExitInvalid;
    }
    opts.grid.gap = opts.grid.size * (1.0 / std::sqrt(*fill_factor) - 1.0);
  } else {
    opts.grid.gap = gap.value_or(0.0);
  }

  if (const char* env = std::getenv(kEpsEnv); env && *env) {
    char* end = nullptr;
    const double eps = std::strtod(env, &end);
    if (end == env || *end != '\0') {
      err << "error: " << kEpsEnv << " is not a number\n";
      return kExitInvalid;
    }
    opts.classify.eps_rel = eps;
  }

  if (format == "json") {
    opts.format = OutputFormat::Json;
  } else if (format == "pgm") {
    opts.format = OutputFormat::Pgm;
  }

  if (app.got_subcommand("total")) {
    return run_total(opts, out, err);
  }
  return run_coverage(opts, out, err);
}

}  // namespace pixgrid::cli
