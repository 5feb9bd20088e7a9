#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pixgrid/classify.hpp"
#include "pixgrid/coverage.hpp"
#include "pixgrid/grid.hpp"

namespace pixgrid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitOracle = 2;
inline constexpr int kExitInternal = 3;

// Name of the environment variable overriding the on-circle tolerance.
inline constexpr const char* kEpsEnv = "PIXGRID_EPS_REL";

enum class OutputFormat { Csv, Json, Pgm };

struct RunOptions {
  GridSpec grid;
  Circle circle;
  OutputFormat format = OutputFormat::Csv;
  bool check_oracle = false;
  ClassifyConfig classify;
};

void write_csv(const CoverageMap& map, std::ostream& out);
void write_json(const CoverageMap& map, std::ostream& out);
void write_pgm(const CoverageMap& map, std::ostream& out);

/// Doubles at 17 significant digits, enough to round-trip.
std::string format_double(double v);

int run_coverage(const RunOptions& opts, std::ostream& out, std::ostream& err);
int run_total(const RunOptions& opts, std::ostream& out, std::ostream& err);

/// Lists all 81 codes with their realizability verdict and family.
int run_cases(std::ostream& out);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pixgrid::cli
