#pragma once

#include <stdexcept>
#include <vector>

#include "pixgrid/areas.hpp"
#include "pixgrid/classify.hpp"
#include "pixgrid/grid.hpp"
#include "pixgrid/oracle.hpp"

namespace pixgrid {

/// The circle is not more than twice as large as a pixel side.
class RadiusTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An unrealizable code met while mapping one pixel.
class PixelUnrealizable : public std::runtime_error {
 public:
  PixelUnrealizable(PixelIndex index, const UnrealizableCodeError& cause);

  PixelIndex index() const { return index_; }
  LocationCode code() const { return code_; }

 private:
  PixelIndex index_;
  LocationCode code_;
};

struct CoverageEntry {
  PixelIndex index;
  LocationCode code;
  bool special = false;
  int tally_row = 0;
  double area = 0.0;
  double fraction = 0.0;  // area / size^2
};

/// Pixels with positive overlap, row-major. Vertex coordinates are not
/// stored; recompute them from grid, index and circle when needed.
struct CoverageMap {
  GridSpec grid;
  Circle circle;
  std::vector<CoverageEntry> entries;
};

/// Enumerates the candidate window, classifies each pixel, drops pixels
/// that at most touch the circle from beyond R, and keeps positive areas.
/// Throws RadiusTooSmall unless R > 2 * size.
CoverageMap compute_coverage(const GridSpec& grid, const Circle& circle,
                             const ClassifyConfig& cfg = {});

double total_covered_area(const CoverageMap& map);

struct VerificationReport {
  bool pass = true;
  double max_deviation = 0.0;     // worst |closed form - oracle| over entries
  double max_outside_area = 0.0;  // worst oracle area over pixels not in the map
  std::size_t pixels_checked = 0;
  std::vector<PixelIndex> offending;
};

/// Re-derives every entry with the oracle and scans all real pixels absent
/// from the map; both must agree within `tol`.
VerificationReport verify_map(const CoverageMap& map, const OracleConfig& cfg,
                              double tol);

}  // namespace pixgrid
