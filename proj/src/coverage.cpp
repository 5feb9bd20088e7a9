#include "pixgrid/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pixgrid {

namespace {

// Relation used to drop pixels that at most touch the circle: every side
// line lies at distance >= R from the centre.
bool beyond_radius(const CenteredRect& r, double radius) {
  return std::abs(r.x1) >= radius && std::abs(r.x3) >= radius &&
         std::abs(r.y1) >= radius && std::abs(r.y3) >= radius;
}

}  // namespace

PixelUnrealizable::PixelUnrealizable(PixelIndex index,
                                     const UnrealizableCodeError& cause)
    : std::runtime_error("pixel (" + std::to_string(index.row) + ", " +
                         std::to_string(index.col) + "): " + cause.what()),
      index_(index),
      code_(cause.code()) {}

CoverageMap compute_coverage(const GridSpec& grid, const Circle& circle,
                             const ClassifyConfig& cfg) {
  grid.validate();
  cfg.validate();
  if (!std::isfinite(circle.cx) || !std::isfinite(circle.cy)) {
    throw std::invalid_argument("circle centre must be finite");
  }
  if (!(circle.radius > 2.0 * grid.size) || !std::isfinite(circle.radius)) {
    throw RadiusTooSmall("radius must be more than twice the pixel size");
  }

  CoverageMap map{grid, circle, {}};
  const IndexWindow w = candidate_window(grid, circle);
  if (w.empty()) {
    return map;
  }
  const double area_scale = grid.size * grid.size;
  for (auto row = w.row_min; row <= w.row_max; ++row) {
    for (auto col = w.col_min; col <= w.col_max; ++col) {
      const PixelIndex idx{static_cast<int>(row), static_cast<int>(col)};
      const CenteredRect rect = to_centered(pixel_rect(grid, idx), circle);
      const LocationCode code = locate(rect, circle.radius, cfg);
      if (code.digit_sum() <= 1 && beyond_radius(rect, circle.radius)) {
        continue;
      }
      CaseResult res;
      try {
        res = intersection_area(rect, circle.radius, grid.size, code, cfg);
      } catch (const UnrealizableCodeError& e) {
        throw PixelUnrealizable(idx, e);
      }
      if (res.area > 0.0) {
        map.entries.push_back({idx, code, res.special, res.tally_row, res.area,
                               std::clamp(res.area / area_scale, 0.0, 1.0)});
      }
    }
  }
  return map;
}

double total_covered_area(const CoverageMap& map) {
  double total = 0.0;
  for (const auto& e : map.entries) {
    total += e.area;
  }
  return total;
}

VerificationReport verify_map(const CoverageMap& map, const OracleConfig& cfg,
                              double tol) {
  VerificationReport report;
  const GridSpec& grid = map.grid;
  const Circle& circle = map.circle;
  std::vector<char> in_map(static_cast<std::size_t>(grid.rows) * grid.cols, 0);

  auto flag = [&](PixelIndex idx) {
    report.pass = false;
    report.offending.push_back(idx);
  };

  for (const auto& e : map.entries) {
    ++report.pixels_checked;
    if (!is_real(grid, e.index)) {
      flag(e.index);
      continue;
    }
    in_map[static_cast<std::size_t>(e.index.row) * grid.cols + e.index.col] = 1;
    const CenteredRect rect = to_centered(pixel_rect(grid, e.index), circle);
    const double dev = std::abs(e.area - rect_circle_area(rect, circle.radius, cfg));
    report.max_deviation = std::max(report.max_deviation, dev);
    if (!(dev <= tol)) {
      flag(e.index);
    }
  }

  for (int row = 0; row < grid.rows; ++row) {
    for (int col = 0; col < grid.cols; ++col) {
      if (in_map[static_cast<std::size_t>(row) * grid.cols + col]) {
        continue;
      }
      ++report.pixels_checked;
      const PixelIndex idx{row, col};
      const CenteredRect rect = to_centered(pixel_rect(grid, idx), circle);
      const double area = rect_circle_area(rect, circle.radius, cfg);
      report.max_outside_area = std::max(report.max_outside_area, area);
      if (!(area <= tol)) {
        flag(idx);
      }
    }
  }
  std::sort(report.offending.begin(), report.offending.end());
  return report;
}

}  // namespace pixgrid
