#include "pixgrid/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pixgrid {

namespace {

// Keeps far off-grid windows representable; such windows clamp to empty.
constexpr double kIndexLimit = 1e15;

std::int64_t to_index(double v) {
  return static_cast<std::int64_t>(std::clamp(v, -kIndexLimit, kIndexLimit));
}

}  // namespace

void GridSpec::validate() const {
  if (!(size > 0.0) || !std::isfinite(size)) {
    throw std::invalid_argument("pixel size must be positive and finite");
  }
  if (!(gap >= 0.0) || !std::isfinite(gap)) {
    throw std::invalid_argument("gap must be non-negative and finite");
  }
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("grid needs at least one row and one column");
  }
}

bool is_real(const GridSpec& grid, PixelIndex idx) {
  return idx.row >= 0 && idx.row < grid.rows && idx.col >= 0 &&
         idx.col < grid.cols;
}

GridRect pixel_rect(const GridSpec& grid, PixelIndex idx) {
  const double pitch = grid.pitch();
  GridRect r;
  r.xl = idx.col * pitch;
  r.xr = r.xl + grid.size;
  r.yt = (grid.rows - 1 - idx.row) * pitch + grid.size;
  r.yb = r.yt - grid.size;
  return r;
}

Extent grid_extent(const GridSpec& grid) {
  const double pitch = grid.pitch();
  return {(grid.cols - 1) * pitch + grid.size,
          (grid.rows - 1) * pitch + grid.size};
}

std::int64_t window_half_width(const GridSpec& grid, double radius) {
  const double q = radius / grid.pitch();
  const double nearest = std::round(q);
  if (std::abs(q - nearest) <= 4.0 * std::numeric_limits<double>::epsilon() * q) {
    return to_index(nearest);
  }
  return to_index(std::ceil(q));
}

IndexWindow unclamped_window(const GridSpec& grid, const Circle& circle) {
  const double pitch = grid.pitch();
  const double height = grid_extent(grid).height;
  const std::int64_t col_hit = to_index(std::floor(circle.cx / pitch));
  const std::int64_t row_hit = to_index(std::floor((height - circle.cy) / pitch));
  const std::int64_t k = window_half_width(grid, circle.radius);
  return {row_hit - k, row_hit + k, col_hit - k, col_hit + k};
}

IndexWindow candidate_window(const GridSpec& grid, const Circle& circle) {
  IndexWindow w = unclamped_window(grid, circle);
  w.row_min = std::max<std::int64_t>(w.row_min, 0);
  w.row_max = std::min<std::int64_t>(w.row_max, grid.rows - 1);
  w.col_min = std::max<std::int64_t>(w.col_min, 0);
  w.col_max = std::min<std::int64_t>(w.col_max, grid.cols - 1);
  if (w.empty()) {
    return IndexWindow{};
  }
  return w;
}

}  // namespace pixgrid
