#pragma once

#include <compare>
#include <cstdint>

namespace pixgrid {

/// Physical lattice of square pixels. Row 0 is the top row, column 0 the
/// left column; the grid frame has its origin at the lower-left corner of
/// the real area with y increasing upward.
struct GridSpec {
  double size = 1.0;  // pixel edge
  double gap = 0.0;   // dead space between neighbouring pixels
  int rows = 1;
  int cols = 1;

  double pitch() const { return size + gap; }
  double fill_factor() const { return (size * size) / (pitch() * pitch()); }

  /// Throws std::invalid_argument when the lattice is degenerate.
  void validate() const;
};

struct PixelIndex {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const PixelIndex&, const PixelIndex&) = default;
};

struct Circle {
  double cx = 0.0;
  double cy = 0.0;
  double radius = 0.0;
};

/// Pixel bounds in the grid frame.
struct GridRect {
  double xl = 0.0;
  double xr = 0.0;
  double yb = 0.0;
  double yt = 0.0;
};

/// Inclusive index ranges. Bounds may lie outside the real area for an
/// unclamped window; candidate_window always returns clamped bounds.
struct IndexWindow {
  std::int64_t row_min = 0;
  std::int64_t row_max = -1;
  std::int64_t col_min = 0;
  std::int64_t col_max = -1;

  bool empty() const { return row_min > row_max || col_min > col_max; }
  std::int64_t row_count() const { return empty() ? 0 : row_max - row_min + 1; }
  std::int64_t col_count() const { return empty() ? 0 : col_max - col_min + 1; }
  std::int64_t count() const { return row_count() * col_count(); }
  bool contains(PixelIndex idx) const {
    return idx.row >= row_min && idx.row <= row_max && idx.col >= col_min &&
           idx.col <= col_max;
  }
};

struct Extent {
  double width = 0.0;
  double height = 0.0;
};

bool is_real(const GridSpec& grid, PixelIndex idx);

/// Bounds of the pixel (or virtual square) at `idx`:
/// xl = col*pitch, yt = (rows-1-row)*pitch + size.
GridRect pixel_rect(const GridSpec& grid, PixelIndex idx);

/// Width and height of the real area, (n-1)*pitch + size.
Extent grid_extent(const GridSpec& grid);

/// Half-width of the candidate index square, ceil(R / pitch). Quotients
/// within a few rounding units of an integer snap to that integer so that
/// R = a*pitch yields exactly a.
std::int64_t window_half_width(const GridSpec& grid, double radius);

/// Index square of side 2K+1 centred on the cell hit by the circle centre,
/// before clamping to the real area.
IndexWindow unclamped_window(const GridSpec& grid, const Circle& circle);

/// Conservative set of real pixels that may intersect the circle: every
/// pixel with positive intersection area lies inside the returned window.
IndexWindow candidate_window(const GridSpec& grid, const Circle& circle);

}  // namespace pixgrid
