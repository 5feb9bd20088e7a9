#pragma once

#include <array>
#include <cmath>
#include <map>
#include <vector>

#include "pixgrid/areas.hpp"
#include "pixgrid/classify.hpp"

namespace pixgrid::testing {

inline CenteredRect flip_x(const CenteredRect& r) { return {-r.x3, -r.x1, r.y1, r.y3}; }
inline CenteredRect flip_y(const CenteredRect& r) { return {r.x1, r.x3, -r.y3, -r.y1}; }
inline CenteredRect swap_xy(const CenteredRect& r) { return {r.y1, r.y3, r.x1, r.x3}; }

// The eight images of a rect under the symmetries of the square.
inline std::array<CenteredRect, 8> dihedral_images(const CenteredRect& r) {
  std::array<CenteredRect, 8> out;
  std::size_t k = 0;
  for (const CenteredRect base : {r, swap_xy(r)}) {
    out[k++] = base;
    out[k++] = flip_x(base);
    out[k++] = flip_y(base);
    out[k++] = flip_x(flip_y(base));
  }
  return out;
}

struct Fixture {
  CenteredRect rect;
  double radius = 0.0;
  double size = 0.0;
};

// Hand-placed squares on a circle of radius 85, whose lattice points
// (13,84), (36,77), (51,68), (84,13), (85,0) let vertices sit on the
// circle exactly.
inline std::vector<Fixture> base_fixtures() {
  const double R = 85.0;
  return {
      {{-10, 10, 84.5, 104.5}, R, 20},  // 0000, chord on the bottom side
      {{-13, 17, 84, 114}, R, 30},      // 1000
      {{80, 100, 20, 40}, R, 20},       // 2000
      {{84, 110, -13, 13}, R, 26},      // 1100
      {{84, 104, -7, 13}, R, 20},       // 2100
      {{70, 90, -10, 10}, R, 20},       // 2200
      {{51, 68, 51, 68}, R, 17},        // 2101
      {{54, 84, -13, 17}, R, 30},       // 2201, on vertex below the axis
      {{55, 85, 0, 30}, R, 30},         // 2201, on vertex on the axis
      {{54, 84, 13, 43}, R, 30},        // 2201, on vertex above the axis
      {{60, 80, 20, 40}, R, 20},        // 2202
      {{70.9, 84.9, -7, 7}, R, 14},     // 2200 crossing the far side twice
      {{0, 10, 0, 10}, R, 10},          // 2222
  };
}

// One fixture per tally row reached by the dihedral images of the base set.
inline std::map<int, Fixture> fixtures_by_row() {
  std::map<int, Fixture> rows;
  for (const Fixture& f : base_fixtures()) {
    for (const CenteredRect& img : dihedral_images(f.rect)) {
      const LocationCode code = locate(img, f.radius);
      const CaseResult res = intersection_area(img, f.radius, f.size, code);
      rows.emplace(res.tally_row, Fixture{img, f.radius, f.size});
    }
  }
  return rows;
}

}  // namespace pixgrid::testing
