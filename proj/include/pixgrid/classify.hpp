#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pixgrid/grid.hpp"

namespace pixgrid {

/// Pixel bounds translated into the frame centred on the circle.
///
/// Vertices are numbered v1=(x1,y1) bottom-left, v2=(x1,y3) top-left,
/// v3=(x3,y3) top-right, v4=(x3,y1) bottom-right, so that v2 shares its
/// abscissa with v1 and its ordinate with v3.
struct CenteredRect {
  double x1 = 0.0;  // left
  double x3 = 0.0;  // right
  double y1 = 0.0;  // bottom
  double y3 = 0.0;  // top
};

/// Squared distances of v1..v4 from the circle centre.
std::array<double, 4> vertex_z(const CenteredRect& rect);

enum class VertexClass : std::uint8_t { Outside = 0, OnCircle = 1, Inside = 2 };

/// Ordered quadruple of vertex classes, written as four digits "v1v2v3v4".
class LocationCode {
 public:
  LocationCode() = default;
  constexpr LocationCode(VertexClass v1, VertexClass v2, VertexClass v3,
                         VertexClass v4)
      : v_{v1, v2, v3, v4} {}

  /// Parses "2200"-style strings; nullopt on anything else.
  static std::optional<LocationCode> parse(std::string_view digits);

  /// The code with base-3 ordinal `i` in [0, 81), v1 the most significant.
  static LocationCode from_ordinal(int i);

  VertexClass operator[](std::size_t k) const { return v_[k]; }
  int digit(std::size_t k) const { return static_cast<int>(v_[k]); }
  int digit_sum() const;
  int ordinal() const;
  std::string str() const;

  friend bool operator==(const LocationCode&, const LocationCode&) = default;

 private:
  std::array<VertexClass, 4> v_{};
};

struct ClassifyConfig {
  // Relative band around R^2 in which a vertex counts as lying on the circle.
  double eps_rel = 1e-12;

  void validate() const;
};

CenteredRect to_centered(const GridRect& rect, const Circle& circle);

/// Classifies a vertex by its squared distance `z` against `p` = R^2.
VertexClass vertex_class(double z, double p, const ClassifyConfig& cfg = {});

LocationCode locate(const CenteredRect& rect, double radius,
                    const ClassifyConfig& cfg = {});

/// False when the code contradicts Z1 + Z3 = Z2 + Z4. Each diagonal pair
/// constrains its sum relative to 2R^2 (below, equal, above or free); a
/// code is realizable only if both diagonals admit a common sum.
bool realizable(LocationCode code);

}  // namespace pixgrid
