#include "pixgrid/classify.hpp"

#include <cmath>
#include <stdexcept>

namespace pixgrid {

namespace {

// Admissible values of a diagonal sum Z_a + Z_b relative to 2P.
enum class SumRange { Below, Equal, Above, Any };

SumRange diagonal_range(VertexClass a, VertexClass b) {
  const int sa = static_cast<int>(a);
  const int sb = static_cast<int>(b);
  if (sa + sb == 2 && sa != sb) {
    return SumRange::Any;  // inside + outside
  }
  if (sa == 1 && sb == 1) {
    return SumRange::Equal;
  }
  // Remaining pairs contain no opposite extremes: anything with an Inside is
  // strictly below, anything with an Outside strictly above.
  if (sa == 2 || sb == 2) {
    return SumRange::Below;
  }
  return SumRange::Above;
}

}  // namespace

std::array<double, 4> vertex_z(const CenteredRect& r) {
  const double xx1 = r.x1 * r.x1;
  const double xx3 = r.x3 * r.x3;
  const double yy1 = r.y1 * r.y1;
  const double yy3 = r.y3 * r.y3;
  return {xx1 + yy1, xx1 + yy3, xx3 + yy3, xx3 + yy1};
}

std::optional<LocationCode> LocationCode::parse(std::string_view digits) {
  if (digits.size() != 4) {
    return std::nullopt;
  }
  std::array<VertexClass, 4> v{};
  for (std::size_t k = 0; k < 4; ++k) {
    const char c = digits[k];
    if (c < '0' || c > '2') {
      return std::nullopt;
    }
    v[k] = static_cast<VertexClass>(c - '0');
  }
  return LocationCode(v[0], v[1], v[2], v[3]);
}

LocationCode LocationCode::from_ordinal(int i) {
  if (i < 0 || i >= 81) {
    throw std::out_of_range("location code ordinal must lie in [0, 81)");
  }
  std::array<VertexClass, 4> v{};
  for (int k = 3; k >= 0; --k) {
    v[static_cast<std::size_t>(k)] = static_cast<VertexClass>(i % 3);
    i /= 3;
  }
  return LocationCode(v[0], v[1], v[2], v[3]);
}

int LocationCode::digit_sum() const {
  return digit(0) + digit(1) + digit(2) + digit(3);
}

int LocationCode::ordinal() const {
  return ((digit(0) * 3 + digit(1)) * 3 + digit(2)) * 3 + digit(3);
}

std::string LocationCode::str() const {
  std::string s(4, '0');
  for (std::size_t k = 0; k < 4; ++k) {
    s[k] = static_cast<char>('0' + digit(k));
  }
  return s;
}

void ClassifyConfig::validate() const {
  if (!(eps_rel >= 0.0 && eps_rel < 1e-6)) {
    throw std::invalid_argument("eps_rel must lie in [0, 1e-6)");
  }
}

CenteredRect to_centered(const GridRect& rect, const Circle& circle) {
  return {rect.xl - circle.cx, rect.xr - circle.cx, rect.yb - circle.cy,
          rect.yt - circle.cy};
}

VertexClass vertex_class(double z, double p, const ClassifyConfig& cfg) {
  if (std::abs(z - p) <= cfg.eps_rel * p) {
    return VertexClass::OnCircle;
  }
  return z > p ? VertexClass::Outside : VertexClass::Inside;
}

LocationCode locate(const CenteredRect& rect, double radius,
                    const ClassifyConfig& cfg) {
  const double p = radius * radius;
  const auto z = vertex_z(rect);
  return {vertex_class(z[0], p, cfg), vertex_class(z[1], p, cfg),
          vertex_class(z[2], p, cfg), vertex_class(z[3], p, cfg)};
}

bool realizable(LocationCode code) {
  const SumRange a = diagonal_range(code[0], code[2]);
  const SumRange b = diagonal_range(code[1], code[3]);
  return a == SumRange::Any || b == SumRange::Any || a == b;
}

}  // namespace pixgrid
