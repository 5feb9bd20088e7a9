#include "pixgrid/areas.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <tuple>

namespace pixgrid {

namespace {

constexpr double kUlp = std::numeric_limits<double>::epsilon();

// Sub-condition threshold of the two-inside-one-on family, relative to size.
constexpr double kDegenerateRel = 1e-12;

std::string describe(LocationCode code, const CenteredRect& r) {
  std::ostringstream os;
  os.precision(17);
  os << "code " << code.str() << " rect{x1=" << r.x1 << ", x3=" << r.x3
     << ", y1=" << r.y1 << ", y3=" << r.y3 << "}";
  return os.str();
}

// ---------------------------------------------------------------------------
// Symmetries of the square.
//
// Every family is evaluated in one canonical orientation. A symmetry maps a
// point (x, y) by an optional transpose followed by optional sign flips;
// squared distances are unchanged bit for bit, so the transformed rect
// classifies to the permuted code.

struct Symmetry {
  bool swap_xy = false;
  bool flip_x = false;
  bool flip_y = false;
};

constexpr std::array<Symmetry, 8> kSymmetries{{
    {false, false, false},
    {false, true, false},
    {false, false, true},
    {false, true, true},
    {true, false, false},
    {true, true, false},
    {true, false, true},
    {true, true, true},
}};

// Corner of vertex k as (is_right, is_top): v1 BL, v2 TL, v3 TR, v4 BR.
constexpr std::array<std::array<bool, 2>, 4> kCorners{{
    {false, false}, {false, true}, {true, true}, {true, false}}};

std::size_t corner_index(bool right, bool top) {
  for (std::size_t k = 0; k < 4; ++k) {
    if (kCorners[k][0] == right && kCorners[k][1] == top) {
      return k;
    }
  }
  return 0;
}

CenteredRect apply(const Symmetry& s, CenteredRect r) {
  if (s.swap_xy) {
    r = {r.y1, r.y3, r.x1, r.x3};
  }
  if (s.flip_x) {
    r = {-r.x3, -r.x1, r.y1, r.y3};
  }
  if (s.flip_y) {
    r = {r.x1, r.x3, -r.y3, -r.y1};
  }
  return r;
}

LocationCode apply(const Symmetry& s, LocationCode code) {
  std::array<VertexClass, 4> out{};
  for (std::size_t k = 0; k < 4; ++k) {
    bool right = kCorners[k][0];
    bool top = kCorners[k][1];
    if (s.swap_xy) {
      std::swap(right, top);
    }
    if (s.flip_x) {
      right = !right;
    }
    if (s.flip_y) {
      top = !top;
    }
    out[corner_index(right, top)] = code[k];
  }
  return {out[0], out[1], out[2], out[3]};
}

// Image of `rect` in the orientation where `code` reads as `canonical`.
// When several symmetries qualify, the lexicographically smallest image is
// taken so that every reflection of a rect lands on the same canonical rect.
std::optional<CenteredRect> canonical_rect(const CenteredRect& rect,
                                           LocationCode code,
                                           LocationCode canonical) {
  std::optional<CenteredRect> best;
  auto key = [](const CenteredRect& r) { return std::tie(r.x1, r.x3, r.y1, r.y3); };
  for (const auto& s : kSymmetries) {
    if (apply(s, code) != canonical) {
      continue;
    }
    const CenteredRect img = apply(s, rect);
    if (!best || key(img) < key(*best)) {
      best = img;
    }
  }
  return best;
}

LocationCode code_of(std::string_view digits) { return *LocationCode::parse(digits); }

// ---------------------------------------------------------------------------
// Case table rows.

struct RowEntry {
  std::string_view code;
  int row;
};

constexpr std::array<RowEntry, 44> kRows{{
    {"1000", 5},  {"0100", 6},  {"0010", 7},  {"0001", 8},
    {"2000", 9},  {"0200", 10}, {"0020", 11}, {"0002", 12},
    {"1100", 13}, {"0110", 14}, {"0011", 15}, {"1001", 16},
    {"2100", 17}, {"1200", 18}, {"0210", 19}, {"0120", 20},
    {"0021", 21}, {"0012", 22}, {"1002", 23}, {"2001", 24},
    {"2200", 25}, {"0220", 26}, {"0022", 27}, {"2002", 28},
    {"2101", 29}, {"1210", 30}, {"0121", 31}, {"1012", 32},
    {"0122", 33}, {"0221", 36}, {"1022", 39}, {"1220", 42},
    {"2012", 45}, {"2102", 48}, {"2201", 51}, {"2210", 54},
    {"2202", 57}, {"2220", 58}, {"0222", 59}, {"2022", 60},
    // Four-crossing variants of the two-inside family.
    {"2200", 61}, {"2002", 62}, {"0022", 63}, {"0220", 64},
}};

int base_row(LocationCode code, bool special) {
  const std::string s = code.str();
  for (std::size_t i = 0; i < kRows.size(); ++i) {
    const bool special_entry = i >= 40;
    if (kRows[i].code == s && special_entry == special) {
      return kRows[i].row;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Evaluation context in a canonical frame.

class Evaluator {
 public:
  Evaluator(const CenteredRect& rect, double radius, double size, double eps_rel,
            LocationCode code, const CenteredRect& original)
      : r_(rect),
        radius_(radius),
        size_(size),
        p_(radius * radius),
        slack_(p_ * (eps_rel + 8.0 * kUlp)),
        code_(code),
        original_(original) {}

  // sqrt(R^2 - u^2) with the on-circle band folded to zero.
  double bar(double u) const {
    const double d = p_ - u * u;
    if (d >= 0.0) {
      return std::sqrt(d);
    }
    if (-d <= slack_) {
      return 0.0;
    }
    throw DispatchError(code_, original_,
                        "coordinate beyond the radius in closed-form branch");
  }

  double segment(double chord) const {
    try {
      return segment_area(chord, radius_);
    } catch (const AreaDomainError& e) {
      throw DispatchError(code_, original_, e.what());
    }
  }

  const CenteredRect& r() const { return r_; }
  double radius() const { return radius_; }
  double size() const { return size_; }

 private:
  CenteredRect r_;
  double radius_;
  double size_;
  double p_;
  double slack_;
  LocationCode code_;
  CenteredRect original_;
};

void add(CaseResult& out, PartKind kind, double value) {
  out.parts.push_back({kind, value});
}

// All vertices outside, or one on the circle: at most one side carries a
// chord, and only when the perpendicular from the centre meets that side.
void outside_segment(const Evaluator& ev, CaseResult& out) {
  const CenteredRect& c = ev.r();
  const double radius = ev.radius();
  double d = 0.0;
  int side_row = 0;
  if (c.x1 < 0.0 && 0.0 < c.x3) {
    if (c.y1 > 0.0 && c.y1 < radius) {
      d = c.y1;
      side_row = 1;
    } else if (c.y3 < 0.0 && -c.y3 < radius) {
      d = -c.y3;
      side_row = 3;
    }
  } else if (c.y1 < 0.0 && 0.0 < c.y3) {
    if (c.x1 > 0.0 && c.x1 < radius) {
      d = c.x1;
      side_row = 2;
    } else if (c.x3 < 0.0 && -c.x3 < radius) {
      d = -c.x3;
      side_row = 4;
    }
  }
  if (side_row == 0) {
    return;
  }
  const double s = ev.segment(2.0 * ev.bar(d));
  if (s > 0.0) {
    add(out, PartKind::Segment, s);
    out.tally_row = out.family == Family::Outside ? side_row : base_row(out.code, false);
  }
}

// Canonical 2000: bottom-left inside, the circle leaves through the bottom
// side at (bar(y1), y1) and through the left side at (x1, bar(x1)).
void one_inside(const Evaluator& ev, CaseResult& out) {
  const CenteredRect& c = ev.r();
  const double a = ev.bar(c.y1);
  const double b = ev.bar(c.x1);
  add(out, PartKind::Segment, ev.segment(chord_length(a, c.x1, c.y1, b)));
  add(out, PartKind::Triangle, std::abs(a - c.x1) * std::abs(b - c.y1) / 2.0);
}

// Canonical 1100: the left side is the chord.
void two_on(const Evaluator& ev, CaseResult& out) {
  add(out, PartKind::Segment, ev.segment(ev.size()));
}

// Canonical 2100: bottom-left inside, top-left on the circle, exit through
// the bottom side at (bar(y1), y1).
void inside_on(const Evaluator& ev, CaseResult& out) {
  const CenteredRect& c = ev.r();
  const double a = ev.bar(c.y1);
  add(out, PartKind::Segment, ev.segment(chord_length(a, c.x1, c.y1, c.y3)));
  add(out, PartKind::Triangle, std::abs(a - c.x1) * ev.size() / 2.0);
}

// Canonical 2200: left side inside. The arc normally joins the bottom and
// top crossings; when it also cuts the right side twice, both right corners
// are clipped off the full square instead.
void two_inside(const Evaluator& ev, CaseResult& out) {
  const CenteredRect& c = ev.r();
  const double size = ev.size();
  const double a = ev.bar(c.y1);  // bottom crossing abscissa
  const double b = ev.bar(c.y3);  // top crossing abscissa
  if (std::abs(c.x3) < ev.radius()) {
    const double h = ev.bar(c.x3);  // right side crosses at y = +-h
    if (c.y1 < -h && h < c.y3) {
      out.special = true;
      add(out, PartKind::Square, size * size);
      add(out, PartKind::Triangle, -(c.x3 - b) * (c.y3 - h) / 2.0);
      add(out, PartKind::Segment, ev.segment(chord_length(b, c.x3, c.y3, h)));
      add(out, PartKind::Triangle, -(c.x3 - a) * (-h - c.y1) / 2.0);
      add(out, PartKind::Segment, ev.segment(chord_length(a, c.x3, c.y1, -h)));
      return;
    }
  }
  add(out, PartKind::Segment, ev.segment(chord_length(a, b, c.y1, c.y3)));
  add(out, PartKind::Trapezoid,
      (std::abs(a - c.x1) + std::abs(b - c.x1)) * size / 2.0);
}

// Canonical 2101: the chord is the diagonal v2-v4.
void inside_two_on(const Evaluator& ev, CaseResult& out) {
  const double size = ev.size();
  add(out, PartKind::Segment, ev.segment(size * std::numbers::sqrt2));
  add(out, PartKind::Triangle, size * size / 2.0);
}

// Canonical 2201: left side inside, top-right outside, bottom-right on the
// circle. The arc runs from the top crossing (bar(y3), y3) to the right-side
// point (x3, bar(x3)). Below the centre line (y1 < 0) the right side is
// inside between -|y1| and |y1|, which adds a full-width band.
// Returns the sub-case offset: 0 band, 1 band of zero width, 2 no band.
int two_inside_one_on(const Evaluator& ev, CaseResult& out) {
  const CenteredRect& c = ev.r();
  const double size = ev.size();
  const double radius = ev.radius();
  const double b = ev.bar(c.y3);
  const double h = ev.bar(c.x3);
  add(out, PartKind::Segment, ev.segment(chord_length(c.x3, b, h, c.y3)));
  if (std::abs(c.y1) <= kDegenerateRel * size) {
    // x3 = R, x1 = R - size, y3 = size.
    add(out, PartKind::Trapezoid, size * (2.0 * size + ubar(size, radius) - radius) / 2.0);
    add(out, PartKind::Rectangle, 0.0);
    return 1;
  }
  const double top = std::abs(b - c.x1);
  if (c.y1 < 0.0) {
    add(out, PartKind::Trapezoid, (size + top) / 2.0 * std::abs(c.y3 + c.y1));
    add(out, PartKind::Rectangle, 2.0 * std::abs(c.y1) * size);
    return 0;
  }
  add(out, PartKind::Trapezoid, (size + top) / 2.0 * size);
  return 2;
}

// Canonical 2202: top-right outside. Full-height rectangle up to the top
// crossing, then a trapezoid whose right side ends at (x3, bar(x3)).
void three_inside(const Evaluator& ev, CaseResult& out) {
  const CenteredRect& c = ev.r();
  const double size = ev.size();
  const double b = ev.bar(c.y3);
  const double h = ev.bar(c.x3);
  add(out, PartKind::Segment, ev.segment(chord_length(c.x3, b, h, c.y3)));
  add(out, PartKind::Trapezoid,
      (size + std::abs(h - c.y1)) / 2.0 * std::abs(c.x3 - b));
  add(out, PartKind::Rectangle, std::abs(b - c.x1) * size);
}

LocationCode canonical_code(Family family) {
  switch (family) {
    case Family::OneInside: return code_of("2000");
    case Family::TwoOn: return code_of("1100");
    case Family::InsideOn: return code_of("2100");
    case Family::TwoInside: return code_of("2200");
    case Family::InsideTwoOn: return code_of("2101");
    case Family::TwoInsideOneOn: return code_of("2201");
    case Family::ThreeInside: return code_of("2202");
    default: return {};
  }
}

}  // namespace

// ---------------------------------------------------------------------------

UnrealizableCodeError::UnrealizableCodeError(LocationCode code,
                                             const CenteredRect& rect)
    : std::runtime_error("unrealizable location " + describe(code, rect)),
      code_(code),
      rect_(rect) {}

DispatchError::DispatchError(LocationCode code, const CenteredRect& rect,
                             const std::string& what)
    : std::runtime_error(what + " (" + describe(code, rect) + ")"),
      code_(code),
      rect_(rect) {}

std::string_view part_name(PartKind kind) {
  switch (kind) {
    case PartKind::Segment: return "segment";
    case PartKind::Triangle: return "triangle";
    case PartKind::Trapezoid: return "trapezoid";
    case PartKind::Rectangle: return "rectangle";
    case PartKind::Square: return "square";
  }
  return "unknown";
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::Outside: return "outside/segment-or-empty";
    case Family::OneOn: return "one-on/segment-or-empty";
    case Family::OneInside: return "one-inside/segment+triangle";
    case Family::TwoOn: return "two-on/segment";
    case Family::InsideOn: return "inside-on/segment+triangle";
    case Family::TwoInside: return "two-inside/segment+trapezoid";
    case Family::InsideTwoOn: return "inside-two-on/segment+triangle";
    case Family::TwoInsideOneOn: return "two-inside-one-on/segment+trapezoid+rectangle";
    case Family::ThreeInside: return "three-inside/segment+trapezoid+rectangle";
    case Family::Full: return "full";
  }
  return "unknown";
}

std::optional<Family> family_of(LocationCode code) {
  if (!realizable(code)) {
    return std::nullopt;
  }
  std::array<int, 3> n{};
  for (std::size_t k = 0; k < 4; ++k) {
    ++n[static_cast<std::size_t>(code.digit(k))];
  }
  const int out = n[0], on = n[1], in = n[2];
  if (out == 0) return Family::Full;
  if (out == 4) return Family::Outside;
  if (out == 3) return on == 1 ? Family::OneOn : Family::OneInside;
  if (out == 2) {
    if (on == 2) return Family::TwoOn;
    if (in == 2) return Family::TwoInside;
    return Family::InsideOn;
  }
  // out == 1
  if (in == 3) return Family::ThreeInside;
  if (in == 2) return Family::TwoInsideOneOn;
  if (in == 1) return Family::InsideTwoOn;
  return std::nullopt;  // three on, one out: never realizable
}

double ubar(double u, double radius) {
  const double d = radius * radius - u * u;
  if (d >= 0.0) {
    return std::sqrt(d);
  }
  if (std::abs(u) <= radius * (1.0 + 4.0 * kUlp)) {
    return 0.0;
  }
  throw AreaDomainError("ubar: |u| exceeds the radius");
}

double chord_length(double xa, double xc, double ya, double yc) {
  return std::hypot(xa - xc, ya - yc);
}

double segment_area(double chord, double radius) {
  if (!(chord >= 0.0)) {
    throw AreaDomainError("segment_area: negative chord");
  }
  double t = chord / (2.0 * radius);
  if (t > 1.0) {
    if (t > 1.0 + 4.0 * kUlp) {
      throw AreaDomainError("segment_area: chord longer than the diameter");
    }
    t = 1.0;
  }
  return radius * radius * (std::asin(t) - t * std::sqrt(std::max(0.0, 1.0 - t * t)));
}

CaseResult intersection_area(const CenteredRect& rect, double radius,
                             double size, LocationCode code,
                             const ClassifyConfig& cfg) {
  const auto family = family_of(code);
  if (!family) {
    throw UnrealizableCodeError(code, rect);
  }

  CaseResult out;
  out.code = code;
  out.family = *family;

  switch (*family) {
    case Family::Full:
      add(out, PartKind::Square, size * size);
      out.area = size * size;
      return out;
    case Family::Outside:
    case Family::OneOn: {
      const Evaluator ev(rect, radius, size, cfg.eps_rel, code, rect);
      outside_segment(ev, out);
      break;
    }
    default: {
      const auto canon = canonical_rect(rect, code, canonical_code(*family));
      if (!canon) {
        throw DispatchError(code, rect, "no canonical orientation for code");
      }
      const Evaluator ev(*canon, radius, size, cfg.eps_rel, code, rect);
      int offset = 0;
      switch (*family) {
        case Family::OneInside: one_inside(ev, out); break;
        case Family::TwoOn: two_on(ev, out); break;
        case Family::InsideOn: inside_on(ev, out); break;
        case Family::TwoInside: two_inside(ev, out); break;
        case Family::InsideTwoOn: inside_two_on(ev, out); break;
        case Family::TwoInsideOneOn: offset = two_inside_one_on(ev, out); break;
        case Family::ThreeInside: three_inside(ev, out); break;
        default: break;
      }
      out.tally_row = base_row(code, out.special) + offset;
      break;
    }
  }

  double sum = 0.0;
  for (const auto& part : out.parts) {
    sum += part.value;
  }
  out.area = std::clamp(sum, 0.0, size * size);
  return out;
}

}  // namespace pixgrid
