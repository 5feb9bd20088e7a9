#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pixgrid/classify.hpp"

namespace pixgrid {

/// Raised by the segment primitives when an argument lies outside the
/// circle beyond rounding slack.
class AreaDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A code that no placement of a square can produce reached the dispatcher.
class UnrealizableCodeError : public std::runtime_error {
 public:
  UnrealizableCodeError(LocationCode code, const CenteredRect& rect);

  LocationCode code() const { return code_; }
  const CenteredRect& rect() const { return rect_; }

 private:
  LocationCode code_;
  CenteredRect rect_;
};

/// The dispatcher hit an arithmetic domain error; the code and the rect
/// disagree, which signals a classification inconsistency.
class DispatchError : public std::runtime_error {
 public:
  DispatchError(LocationCode code, const CenteredRect& rect,
                const std::string& what);

  LocationCode code() const { return code_; }
  const CenteredRect& rect() const { return rect_; }

 private:
  LocationCode code_;
  CenteredRect rect_;
};

enum class PartKind { Segment, Triangle, Trapezoid, Rectangle, Square };

std::string_view part_name(PartKind kind);

/// One summand of an intersection area. Triangles cut off in the
/// four-intersection cases carry a negative value.
struct AreaPart {
  PartKind kind = PartKind::Segment;
  double value = 0.0;
};

/// Groups of location codes sharing one area construction.
enum class Family {
  Outside,          // 0000
  OneOn,            // one vertex on the circle, three outside
  OneInside,        // one inside, three outside
  TwoOn,            // two adjacent on, two outside
  InsideOn,         // one inside, one adjacent on, two outside
  TwoInside,        // two adjacent inside, two outside
  InsideTwoOn,      // one inside, both neighbours on, opposite outside
  TwoInsideOneOn,   // two adjacent inside, one on, one outside
  ThreeInside,      // three inside, one outside
  Full,             // no vertex outside
};

std::string_view family_name(Family family);

/// Family of a realizable code; nullopt for codes that contradict the
/// diagonal-sum identity.
std::optional<Family> family_of(LocationCode code);

/// Row of the consolidated case table for this code and sub-case; 0 when
/// the configuration has no table row (full squares, empty overlap).
struct CaseResult {
  LocationCode code;
  Family family = Family::Outside;
  bool special = false;  // two-inside code with four boundary crossings
  int tally_row = 0;
  double area = 0.0;
  std::vector<AreaPart> parts;
};

/// sqrt(R^2 - u^2). Arguments up to four rounding units past R clamp to 0.
double ubar(double u, double radius);

/// Distance between (xa, ya) and (xc, yc), argument order (xa, xc, ya, yc).
double chord_length(double xa, double xc, double ya, double yc);

/// Area between a chord and its minor arc.
double segment_area(double chord, double radius);

/// Exact overlap of the disc of radius `radius` centred at the origin with
/// `rect`, whose edge is `size`. `code` must equal locate(rect, radius, cfg);
/// `cfg` also widens the clamping slack of on-circle vertices accordingly.
CaseResult intersection_area(const CenteredRect& rect, double radius,
                             double size, LocationCode code,
                             const ClassifyConfig& cfg = {});

}  // namespace pixgrid
