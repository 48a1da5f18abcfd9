#pragma once

#include <cmath>
#include <variant>
#include <vector>

#include "curvball/jet.hpp"

namespace curvball {

/// Point in the meridian half-plane: x is the distance from the revolution
/// axis, y the height along it.
struct ProfilePoint {
  double x = 0.0;
  double y = 0.0;
};

struct LineSegment {
  ProfilePoint from;
  ProfilePoint to;
};

/// Arc of the circle (center, radius) from startAngle through a signed sweep
/// (positive is counter-clockwise in the (x, y) plane).
struct CircularArc {
  ProfilePoint center;
  double radius = 1.0;
  double startAngle = 0.0;
  double sweep = 0.0;
};

using ProfilePiece = std::variant<LineSegment, CircularArc>;

double length(const ProfilePiece& piece);
ProfilePoint startPoint(const ProfilePiece& piece);
ProfilePoint endPoint(const ProfilePiece& piece);
/// Unit tangent at arc length s.
ProfilePoint tangentAt(const ProfilePiece& piece, double s);
/// Signed curvature (positive turning counter-clockwise); zero for lines.
double signedCurvature(const ProfilePiece& piece);

/// Point at arc length s along the piece, for double or Jet2 scalars.
template <class T>
void evaluatePiece(const ProfilePiece& piece, const T& s, T& x, T& y) {
  using std::cos;
  using std::sin;
  if (const auto* seg = std::get_if<LineSegment>(&piece)) {
    const double len = std::hypot(seg->to.x - seg->from.x, seg->to.y - seg->from.y);
    const T t = s / len;
    x = seg->from.x + t * (seg->to.x - seg->from.x);
    y = seg->from.y + t * (seg->to.y - seg->from.y);
    return;
  }
  const auto& arc = std::get<CircularArc>(piece);
  const double direction = arc.sweep >= 0.0 ? 1.0 : -1.0;
  const T angle = arc.startAngle + direction * s / arc.radius;
  x = arc.center.x + arc.radius * cos(angle);
  y = arc.center.y + arc.radius * sin(angle);
}

/// Piecewise line/arc curve in the half-plane x >= 0.
class ProfileCurve {
 public:
  /// Validates that consecutive pieces share endpoints (within tolerance) and
  /// that every piece stays in x >= 0; throws NonRevolvable / InvalidParameter.
  explicit ProfileCurve(std::vector<ProfilePiece> pieces, double junctionTolerance = 1e-12);

  const std::vector<ProfilePiece>& pieces() const { return pieces_; }
  bool isClosed() const { return closed_; }
  /// Shoelace area; positive for counter-clockwise closed curves.
  double signedArea() const;
  double totalLength() const;
  /// junctionSmooth()[i] tells whether piece i ends tangent-continuously into
  /// piece i+1 (cyclically for closed curves).
  const std::vector<bool>& junctionSmooth() const { return smooth_; }
  /// Whether the whole piece lies on the axis x = 0.
  static bool onAxis(const ProfilePiece& piece, double tol = 1e-12);

  ProfilePoint pointAt(std::size_t piece, double s) const;

 private:
  std::vector<ProfilePiece> pieces_;
  std::vector<bool> smooth_;
  bool closed_ = false;
};

}  // namespace curvball
