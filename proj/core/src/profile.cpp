#include "curvball/profile.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

#include "curvball/errors.hpp"

namespace curvball {

double length(const ProfilePiece& piece) {
  if (const auto* seg = std::get_if<LineSegment>(&piece)) {
    return std::hypot(seg->to.x - seg->from.x, seg->to.y - seg->from.y);
  }
  const auto& arc = std::get<CircularArc>(piece);
  return arc.radius * std::abs(arc.sweep);
}

ProfilePoint startPoint(const ProfilePiece& piece) {
  double x = 0.0;
  double y = 0.0;
  evaluatePiece(piece, 0.0, x, y);
  return {x, y};
}

ProfilePoint endPoint(const ProfilePiece& piece) {
  if (const auto* seg = std::get_if<LineSegment>(&piece)) return seg->to;
  const auto& arc = std::get<CircularArc>(piece);
  const double a = arc.startAngle + arc.sweep;
  return {arc.center.x + arc.radius * std::cos(a), arc.center.y + arc.radius * std::sin(a)};
}

ProfilePoint tangentAt(const ProfilePiece& piece, double s) {
  if (const auto* seg = std::get_if<LineSegment>(&piece)) {
    const double len = length(piece);
    return {(seg->to.x - seg->from.x) / len, (seg->to.y - seg->from.y) / len};
  }
  const auto& arc = std::get<CircularArc>(piece);
  const double direction = arc.sweep >= 0.0 ? 1.0 : -1.0;
  const double a = arc.startAngle + direction * s / arc.radius;
  return {-direction * std::sin(a), direction * std::cos(a)};
}

double signedCurvature(const ProfilePiece& piece) {
  if (std::holds_alternative<LineSegment>(piece)) return 0.0;
  const auto& arc = std::get<CircularArc>(piece);
  return (arc.sweep >= 0.0 ? 1.0 : -1.0) / arc.radius;
}

namespace {

double minimumX(const ProfilePiece& piece) {
  if (const auto* seg = std::get_if<LineSegment>(&piece)) return std::min(seg->from.x, seg->to.x);
  const auto& arc = std::get<CircularArc>(piece);
  double lo = std::min(arc.startAngle, arc.startAngle + arc.sweep);
  const double hi = std::max(arc.startAngle, arc.startAngle + arc.sweep);
  double m = std::min(startPoint(piece).x, endPoint(piece).x);
  // cos attains -1 at odd multiples of pi inside the swept range.
  const double pi = std::numbers::pi;
  const double first = std::ceil((lo - pi) / (2.0 * pi)) * 2.0 * pi + pi;
  if (first <= hi) m = std::min(m, arc.center.x - arc.radius);
  return m;
}

double arcAreaTerm(const CircularArc& a) {
  const double p0 = a.startAngle;
  const double p1 = a.startAngle + a.sweep;
  const double r = a.radius;
  return 0.5 * (r * r * a.sweep +
                r * (a.center.x * (std::sin(p1) - std::sin(p0)) - a.center.y * (std::cos(p1) - std::cos(p0))));
}

}  // namespace

ProfileCurve::ProfileCurve(std::vector<ProfilePiece> pieces, double junctionTolerance)
    : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw InvalidParameter("profile curve needs at least one piece");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (length(pieces_[i]) <= 0.0) throw InvalidParameter("profile piece with zero length");
    if (minimumX(pieces_[i]) < -junctionTolerance) {
      std::ostringstream msg;
      msg << "profile piece " << i << " crosses to x < 0";
      throw NonRevolvable(msg.str());
    }
    if (i + 1 < pieces_.size()) {
      const ProfilePoint a = endPoint(pieces_[i]);
      const ProfilePoint b = startPoint(pieces_[i + 1]);
      if (std::hypot(a.x - b.x, a.y - b.y) > junctionTolerance) {
        std::ostringstream msg;
        msg << "profile pieces " << i << " and " << i + 1 << " do not share an endpoint";
        throw InvalidParameter(msg.str());
      }
    }
  }
  const ProfilePoint first = startPoint(pieces_.front());
  const ProfilePoint last = endPoint(pieces_.back());
  closed_ = std::hypot(first.x - last.x, first.y - last.y) <= junctionTolerance;

  const std::size_t junctions = closed_ ? pieces_.size() : pieces_.size() - 1;
  smooth_.assign(junctions, false);
  for (std::size_t i = 0; i < junctions; ++i) {
    const ProfilePiece& a = pieces_[i];
    const ProfilePiece& b = pieces_[(i + 1) % pieces_.size()];
    const ProfilePoint ta = tangentAt(a, length(a));
    const ProfilePoint tb = tangentAt(b, 0.0);
    smooth_[i] = ta.x * tb.x + ta.y * tb.y > 1.0 - 1e-9;
  }
}

double ProfileCurve::signedArea() const {
  double area = 0.0;
  for (const ProfilePiece& p : pieces_) {
    if (const auto* seg = std::get_if<LineSegment>(&p)) {
      area += 0.5 * (seg->from.x * seg->to.y - seg->to.x * seg->from.y);
    } else {
      area += arcAreaTerm(std::get<CircularArc>(p));
    }
  }
  return area;
}

double ProfileCurve::totalLength() const {
  double total = 0.0;
  for (const ProfilePiece& p : pieces_) total += length(p);
  return total;
}

bool ProfileCurve::onAxis(const ProfilePiece& piece, double tol) {
  if (const auto* seg = std::get_if<LineSegment>(&piece)) {
    return std::abs(seg->from.x) <= tol && std::abs(seg->to.x) <= tol;
  }
  return false;
}

ProfilePoint ProfileCurve::pointAt(std::size_t piece, double s) const {
  double x = 0.0;
  double y = 0.0;
  evaluatePiece(pieces_.at(piece), s, x, y);
  return {x, y};
}

}  // namespace curvball
