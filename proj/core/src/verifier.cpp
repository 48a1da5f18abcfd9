#include "curvball/verifier.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "curvball/curvature.hpp"
#include "curvball/errors.hpp"

namespace curvball {

const char* toString(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kSkipped: return "skipped";
  }
  return "?";
}

namespace {

Verdict verdictOf(bool ok) { return ok ? Verdict::kPass : Verdict::kFail; }

// Visits regular lattice samples with their jets; degenerate edge points are skipped.
template <class Visit>
void forEachRegularSample(const Surface& surface, int grid, DerivativeMode mode, Visit&& visit) {
  forEachGridPoint(surface, grid, [&](std::size_t p, ParamPoint pp) {
    const SurfacePatch& patch = surface.patch(p);
    const PatchJet j = patch.jet(pp, mode);
    if (!isRegular(j)) return;
    const Vec3 normal = static_cast<double>(patch.orientation()) * normalized(cross(j.ru, j.rv));
    visit(j, normal);
  });
}

// Side of the surface the origin lies on. Near the surface the mesh parity is
// off by up to the chord sagitta, so there the sign of the smooth outward
// normal at the nearest surface point decides instead.
Containment classifyOrigin(const Surface& surface, const TriMesh& mesh, const VerifierOptions& options) {
  const Containment parity = containsPoint(mesh, Vec3{});
  const SurfacePoint near = nearestSurfacePoint(surface, Vec3{}, options.distanceSeedGrid);
  const double d = norm(near.position);
  if (parity == Containment::kOnSurface || d < boundaryTolerance(mesh)) return Containment::kOnSurface;
  if (d > 1e-2 * mesh.boundingBoxDiagonal()) return parity;
  const SurfacePatch& patch = surface.patch(near.patch);
  const PatchJet j = patch.jet(near.param);
  if (!isRegular(j)) return parity;
  const Vec3 normal = static_cast<double>(patch.orientation()) * normalized(cross(j.ru, j.rv));
  return dot(near.position, normal) > 0.0 ? Containment::kInside : Containment::kOutside;
}

}  // namespace

CurvatureHypothesis checkCurvatureHypothesis(const Surface& surface, const VerifierOptions& options) {
  CurvatureHypothesis out;
  out.maximum = maxAbsNormalCurvature(surface, options.grid, options.derivatives);
  out.check.name = "curvature-bound";
  out.check.value = out.maximum.value;
  out.check.tolerance = options.curvatureSlack();
  out.check.verdict = verdictOf(out.maximum.value <= options.curvatureBound + options.curvatureSlack());
  out.check.witness = out.maximum.at.position;
  std::ostringstream note;
  note << "max |kappa_n| vs bound " << options.curvatureBound;
  out.check.note = note.str();
  return out;
}

BoundingBall checkBoundingBall(const Surface& surface, const VerifierOptions& options) {
  BoundingBall out;
  out.farthest = farthestPointFromOrigin(surface, options.grid);
  out.maxNorm = norm(out.farthest.position);
  out.check.name = "bounding-ball";
  out.check.value = out.maxNorm;
  out.check.tolerance = options.containmentSlack;
  out.check.verdict = verdictOf(out.maxNorm < options.boundingRadius - options.containmentSlack);
  out.check.witness = out.farthest.position;
  std::ostringstream note;
  note << "max |x| must stay below " << options.boundingRadius;
  out.check.note = note.str();
  return out;
}

StarShape checkStarShape(const Surface& surface, const TriMesh& mesh, const VerifierOptions& options) {
  StarShape out;
  out.origin = classifyOrigin(surface, mesh, options);
  if (out.origin == Containment::kOnSurface) {
    throw OriginOnSurface("origin lies within the boundary tolerance of '" + surface.label() + "'");
  }
  out.minNorm = std::numeric_limits<double>::infinity();
  out.minSlack = std::numeric_limits<double>::infinity();
  Vec3 normWitness;
  forEachRegularSample(surface, options.grid, options.derivatives, [&](const PatchJet& j, const Vec3& normal) {
    const double r = norm(j.r);
    ++out.samples;
    if (r < out.minNorm) {
      out.minNorm = r;
      normWitness = j.r;
    }
    const double cosAlpha = r > 0.0 ? dot(j.r, normal) / r : 0.0;
    const double slack = 2.0 * cosAlpha - r;
    if (slack < out.minSlack) {
      out.minSlack = slack;
      out.slackWitness = j.r;
    }
  });
  const bool inside = out.origin == Containment::kInside;
  const bool radiusOk = out.minNorm >= options.minimumRadius;
  const bool slackOk = out.minSlack >= -options.starShapeSlack;
  out.check.name = "star-shape";
  out.check.value = out.minSlack;
  out.check.tolerance = options.starShapeSlack;
  out.check.verdict = verdictOf(inside && radiusOk && slackOk);
  out.check.witness = !inside ? Vec3{} : (!radiusOk ? normWitness : out.slackWitness);
  std::ostringstream note;
  note << "origin " << toString(out.origin) << "; min |x| = " << out.minNorm << "; min (2 cos a - |x|) over "
       << out.samples << " samples";
  out.check.note = note.str();
  return out;
}

StarShape checkStarShape(const Surface& surface, const VerifierOptions& options) {
  return checkStarShape(surface, tessellate(surface, options.meshDensity), options);
}

double radialExpansion(const Vec3& x, const Vec3& v) {
  const double r = norm(x);
  const Vec3 xhat = x / r;
  return (2.0 / r) * norm(v - dot(xhat, v) * xhat);
}

ProjectionShortness checkProjectionShort(const Surface& surface, const VerifierOptions& options) {
  if (options.directionsPerPoint < 1) throw InvalidParameter("need at least one direction per point");
  ProjectionShortness out;
  out.minExpansion = std::numeric_limits<double>::infinity();
  out.maxExpansion = 0.0;
  const int k = options.directionsPerPoint;
  forEachRegularSample(surface, options.grid, options.derivatives, [&](const PatchJet& j, const Vec3& normal) {
    if (norm(j.r) < 1e-9) throw ProjectionUndefined("sample at the origin: 2x/|x| undefined");
    const Vec3 t1 = normalized(j.ru);
    const Vec3 t2 = cross(normal, t1);
    ++out.samples;
    for (int i = 0; i < k; ++i) {
      const double a = std::numbers::pi * i / k;
      const Vec3 v = std::cos(a) * t1 + std::sin(a) * t2;
      const double e = radialExpansion(j.r, v);
      ++out.directions;
      if (e < out.minExpansion) {
        out.minExpansion = e;
        out.witness = j.r;
      }
      out.maxExpansion = std::max(out.maxExpansion, e);
    }
  });
  out.check.name = "projection-short";
  out.check.value = out.minExpansion;
  out.check.tolerance = options.shortnessTolerance;
  out.check.verdict = verdictOf(out.minExpansion >= 1.0 - options.shortnessTolerance);
  out.check.witness = out.witness;
  std::ostringstream note;
  note << "min |D(2x/|x|) v|/|v| over " << out.directions << " tangent directions";
  out.check.note = note.str();
  return out;
}

MaxDistancePoint findMaxDistancePoint(const Surface& surface, const VerifierOptions& options) {
  MaxDistancePoint out;
  out.point = farthestPointFromOrigin(surface, options.grid);
  out.distance = norm(out.point.position);
  return out;
}

EnclosedBall enclosedBallFor(const Surface& surface, const TriMesh& mesh, const Vec3& farthest,
                             const VerifierOptions& options) {
  EnclosedBall out;
  out.ball = {0.5 * farthest, 0.5 * norm(farthest)};
  const SurfacePoint nearest = nearestSurfacePoint(surface, out.ball.center, options.distanceSeedGrid);
  out.nearest = nearest.position;
  out.margin = distance(nearest.position, out.ball.center) - out.ball.radius;
  const NearestPoint onMesh = minDistanceToMesh(mesh, out.ball.center);
  out.meshMargin = onMesh.distance - out.ball.radius;
  out.center = onMesh.distance < boundaryTolerance(mesh) ? Containment::kOnSurface
                                                         : containsPoint(mesh, out.ball.center);
  out.check.name = "enclosed-ball";
  out.check.value = out.margin;
  out.check.tolerance = options.ballTolerance;
  out.check.verdict = verdictOf(out.center == Containment::kInside && out.margin >= -options.ballTolerance);
  out.check.witness = out.nearest;
  std::ostringstream note;
  note << "ball center " << out.ball.center << ", radius " << out.ball.radius << "; mesh margin " << out.meshMargin;
  out.check.note = note.str();
  return out;
}

EnclosedBall checkEnclosedBallLemma(const Surface& surface, const VerifierOptions& options) {
  if (!checkCurvatureHypothesis(surface, options).check.passed()) {
    throw PreconditionFailed("enclosed-ball lemma needs the curvature bound");
  }
  const BoundingBall bounding = checkBoundingBall(surface, options);
  if (!bounding.check.passed()) throw PreconditionFailed("enclosed-ball lemma needs the radius-2 bound");
  const TriMesh mesh = tessellate(surface, options.meshDensity);
  if (!checkStarShape(surface, mesh, options).check.passed()) {
    throw PreconditionFailed("enclosed-ball lemma needs a star-shaped surface");
  }
  return enclosedBallFor(surface, mesh, bounding.farthest.position, options);
}

std::vector<CheckResult> VerificationReport::checks() const {
  std::vector<CheckResult> out{curvature.check, boundingBall.check, originInside, starShape.check, projection.check};
  CheckResult farthest;
  farthest.name = "max-distance-point";
  farthest.verdict = Verdict::kPass;
  farthest.value = maxDistance.distance;
  farthest.witness = maxDistance.point.position;
  farthest.tolerance = 1e-10;
  farthest.note = "parameter-space step at termination";
  out.push_back(farthest);
  if (enclosedBall) out.push_back(enclosedBall->check);
  if (translatedStarShape) {
    CheckResult c = translatedStarShape->check;
    c.name = "translated-star-shape";
    out.push_back(c);
  }
  if (finalBall) {
    CheckResult c = finalBall->check;
    c.name = "final-ball";
    out.push_back(c);
  }
  out.push_back(conclusion);
  return out;
}

namespace {

CheckResult failedCheck(std::string name, const std::string& why, std::optional<Vec3> witness) {
  CheckResult c;
  c.name = std::move(name);
  c.verdict = Verdict::kFail;
  c.witness = witness;
  c.note = why;
  c.value = std::numeric_limits<double>::quiet_NaN();
  return c;
}

}  // namespace

VerificationReport verifyTheorem(const Surface& surface, const VerifierOptions& options) {
  VerificationReport report;
  report.surface = surface.label();
  report.options = options;
  report.curvature = checkCurvatureHypothesis(surface, options);
  report.boundingBall = checkBoundingBall(surface, options);

  const TriMesh mesh = tessellate(surface, options.meshDensity);
  report.originInside.name = "origin-inside";
  report.originInside.tolerance = boundaryTolerance(mesh);
  report.originInside.witness = Vec3{};
  try {
    report.starShape = checkStarShape(surface, mesh, options);
    report.originInside.verdict = verdictOf(report.starShape.origin == Containment::kInside);
    report.originInside.value = report.starShape.origin == Containment::kInside ? 1.0 : 0.0;
    report.originInside.note = toString(report.starShape.origin);
  } catch (const OriginOnSurface& e) {
    report.starShape.check = failedCheck("star-shape", e.what(), Vec3{});
    report.starShape.origin = Containment::kOnSurface;
    report.originInside.verdict = Verdict::kFail;
    report.originInside.note = "on-surface";
  }
  try {
    report.projection = checkProjectionShort(surface, options);
  } catch (const ProjectionUndefined& e) {
    report.projection.check = failedCheck("projection-short", e.what(), Vec3{});
  }
  report.maxDistance = {report.boundingBall.farthest, report.boundingBall.maxNorm};

  report.conclusion.name = "theorem-conclusion";
  report.conclusion.tolerance = options.conclusionTolerance;
  if (!report.hypothesesHold()) {
    report.conclusion.verdict = Verdict::kSkipped;
    report.conclusion.value = std::numeric_limits<double>::quiet_NaN();
    report.conclusion.note = "hypotheses unmet; conclusion not asserted";
    return report;
  }
  if (report.starShape.check.passed()) {
    report.enclosedBall = enclosedBallFor(surface, mesh, report.maxDistance.point.position, options);
  }

  // Push the farthest point out to distance 2 - gap, re-locating it after
  // each shift since a translate may have a different farthest point.
  const double target = options.boundingRadius - options.translationGap;
  Surface moved = surface;
  SurfacePoint far = report.maxDistance.point;
  Vec3 total{};
  for (int step = 0; step < 20; ++step) {
    const double r = norm(far.position);
    if (std::abs(r - target) <= 0.1 * options.translationGap) break;
    const Vec3 shift = (target - r) * normalized(far.position);
    total += shift;
    moved = surface.translated(total);
    far = farthestPointFromOrigin(moved, options.grid);
    report.translationSteps = step + 1;
  }
  report.translation = total;

  const TriMesh movedMesh = tessellate(moved, options.meshDensity);
  std::string failure;
  try {
    report.translatedStarShape = checkStarShape(moved, movedMesh, options);
    report.finalBall = enclosedBallFor(moved, movedMesh, far.position, options);
  } catch (const GeometryError& e) {
    failure = e.what();
  }

  const double radius = report.finalBall ? report.finalBall->ball.radius : 0.0;
  const bool lemmasHold = report.starShape.check.passed() && report.projection.check.passed() &&
                          (!report.enclosedBall || report.enclosedBall->check.passed());
  const bool ok = failure.empty() && lemmasHold && report.translatedStarShape->check.passed() &&
                  report.finalBall->check.passed() && norm(far.position) < options.boundingRadius &&
                  radius >= 1.0 - options.conclusionTolerance;
  report.conclusion.verdict = verdictOf(ok);
  report.conclusion.value = radius;
  report.conclusion.witness = report.finalBall ? std::optional<Vec3>(report.finalBall->ball.center) : std::nullopt;
  std::ostringstream note;
  if (!failure.empty()) {
    note << "translated surface check failed: " << failure;
  } else {
    note << "unit ball (radius >= " << 1.0 - options.conclusionTolerance << ") certified after translating by "
         << total << "; value is the certified radius";
  }
  report.conclusion.note = note.str();
  return report;
}

CheckResult checkTurningBound(const Surface& surface, const GeodesicTrace& trace, double tolerance) {
  CheckResult c;
  c.name = "turning-bound";
  const double angle = angleBetween(trace.startNormal, trace.endNormal);
  c.value = angle - trace.totalLength;
  c.tolerance = tolerance;
  c.verdict = verdictOf(angle <= trace.totalLength + tolerance);
  c.witness = trace.end();
  std::ostringstream note;
  note << "normal turn " << angle << " vs geodesic length " << trace.totalLength << " on " << surface.label();
  c.note = note.str();
  return c;
}

BowCheck checkBowEndpointDistance(const Surface& surface, int samples, std::uint64_t seed, double tolerance) {
  BowCheck out;
  out.minChord = std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double length = std::numbers::pi;
  for (int i = 0; i < samples; ++i) {
    const std::size_t p = static_cast<std::size_t>(i) % surface.patchCount();
    const SurfacePatch& patch = surface.patch(p);
    const ParamPoint start = patch.domain().at(unit(rng), unit(rng));
    const PatchJet j = patch.jet(start);
    const Vec3 t1 = normalized(j.ru);
    const Vec3 t2 = cross(normalized(cross(j.ru, j.rv)), t1);
    const double a = angle(rng);
    const Vec3 dir = std::cos(a) * t1 + std::sin(a) * t2;
    GeodesicTrace trace = traceGeodesic(surface, p, start, dir, length, defaultGeodesicStep(length));
    const double chord = trace.chord();
    if (chord < out.minChord) {
      out.minChord = chord;
      out.check.witness = trace.start();
    }
    out.traces.push_back(std::move(trace));
  }
  out.check.name = "bow-endpoint-distance";
  out.check.value = out.minChord;
  out.check.tolerance = tolerance;
  out.check.verdict = verdictOf(out.minChord >= 2.0 - tolerance);
  out.check.note = "min chord of length-pi geodesics";
  return out;
}

}  // namespace curvball
