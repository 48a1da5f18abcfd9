#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvball/geodesic.hpp"
#include "curvball/mesh.hpp"
#include "curvball/sampling.hpp"

namespace curvball {

enum class Verdict { kPass, kFail, kSkipped };

const char* toString(Verdict v);

/// One line of a report: {name, verdict, value, witness, tolerance}.
struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::kSkipped;
  double value = 0.0;
  std::optional<Vec3> witness;
  double tolerance = 0.0;
  std::string note;

  bool passed() const { return verdict == Verdict::kPass; }
};

/// Tolerances and sampling densities. Every value ends up in the report.
struct VerifierOptions {
  int grid = 256;  ///< lattice points per patch edge for hypothesis sampling
  int meshDensity = 128;
  int distanceSeedGrid = 64;
  DerivativeMode derivatives = DerivativeMode::kAnalytic;
  double curvatureBound = 1.0;
  double curvatureSlackAnalytic = 1e-9;
  double curvatureSlackFiniteDifference = 1e-4;
  double boundingRadius = 2.0;
  double containmentSlack = 1e-9;
  double starShapeSlack = 1e-9;
  double minimumRadius = 1e-6;  ///< required lower bound on the observed min |x|
  int directionsPerPoint = 8;
  double shortnessTolerance = 1e-6;
  double ballTolerance = 1e-6;
  double translationGap = 1e-4;
  double conclusionTolerance = 1e-3;

  double curvatureSlack() const {
    return derivatives == DerivativeMode::kAnalytic ? curvatureSlackAnalytic : curvatureSlackFiniteDifference;
  }
};

struct CurvatureHypothesis {
  CheckResult check;
  SurfaceCurvatureMaximum maximum;
};

/// Pass iff max |kappa_n| <= bound + slack.
CurvatureHypothesis checkCurvatureHypothesis(const Surface& surface, const VerifierOptions& options = {});

struct BoundingBall {
  CheckResult check;
  SurfacePoint farthest;
  double maxNorm = 0.0;
};

/// Pass iff max |x| < R - containmentSlack.
BoundingBall checkBoundingBall(const Surface& surface, const VerifierOptions& options = {});

struct StarShape {
  CheckResult check;
  Containment origin = Containment::kOutside;
  double minNorm = 0.0;   ///< observed epsilon: min |x| over samples
  double minSlack = 0.0;  ///< min over samples of 2 cos(alpha) - |x|
  Vec3 slackWitness;
  std::size_t samples = 0;
};

/// Origin containment on the tessellation plus the two-sided radial bound at
/// every lattice sample. Throws OriginOnSurface when O lies on the mesh.
StarShape checkStarShape(const Surface& surface, const VerifierOptions& options = {});
StarShape checkStarShape(const Surface& surface, const TriMesh& mesh, const VerifierOptions& options);

struct ProjectionShortness {
  CheckResult check;
  double minExpansion = 0.0;  ///< min |D sigma(v)| / |v| for sigma(x) = 2x/|x|
  double maxExpansion = 0.0;
  Vec3 witness;
  std::size_t samples = 0;
  std::size_t directions = 0;
};

/// Differential of x -> 2x/|x| along `directionsPerPoint` tangent directions
/// at each sample. Pass iff the minimum ratio is >= 1 - shortnessTolerance,
/// i.e. the inverse radial projection is short. Throws ProjectionUndefined if
/// some sample has |x| < 1e-9.
ProjectionShortness checkProjectionShort(const Surface& surface, const VerifierOptions& options = {});

/// |D sigma_x (v)| for sigma(x) = 2x/|x|.
double radialExpansion(const Vec3& x, const Vec3& v);

struct MaxDistancePoint {
  SurfacePoint point;
  double distance = 0.0;
};

MaxDistancePoint findMaxDistancePoint(const Surface& surface, const VerifierOptions& options = {});

struct EnclosedBall {
  CheckResult check;
  BallSpec ball;
  double margin = 0.0;      ///< distance from center to the smooth surface minus radius
  double meshMargin = 0.0;  ///< same against the tessellation
  Vec3 nearest;             ///< the closest surface point to the center
  Containment center = Containment::kOutside;
};

/// Ball with diameter O-x for the farthest point x; contained iff the center
/// is inside and margin >= -ballTolerance. Runs the three hypothesis checks
/// first and throws PreconditionFailed if one fails.
EnclosedBall checkEnclosedBallLemma(const Surface& surface, const VerifierOptions& options = {});

/// Same without the precondition checks.
EnclosedBall enclosedBallFor(const Surface& surface, const TriMesh& mesh, const Vec3& farthest,
                             const VerifierOptions& options);

struct VerificationReport {
  std::string surface;
  VerifierOptions options;
  CurvatureHypothesis curvature;
  BoundingBall boundingBall;
  CheckResult originInside;
  StarShape starShape;
  ProjectionShortness projection;
  MaxDistancePoint maxDistance;
  std::optional<EnclosedBall> enclosedBall;
  Vec3 translation;
  int translationSteps = 0;
  std::optional<StarShape> translatedStarShape;
  std::optional<EnclosedBall> finalBall;
  CheckResult conclusion;

  bool hypothesesHold() const { return curvature.check.passed() && boundingBall.check.passed(); }
  /// Report lines in a fixed order.
  std::vector<CheckResult> checks() const;
};

/// Runs every check, then translates the surface along the farthest-point
/// direction until that point sits at distance 2 - gap, and certifies the
/// ball with diameter O-x on the translate. Never throws for check failures.
VerificationReport verifyTheorem(const Surface& surface, const VerifierOptions& options = {});

/// Pass iff angle(startNormal, endNormal) <= length + 1e-4.
CheckResult checkTurningBound(const Surface& surface, const GeodesicTrace& trace, double tolerance = 1e-4);

struct BowCheck {
  CheckResult check;
  double minChord = 0.0;
  std::vector<GeodesicTrace> traces;
};

/// Traces `samples` geodesics of length pi from seeded random starts and
/// directions; pass iff every chord is >= 2 - tolerance.
BowCheck checkBowEndpointDistance(const Surface& surface, int samples, std::uint64_t seed = 1,
                                  double tolerance = 1e-3);

}  // namespace curvball
