#pragma once

#include <string>
#include <vector>

#include "curvball/profile.hpp"
#include "curvball/surface.hpp"

namespace curvball {

/// Genus-2 surface: a body of revolution around a vertical tunnel of radius 1
/// whose equator carries a thin horizontal plate, and a second hole of radius
/// 1 + tunnelDelta through the plate.
///
/// Layout (y vertical, plate in the x-z plane): the plate is the rectangle
/// [-b, 3b] x [-b, b] with b = plateLength / 4, thickness plateGap, split
/// into two square cells. The main cell (centered at O) holds the body of
/// revolution, the second cell (centered at (2b, 0, 0)) the extra hole.
struct FishbowlParams {
  double plateLength = 9.0;
  double plateGap = 0.01;
  /// Radius of the quarter-arc collars joining the tunnel wall to the plate.
  double halfCircleRadius = 1.0;
  double tunnelDelta = 0.05;
  int meshDensity = 128;

  /// Throws InvalidParameter for out-of-range values.
  void validate() const;
};

/// Closed profile bounded by x = 1 and the unit circles centered at (2, +-1):
/// segment (1, 1) -> (1, -1), lower arc up to (2, 0), upper arc back to (1, 1).
ProfileCurve mainBodyProfile();

/// 22 pi / 3 - 2 pi^2.
double mainBodyVolumeClosedForm();

/// Washer integral of pi [(2 - sqrt(1 - (1 - |y|)^2))^2 - 1] over [-1, 1]
/// by tanh-sinh quadrature.
double mainBodyVolumeQuadrature();

/// Volume of the body of revolution used inside buildFishbowl, where the
/// collars are pulled apart by plateGap: main-body volume plus the slab
/// pi (r_c^2 - 1) * plateGap with r_c = 1 + halfCircleRadius.
double fishbowlBodyVolume(const FishbowlParams& params);

/// Closed stitched genus-2 surface. Components: "tunnel", "collar",
/// "plate-face", "plate-rim", "plate-corner", "hole-rim".
/// Throws GeometryOverlap if a hole does not fit inside its plate cell.
Surface buildFishbowl(const FishbowlParams& params = {});

struct ComponentCurvature {
  std::string component;
  double maxAbsCurvature = 0.0;
  Vec3 witness;
  std::size_t patches = 0;
  bool withinUnitBound = false;
};

/// Max |kappa_n| per component, in order of first appearance. Values above 1
/// are reported as they are.
std::vector<ComponentCurvature> curvatureAudit(const Surface& surface, int grid = 64);

}  // namespace curvball
