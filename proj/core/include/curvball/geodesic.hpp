#pragma once

#include <cstddef>
#include <vector>

#include "curvball/surface.hpp"

namespace curvball {

struct TracePoint {
  std::size_t patch = 0;
  ParamPoint param;
  Vec3 position;
  double arcLength = 0.0;
};

struct GeodesicTrace {
  std::vector<TracePoint> points;
  double totalLength = 0.0;
  Vec3 startNormal;
  Vec3 endNormal;

  const Vec3& start() const { return points.front().position; }
  const Vec3& end() const { return points.back().position; }
  double chord() const { return distance(start(), end()); }
};

/// Default step for a trace of the given length: min(1e-3, length / 1000).
double defaultGeodesicStep(double length);

/// Integrates the geodesic equation in patch coordinates with classical RK4
/// at fixed arc-length step. `direction` is projected to the tangent plane and
/// normalized. When a step leaves the patch the state is re-charted into the
/// stitched neighbour by inverting its map; an unstitched exit throws
/// PatchBoundaryUnstitched.
GeodesicTrace traceGeodesic(const Surface& surface, std::size_t patch, ParamPoint start, const Vec3& direction,
                            double length, double step);

/// Inverts a patch map near `seed` by Gauss-Newton on |r(u,v) - target|^2.
ParamPoint invertPatch(const SurfacePatch& patch, const Vec3& target, ParamPoint seed);

}  // namespace curvball
