#pragma once

#include <cstddef>
#include <functional>

#include "curvball/curvature.hpp"
#include "curvball/surface.hpp"

namespace curvball {

/// A point of a surface addressed by patch and parameters.
struct SurfacePoint {
  std::size_t patch = 0;
  ParamPoint param;
  Vec3 position;
};

/// Visits a grid x grid lattice (including domain edges) on every patch.
void forEachGridPoint(const Surface& surface, int grid,
                      const std::function<void(std::size_t patch, ParamPoint p)>& visit);

/// Number of lattice points forEachGridPoint visits.
std::size_t gridPointCount(const Surface& surface, int grid);

struct SurfaceCurvatureMaximum {
  double value = 0.0;
  SurfacePoint at;
};

/// Max |kappa_n| over all patches (per-patch grid plus refinement).
SurfaceCurvatureMaximum maxAbsNormalCurvature(const Surface& surface, int grid,
                                              DerivativeMode mode = DerivativeMode::kAnalytic);

/// Compass search on one patch maximizing `score`, starting from `start` with
/// parameter step `step`, halving until the step drops below `minStep`.
ParamPoint compassSearchMax(const SurfacePatch& patch, ParamPoint start, double step, double minStep,
                            const std::function<double(const Vec3&)>& score);

/// Point of the surface farthest from the origin: grid argmax refined by
/// compass search until the parameter step is below 1e-10.
SurfacePoint farthestPointFromOrigin(const Surface& surface, int grid);

/// Point of the surface nearest to q: the best lattice point of each patch is
/// refined by compass search (step < 1e-12) and the overall minimum returned.
SurfacePoint nearestSurfacePoint(const Surface& surface, const Vec3& q, int grid);

}  // namespace curvball
