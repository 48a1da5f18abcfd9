#include "curvball/sampling.hpp"

#include <array>
#include <limits>

namespace curvball {

void forEachGridPoint(const Surface& surface, int grid,
                      const std::function<void(std::size_t patch, ParamPoint p)>& visit) {
  for (std::size_t p = 0; p < surface.patchCount(); ++p) {
    const ParamDomain& d = surface.patch(p).domain();
    for (int i = 0; i < grid; ++i) {
      for (int k = 0; k < grid; ++k) {
        visit(p, d.at(static_cast<double>(i) / (grid - 1), static_cast<double>(k) / (grid - 1)));
      }
    }
  }
}

std::size_t gridPointCount(const Surface& surface, int grid) {
  return surface.patchCount() * static_cast<std::size_t>(grid) * static_cast<std::size_t>(grid);
}

SurfaceCurvatureMaximum maxAbsNormalCurvature(const Surface& surface, int grid, DerivativeMode mode) {
  SurfaceCurvatureMaximum best;
  best.value = -1.0;
  for (std::size_t p = 0; p < surface.patchCount(); ++p) {
    const CurvatureMaximum m = maxAbsNormalCurvature(surface.patch(p), grid, mode);
    if (m.value > best.value) best = {m.value, {p, m.at, m.point}};
  }
  return best;
}

ParamPoint compassSearchMax(const SurfacePatch& patch, ParamPoint start, double step, double minStep,
                            const std::function<double(const Vec3&)>& score) {
  const ParamDomain& d = patch.domain();
  ParamPoint best = d.clamp(start);
  double bestScore = score(patch.position(best));
  constexpr std::array<std::array<double, 2>, 8> kDirs = {
      {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
  while (step >= minStep) {
    bool improved = false;
    for (const auto& dir : kDirs) {
      const ParamPoint trial = d.clamp({best.u + dir[0] * step, best.v + dir[1] * step});
      const double s = score(patch.position(trial));
      if (s > bestScore) {
        bestScore = s;
        best = trial;
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

SurfacePoint farthestPointFromOrigin(const Surface& surface, int grid) {
  SurfacePoint best;
  double bestScore = -1.0;
  forEachGridPoint(surface, grid, [&](std::size_t p, ParamPoint pp) {
    const Vec3 x = surface.patch(p).position(pp);
    const double s = squaredNorm(x);
    if (s > bestScore) {
      bestScore = s;
      best = {p, pp, x};
    }
  });
  const SurfacePatch& patch = surface.patch(best.patch);
  const double step = patch.domain().extent() / (grid - 1);
  best.param = compassSearchMax(patch, best.param, step, 1e-10, [](const Vec3& x) { return squaredNorm(x); });
  best.position = patch.position(best.param);
  return best;
}

SurfacePoint nearestSurfacePoint(const Surface& surface, const Vec3& q, int grid) {
  SurfacePoint best;
  double bestDistance = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < surface.patchCount(); ++p) {
    const SurfacePatch& patch = surface.patch(p);
    const ParamDomain& d = patch.domain();
    ParamPoint seed = d.center();
    double seedScore = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid; ++i) {
      for (int k = 0; k < grid; ++k) {
        const ParamPoint pp = d.at(static_cast<double>(i) / (grid - 1), static_cast<double>(k) / (grid - 1));
        const double s = -squaredNorm(patch.position(pp) - q);
        if (s > seedScore) {
          seedScore = s;
          seed = pp;
        }
      }
    }
    const ParamPoint refined = compassSearchMax(patch, seed, d.extent() / (grid - 1), 1e-12,
                                                [&q](const Vec3& x) { return -squaredNorm(x - q); });
    const Vec3 x = patch.position(refined);
    const double dist = distance(x, q);
    if (dist < bestDistance) {
      bestDistance = dist;
      best = {p, refined, x};
    }
  }
  return best;
}

}  // namespace curvball
