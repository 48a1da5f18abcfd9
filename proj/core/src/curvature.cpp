#include "curvball/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "curvball/errors.hpp"

namespace curvball {

bool isRegular(const PatchJet& jet) {
  const double n = norm(cross(jet.ru, jet.rv));
  return n > 0.0 && n >= kRegularityTolerance * norm(jet.ru) * norm(jet.rv);
}

FundamentalForms fundamentalForms(const PatchJet& jet, int orientation) {
  if (!isRegular(jet)) {
    std::ostringstream msg;
    msg << "degenerate patch at " << jet.r << ": r_u x r_v vanishes";
    throw DegeneratePatch(msg.str());
  }
  FundamentalForms f;
  f.unitNormal = static_cast<double>(orientation) * normalized(cross(jet.ru, jet.rv));
  f.E = dot(jet.ru, jet.ru);
  f.F = dot(jet.ru, jet.rv);
  f.G = dot(jet.rv, jet.rv);
  f.L = dot(jet.ruu, f.unitNormal);
  f.M = dot(jet.ruv, f.unitNormal);
  f.N = dot(jet.rvv, f.unitNormal);
  return f;
}

FundamentalForms fundamentalForms(const SurfacePatch& patch, ParamPoint p, DerivativeMode mode) {
  return fundamentalForms(patch.jet(p, mode), patch.orientation());
}

CurvatureSample curvatureFromForms(const FundamentalForms& f, const Vec3& point) {
  // Eigenvalues of -I^{-1} II, computed from II in the orthonormal frame
  // e1 = r_u/|r_u|, e2 = Gram-Schmidt of r_v, so umbilics stay exact.
  const double det = f.metricDeterminant();
  const double ratio = f.F / f.E;
  const double a = f.L / f.E;
  const double b = (f.M - ratio * f.L) / std::sqrt(det);
  const double c = (f.N - 2.0 * ratio * f.M + ratio * ratio * f.L) * f.E / det;
  const double mean = -0.5 * (a + c);
  const double disc = std::hypot(0.5 * (a - c), b);
  CurvatureSample s;
  s.point = point;
  s.unitNormal = f.unitNormal;
  s.kappa1 = mean - disc;
  s.kappa2 = mean + disc;
  s.kappaMaxAbs = std::max(std::abs(s.kappa1), std::abs(s.kappa2));
  return s;
}

CurvatureSample curvatureSample(const SurfacePatch& patch, ParamPoint p, DerivativeMode mode) {
  const PatchJet j = patch.jet(p, mode);
  return curvatureFromForms(fundamentalForms(j, patch.orientation()), j.r);
}

double normalCurvature(const FundamentalForms& f, double du, double dv) {
  const double second = f.L * du * du + 2.0 * f.M * du * dv + f.N * dv * dv;
  const double first = f.E * du * du + 2.0 * f.F * du * dv + f.G * dv * dv;
  return -second / first;
}

namespace {

bool onBoundary(const ParamDomain& d, ParamPoint p) {
  return p.u <= d.u0 || p.u >= d.u1 || p.v <= d.v0 || p.v >= d.v1;
}

// Returns false for a skippable boundary degeneracy.
bool evaluate(const SurfacePatch& patch, ParamPoint p, DerivativeMode mode, double& value, Vec3& point) {
  const PatchJet j = patch.jet(p, mode);
  if (!isRegular(j) && onBoundary(patch.domain(), p)) return false;
  const CurvatureSample s = curvatureFromForms(fundamentalForms(j, patch.orientation()), j.r);
  value = s.kappaMaxAbs;
  point = s.point;
  return true;
}

}  // namespace

CurvatureMaximum maxAbsNormalCurvature(const SurfacePatch& patch, int grid, DerivativeMode mode) {
  if (grid < 2) throw InvalidParameter("curvature grid needs at least 2x2 samples");
  const ParamDomain& d = patch.domain();
  CurvatureMaximum best;
  best.value = -1.0;
  double du = (d.u1 - d.u0) / (grid - 1);
  double dv = (d.v1 - d.v0) / (grid - 1);
  for (int i = 0; i < grid; ++i) {
    for (int k = 0; k < grid; ++k) {
      const ParamPoint p = d.at(static_cast<double>(i) / (grid - 1), static_cast<double>(k) / (grid - 1));
      double value = 0.0;
      Vec3 point;
      if (evaluate(patch, p, mode, value, point) && value > best.value) {
        best = {value, p, point};
      }
    }
  }
  if (best.value < 0.0) throw DegeneratePatch("no regular sample on patch " + patch.component());

  constexpr int kLevels = 3;
  constexpr int kHalfWindow = 4;
  for (int level = 0; level < kLevels; ++level) {
    du /= 4.0;
    dv /= 4.0;
    const ParamPoint center = best.at;
    for (int i = -kHalfWindow; i <= kHalfWindow; ++i) {
      for (int k = -kHalfWindow; k <= kHalfWindow; ++k) {
        const ParamPoint p = d.clamp({center.u + i * du, center.v + k * dv});
        double value = 0.0;
        Vec3 point;
        if (evaluate(patch, p, mode, value, point) && value > best.value) {
          best = {value, p, point};
        }
      }
    }
  }
  return best;
}

}  // namespace curvball
