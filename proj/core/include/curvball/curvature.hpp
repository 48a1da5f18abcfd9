#pragma once

#include "curvball/patch.hpp"

namespace curvball {

/// First (E, F, G) and second (L, M, N) fundamental form coefficients.
/// L, M, N are the second partials projected on the oriented unit normal.
struct FundamentalForms {
  double E = 0.0;
  double F = 0.0;
  double G = 0.0;
  double L = 0.0;
  double M = 0.0;
  double N = 0.0;
  Vec3 unitNormal;

  double metricDeterminant() const { return E * G - F * F; }
};

/// Curvatures follow the convexity convention: a surface bending away from its
/// outward normal (a round sphere with outward normal) has positive curvature,
/// i.e. the normal curvature along (du, dv) is -II/I.
struct CurvatureSample {
  Vec3 point;
  Vec3 unitNormal;
  double kappa1 = 0.0;  ///< smaller principal curvature
  double kappa2 = 0.0;  ///< larger principal curvature
  double kappaMaxAbs = 0.0;
};

/// |r_u x r_v| >= kRegularityTolerance * |r_u| |r_v| counts as regular.
inline constexpr double kRegularityTolerance = 1e-12;

bool isRegular(const PatchJet& jet);

/// Throws DegeneratePatch at non-regular points.
FundamentalForms fundamentalForms(const SurfacePatch& patch, ParamPoint p,
                                  DerivativeMode mode = DerivativeMode::kAnalytic);
FundamentalForms fundamentalForms(const PatchJet& jet, int orientation);

CurvatureSample curvatureSample(const SurfacePatch& patch, ParamPoint p,
                                DerivativeMode mode = DerivativeMode::kAnalytic);
CurvatureSample curvatureFromForms(const FundamentalForms& forms, const Vec3& point);

/// Normal curvature in the parameter direction (du, dv), same sign convention
/// as CurvatureSample.
double normalCurvature(const FundamentalForms& forms, double du, double dv);

struct CurvatureMaximum {
  double value = 0.0;
  ParamPoint at;
  Vec3 point;
};

/// Max of kappaMaxAbs over a uniform grid x grid lattice, followed by three
/// levels of 4x local refinement around the best node. Degenerate points on
/// the domain boundary (collapsed edges) are skipped; interior ones throw.
CurvatureMaximum maxAbsNormalCurvature(const SurfacePatch& patch, int grid,
                                       DerivativeMode mode = DerivativeMode::kAnalytic);

}  // namespace curvball
