#pragma once

#include <functional>
#include <string>
#include <utility>

#include "curvball/jet.hpp"
#include "curvball/vec3.hpp"

namespace curvball {

struct ParamPoint {
  double u = 0.0;
  double v = 0.0;
};

/// Closed parameter rectangle [u0,u1] x [v0,v1].
struct ParamDomain {
  double u0 = 0.0;
  double u1 = 1.0;
  double v0 = 0.0;
  double v1 = 1.0;

  bool contains(ParamPoint p, double slack = 0.0) const {
    return p.u >= u0 - slack && p.u <= u1 + slack && p.v >= v0 - slack && p.v <= v1 + slack;
  }
  ParamPoint clamp(ParamPoint p) const;
  ParamPoint center() const { return {0.5 * (u0 + u1), 0.5 * (v0 + v1)}; }
  /// Point at normalized coordinates (s, t) in [0,1]^2.
  ParamPoint at(double s, double t) const { return {u0 + s * (u1 - u0), v0 + t * (v1 - v0)}; }
  double extent() const;
};

/// Position with first and second partials at one parameter point.
struct PatchJet {
  Vec3 r;
  Vec3 ru;
  Vec3 rv;
  Vec3 ruu;
  Vec3 ruv;
  Vec3 rvv;
};

enum class DerivativeMode {
  kAnalytic,          ///< use the closed-form jet; falls back to differences if absent
  kFiniteDifference,  ///< always central differences of the position map
};

/// A smooth map from a parameter rectangle into R^3 with an orientation flag
/// selecting which of the two unit normals counts as outward.
///
/// Patches are immutable values; transformed copies share the underlying maps.
class SurfacePatch {
 public:
  using PointMap = std::function<Vec3(double, double)>;
  using JetMap = std::function<PatchJet(double, double)>;

  SurfacePatch(PointMap point, JetMap jet, ParamDomain domain, std::string component = {});

  const ParamDomain& domain() const { return domain_; }
  const std::string& component() const { return component_; }
  bool hasAnalyticDerivatives() const { return static_cast<bool>(jet_); }
  /// +1 when r_u x r_v is outward, -1 otherwise.
  int orientation() const { return orientation_; }

  Vec3 position(ParamPoint p) const;
  PatchJet jet(ParamPoint p, DerivativeMode mode = DerivativeMode::kAnalytic) const;
  PatchJet finiteDifferenceJet(ParamPoint p) const;
  /// Central differences with h = 1e-4 * max(1, domain extent), which
  /// balances truncation against rounding in the second differences.
  double finiteDifferenceStep() const;

  /// Oriented unit normal, or the zero vector where r_u x r_v vanishes.
  Vec3 normal(ParamPoint p) const;

  SurfacePatch flipped() const;
  SurfacePatch withOrientation(int sign) const;
  /// Chooses the orientation whose normal at the domain center points away
  /// from `interior`.
  SurfacePatch orientedAwayFrom(const Vec3& interior) const;
  /// Chooses the orientation whose normal at the domain center has a positive
  /// component along `direction`.
  SurfacePatch orientedAlong(const Vec3& direction) const;
  SurfacePatch transformed(const RigidMotion& motion) const;
  SurfacePatch withComponent(std::string component) const;

 private:
  PointMap point_;
  JetMap jet_;
  ParamDomain domain_;
  std::string component_;
  int orientation_ = 1;
};

/// Builds a patch from a map written once for any scalar type:
/// `map(u, v)` must accept both `double` and `Jet2` arguments and return a
/// `BasicVec3` of the same scalar. The jet instantiation supplies exact
/// partials.
template <class Map>
SurfacePatch makeAnalyticPatch(Map map, ParamDomain domain, std::string component = {}) {
  SurfacePatch::PointMap point = [map](double u, double v) { return map(u, v); };
  SurfacePatch::JetMap jet = [map](double u, double v) {
    const BasicVec3<Jet2> q = map(Jet2::variableU(u), Jet2::variableV(v));
    return PatchJet{{q.x.val, q.y.val, q.z.val},       {q.x.du, q.y.du, q.z.du},
                    {q.x.dv, q.y.dv, q.z.dv},          {q.x.duu, q.y.duu, q.z.duu},
                    {q.x.duv, q.y.duv, q.z.duv},       {q.x.dvv, q.y.dvv, q.z.dvv}};
  };
  return SurfacePatch(std::move(point), std::move(jet), domain, std::move(component));
}

/// Patch without analytic derivatives; every jet comes from finite differences.
SurfacePatch makeNumericPatch(SurfacePatch::PointMap map, ParamDomain domain,
                              std::string component = {});

}  // namespace curvball
