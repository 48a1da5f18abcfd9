#include "curvball/patch.hpp"

#include <algorithm>
#include <cmath>

namespace curvball {

ParamPoint ParamDomain::clamp(ParamPoint p) const {
  return {std::clamp(p.u, u0, u1), std::clamp(p.v, v0, v1)};
}

double ParamDomain::extent() const { return std::max(u1 - u0, v1 - v0); }

SurfacePatch::SurfacePatch(PointMap point, JetMap jet, ParamDomain domain, std::string component)
    : point_(std::move(point)), jet_(std::move(jet)), domain_(domain), component_(std::move(component)) {}

Vec3 SurfacePatch::position(ParamPoint p) const { return point_(p.u, p.v); }

PatchJet SurfacePatch::jet(ParamPoint p, DerivativeMode mode) const {
  if (mode == DerivativeMode::kAnalytic && jet_) return jet_(p.u, p.v);
  return finiteDifferenceJet(p);
}

double SurfacePatch::finiteDifferenceStep() const { return 1e-4 * std::max(1.0, domain_.extent()); }

PatchJet SurfacePatch::finiteDifferenceJet(ParamPoint p) const {
  const double h = finiteDifferenceStep();
  const double u = p.u;
  const double v = p.v;
  const Vec3 c = point_(u, v);
  const Vec3 up = point_(u + h, v);
  const Vec3 um = point_(u - h, v);
  const Vec3 vp = point_(u, v + h);
  const Vec3 vm = point_(u, v - h);
  const Vec3 pp = point_(u + h, v + h);
  const Vec3 pm = point_(u + h, v - h);
  const Vec3 mp = point_(u - h, v + h);
  const Vec3 mm = point_(u - h, v - h);
  PatchJet j;
  j.r = c;
  j.ru = (up - um) / (2.0 * h);
  j.rv = (vp - vm) / (2.0 * h);
  j.ruu = (up - 2.0 * c + um) / (h * h);
  j.rvv = (vp - 2.0 * c + vm) / (h * h);
  j.ruv = (pp - pm - mp + mm) / (4.0 * h * h);
  return j;
}

Vec3 SurfacePatch::normal(ParamPoint p) const {
  const PatchJet j = jet(p);
  return static_cast<double>(orientation_) * normalized(cross(j.ru, j.rv));
}

SurfacePatch SurfacePatch::flipped() const { return withOrientation(-orientation_); }

SurfacePatch SurfacePatch::withOrientation(int sign) const {
  SurfacePatch copy = *this;
  copy.orientation_ = sign >= 0 ? 1 : -1;
  return copy;
}

SurfacePatch SurfacePatch::orientedAwayFrom(const Vec3& interior) const {
  const ParamPoint c = domain_.center();
  const PatchJet j = jet(c);
  return withOrientation(dot(cross(j.ru, j.rv), j.r - interior) >= 0.0 ? 1 : -1);
}

SurfacePatch SurfacePatch::orientedAlong(const Vec3& direction) const {
  const PatchJet j = jet(domain_.center());
  return withOrientation(dot(cross(j.ru, j.rv), direction) >= 0.0 ? 1 : -1);
}

SurfacePatch SurfacePatch::transformed(const RigidMotion& motion) const {
  SurfacePatch copy = *this;
  copy.point_ = [inner = point_, motion](double u, double v) { return motion.apply(inner(u, v)); };
  if (jet_) {
    copy.jet_ = [inner = jet_, motion](double u, double v) {
      PatchJet j = inner(u, v);
      j.r = motion.apply(j.r);
      j.ru = motion.rotate(j.ru);
      j.rv = motion.rotate(j.rv);
      j.ruu = motion.rotate(j.ruu);
      j.ruv = motion.rotate(j.ruv);
      j.rvv = motion.rotate(j.rvv);
      return j;
    };
  }
  return copy;
}

SurfacePatch SurfacePatch::withComponent(std::string component) const {
  SurfacePatch copy = *this;
  copy.component_ = std::move(component);
  return copy;
}

SurfacePatch makeNumericPatch(SurfacePatch::PointMap map, ParamDomain domain, std::string component) {
  return SurfacePatch(std::move(map), nullptr, domain, std::move(component));
}

}  // namespace curvball
