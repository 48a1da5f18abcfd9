#include "curvball/fishbowl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "curvball/catalog.hpp"
#include "curvball/curvature.hpp"
#include "curvball/errors.hpp"

namespace curvball {

namespace {

constexpr double kPi = std::numbers::pi;
// Clearance required between a hole's outer edge and its cell boundary.
constexpr double kCellClearance = 1e-3;

// Open profile of the body: upper collar end (r_c, h) is where the plate
// top face starts, lower end (r_c, -h) the bottom face.
ProfileCurve bodyProfile(double h, double collar) {
  const double top = h + collar;
  const double rc = 1.0 + collar;
  return ProfileCurve({
      CircularArc{{rc, top}, collar, -0.5 * kPi, -0.5 * kPi},
      LineSegment{{1.0, top}, {1.0, -top}},
      CircularArc{{rc, -top}, collar, kPi, -0.5 * kPi},
  });
}

// Square-to-circle blend on one plate face: s = 0 on the circle of radius
// rIn about `center`, s = 1 on side k of the square of half-size b.
SurfacePatch facePatch(const Vec3& center, double rIn, double b, int k, double y, double up) {
  auto map = [center, rIn, b, k, y](auto s, auto tau) {
    using std::atan;
    using std::cos;
    using std::sin;
    using T = decltype(s);
    const T angle = 0.5 * kPi * k + atan(tau);
    T sx{};
    T sz{};
    switch (k) {
      case 0: sx = T(b); sz = b * tau; break;
      case 1: sx = -b * tau; sz = T(b); break;
      case 2: sx = T(-b); sz = -b * tau; break;
      default: sx = b * tau; sz = T(-b); break;
    }
    const T w = 1.0 - s;
    return BasicVec3<T>{center.x + w * (rIn * cos(angle)) + s * sx, T(y), center.z + w * (rIn * sin(angle)) + s * sz};
  };
  return makeAnalyticPatch(map, ParamDomain{0.0, 1.0, -1.0, 1.0}, "plate-face").orientedAlong({0.0, up, 0.0});
}

// Half-cylinder of radius h closing the plate along side k of a cell.
SurfacePatch rimPatch(const Vec3& center, double b, int k, double h) {
  const double a = 0.5 * kPi * k;
  const Vec3 out{std::cos(a), 0.0, std::sin(a)};
  auto map = [center, b, k, h, out](auto tau, auto phi) {
    using std::cos;
    using std::sin;
    using T = decltype(tau);
    T sx{};
    T sz{};
    switch (k) {
      case 0: sx = T(b); sz = b * tau; break;
      case 1: sx = -b * tau; sz = T(b); break;
      case 2: sx = T(-b); sz = -b * tau; break;
      default: sx = b * tau; sz = T(-b); break;
    }
    const T c = h * cos(phi);
    return BasicVec3<T>{center.x + sx + c * out.x, h * sin(phi), center.z + sz + c * out.z};
  };
  return makeAnalyticPatch(map, ParamDomain{-1.0, 1.0, -0.5 * kPi, 0.5 * kPi}, "plate-rim").orientedAlong(out);
}

// Quarter sphere of radius h at a rectangle corner, between the outward
// side normals n1 and n2.
SurfacePatch cornerPatch(const Vec3& corner, const Vec3& n1, const Vec3& n2, double h) {
  auto map = [corner, n1, n2, h](auto psi, auto phi) {
    using std::cos;
    using std::sin;
    using T = decltype(psi);
    const T c = h * cos(phi);
    const T c1 = c * cos(psi);
    const T c2 = c * sin(psi);
    return BasicVec3<T>{corner.x + c1 * n1.x + c2 * n2.x, h * sin(phi), corner.z + c1 * n1.z + c2 * n2.z};
  };
  return makeAnalyticPatch(map, ParamDomain{0.0, 0.5 * kPi, -0.5 * kPi, 0.5 * kPi}, "plate-corner")
      .orientedAlong(n1 + n2);
}

Vec3 sideNormal(int k) {
  const double a = 0.5 * kPi * k;
  return {std::round(std::cos(a)), 0.0, std::round(std::sin(a))};
}

}  // namespace

void FishbowlParams::validate() const {
  if (!(plateLength > 0.0)) throw InvalidParameter("plateLength must be positive");
  if (!(plateGap > 0.0)) throw InvalidParameter("plateGap must be positive");
  if (!(halfCircleRadius >= 1.0)) throw InvalidParameter("halfCircleRadius must be at least 1");
  if (!(tunnelDelta > 0.0)) throw InvalidParameter("tunnelDelta must be positive");
  if (meshDensity < 2) throw InvalidParameter("meshDensity must be at least 2");
}

ProfileCurve mainBodyProfile() {
  return ProfileCurve({
      LineSegment{{1.0, 1.0}, {1.0, -1.0}},
      CircularArc{{2.0, -1.0}, 1.0, kPi, -0.5 * kPi},
      CircularArc{{2.0, 1.0}, 1.0, -0.5 * kPi, -0.5 * kPi},
  });
}

double mainBodyVolumeClosedForm() { return 22.0 * kPi / 3.0 - 2.0 * kPi * kPi; }

double mainBodyVolumeQuadrature() {
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto washer = [](double y) {
    const double t = 1.0 - std::abs(y);
    const double outer = 2.0 - std::sqrt(std::max(0.0, 1.0 - t * t));
    return kPi * (outer * outer - 1.0);
  };
  return integrator.integrate(washer, -1.0, 0.0) + integrator.integrate(washer, 0.0, 1.0);
}

double fishbowlBodyVolume(const FishbowlParams& params) {
  const double r = params.halfCircleRadius;
  const double a = 1.0 + r;
  // Each collar half: pi * int_0^r [(a - sqrt(r^2 - w^2))^2 - 1] dw.
  const double half = kPi * (a * a * r - 0.5 * kPi * a * r * r + 2.0 * r * r * r / 3.0 - r);
  return 2.0 * half + kPi * (a * a - 1.0) * params.plateGap;
}

Surface buildFishbowl(const FishbowlParams& params) {
  params.validate();
  const double h = 0.5 * params.plateGap;
  const double b = 0.25 * params.plateLength;
  const double collar = params.halfCircleRadius;
  const double mainHole = 1.0 + collar;
  const double sideHole = 1.0 + params.tunnelDelta + h;
  if (mainHole + kCellClearance >= b) {
    std::ostringstream msg;
    msg << "collar radius " << mainHole << " does not fit in a plate cell of half-size " << b;
    throw GeometryOverlap(msg.str());
  }
  if (sideHole + kCellClearance >= b) {
    std::ostringstream msg;
    msg << "hole of radius " << sideHole << " does not fit in a plate cell of half-size " << b;
    throw GeometryOverlap(msg.str());
  }

  std::vector<SurfacePatch> patches;
  const Vec3 mainCenter{};
  const Vec3 sideCenter{2.0 * b, 0.0, 0.0};

  const ProfileCurve body = bodyProfile(h, collar);
  std::vector<SurfacePatch> bodyPatches = revolutionPatches(body, mainCenter, "collar", 1);
  for (std::size_t i = 4; i < 8; ++i) bodyPatches[i] = bodyPatches[i].withComponent("tunnel");
  patches.insert(patches.end(), bodyPatches.begin(), bodyPatches.end());

  const ProfileCurve rim({CircularArc{{sideHole, 0.0}, h, 0.5 * kPi, kPi}});
  const std::vector<SurfacePatch> rimPatches = revolutionPatches(rim, sideCenter, "hole-rim", 1);
  patches.insert(patches.end(), rimPatches.begin(), rimPatches.end());

  for (int k = 0; k < 4; ++k) {
    for (double up : {1.0, -1.0}) {
      patches.push_back(facePatch(mainCenter, mainHole, b, k, up * h, up));
      patches.push_back(facePatch(sideCenter, sideHole, b, k, up * h, up));
    }
  }
  // Outer sides: main cell k = 1, 2, 3; side cell k = 3, 0, 1.
  for (int k : {1, 2, 3}) patches.push_back(rimPatch(mainCenter, b, k, h));
  for (int k : {3, 0, 1}) patches.push_back(rimPatch(sideCenter, b, k, h));
  const double x0 = -b;
  const double x1 = 3.0 * b;
  patches.push_back(cornerPatch({x0, 0.0, b}, sideNormal(1), sideNormal(2), h));
  patches.push_back(cornerPatch({x0, 0.0, -b}, sideNormal(2), sideNormal(3), h));
  patches.push_back(cornerPatch({x1, 0.0, -b}, sideNormal(3), sideNormal(0), h));
  patches.push_back(cornerPatch({x1, 0.0, b}, sideNormal(0), sideNormal(1), h));

  std::ostringstream label;
  label << "fishbowl(plateLength=" << params.plateLength << ", plateGap=" << params.plateGap
        << ", halfCircleRadius=" << collar << ", tunnelDelta=" << params.tunnelDelta << ")";
  return Surface::assemble(std::move(patches), label.str(), true);
}

std::vector<ComponentCurvature> curvatureAudit(const Surface& surface, int grid) {
  std::vector<ComponentCurvature> table;
  for (const SurfacePatch& patch : surface.patches()) {
    auto it = std::find_if(table.begin(), table.end(),
                           [&](const ComponentCurvature& c) { return c.component == patch.component(); });
    if (it == table.end()) {
      table.push_back({patch.component(), -1.0, {}, 0, false});
      it = std::prev(table.end());
    }
    const CurvatureMaximum m = maxAbsNormalCurvature(patch, grid);
    ++it->patches;
    if (m.value > it->maxAbsCurvature) {
      it->maxAbsCurvature = m.value;
      it->witness = m.point;
    }
  }
  for (ComponentCurvature& c : table) c.withinUnitBound = c.maxAbsCurvature <= 1.0 + 1e-9;
  return table;
}

}  // namespace curvball
