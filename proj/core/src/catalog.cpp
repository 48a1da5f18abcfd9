#include "curvball/catalog.hpp"

#include <array>
#include <numbers>
#include <sstream>

#include "curvball/errors.hpp"

namespace curvball {

namespace {

constexpr double kPi = std::numbers::pi;

struct CubeFace {
  Vec3 normal;
  Vec3 e1;
  Vec3 e2;
  const char* name;
};

// e1 x e2 = normal on every face, so r_u x r_v points outward.
constexpr std::array<CubeFace, 6> kCubeFaces = {{
    {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, "+x"},
    {{-1, 0, 0}, {0, 0, 1}, {0, 1, 0}, "-x"},
    {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}, "+y"},
    {{0, -1, 0}, {1, 0, 0}, {0, 0, 1}, "-y"},
    {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, "+z"},
    {{0, 0, -1}, {0, 1, 0}, {1, 0, 0}, "-z"},
}};

constexpr ParamDomain kCubeDomain{-1.0, 1.0, -1.0, 1.0};

template <class T>
BasicVec3<T> cubeDirection(const CubeFace& f, const T& u, const T& v) {
  using std::sqrt;
  using std::tan;
  const T a = tan(0.25 * kPi * u);
  const T b = tan(0.25 * kPi * v);
  BasicVec3<T> w{f.normal.x + a * f.e1.x + b * f.e2.x, f.normal.y + a * f.e1.y + b * f.e2.y,
                 f.normal.z + a * f.e1.z + b * f.e2.z};
  const T len = sqrt(w.x * w.x + w.y * w.y + w.z * w.z);
  return BasicVec3<T>{w.x / len, w.y / len, w.z / len};
}

template <class RadialMap>
Surface cubeSphere(RadialMap map, const Vec3& interior, const std::string& label) {
  std::vector<SurfacePatch> patches;
  for (const CubeFace& face : kCubeFaces) {
    auto patchMap = [face, map](auto u, auto v) { return map(cubeDirection(face, u, v)); };
    patches.push_back(makeAnalyticPatch(patchMap, kCubeDomain, std::string("face") + face.name)
                          .orientedAwayFrom(interior));
  }
  return Surface::assemble(std::move(patches), label, true);
}

std::string describe(const char* kind, double value) {
  std::ostringstream os;
  os << kind << " " << value;
  return os.str();
}

}  // namespace

RadialPerturbation RadialPerturbation::cos3Theta() {
  RadialPerturbation f;
  f.terms = {{0, 0, 3, 4.0}, {0, 0, 1, -3.0}};
  return f;
}

RadialPerturbation RadialPerturbation::monomials(const std::vector<double>& coefficients) {
  if (coefficients.size() > kMaxMonomials) {
    throw InvalidParameter("at most " + std::to_string(kMaxMonomials) + " perturbation coefficients");
  }
  RadialPerturbation f;
  std::size_t index = 0;
  for (int degree = 1; degree <= 4 && index < coefficients.size(); ++degree) {
    for (int px = degree; px >= 0 && index < coefficients.size(); --px) {
      for (int py = degree - px; py >= 0 && index < coefficients.size(); --py) {
        f.terms.push_back({px, py, degree - px - py, coefficients[index++]});
      }
    }
  }
  return f;
}

Surface makeSphere(const Vec3& center, double radius) {
  if (!(radius > 0.0)) throw InvalidRadius(describe("sphere radius must be positive, got", radius));
  auto map = [center, radius](const auto& d) { return center + radius * d; };
  std::ostringstream label;
  label << "sphere(r=" << radius << ", c=" << center << ")";
  return cubeSphere(map, center, label.str());
}

Surface makeEllipsoid(const Vec3& center, double a, double b, double c) {
  if (!(a > 0.0 && b > 0.0 && c > 0.0)) throw InvalidRadius("ellipsoid semi-axes must be positive");
  auto map = [center, a, b, c](const auto& d) {
    using T = std::decay_t<decltype(d.x)>;
    return BasicVec3<T>{center.x + a * d.x, center.y + b * d.y, center.z + c * d.z};
  };
  std::ostringstream label;
  label << "ellipsoid(" << a << ", " << b << ", " << c << ")";
  return cubeSphere(map, center, label.str());
}

Surface makePerturbedSphere(const RadialPerturbation& f, double amplitude, const Vec3& center) {
  constexpr int kCheckGrid = 65;
  for (const CubeFace& face : kCubeFaces) {
    for (int i = 0; i < kCheckGrid; ++i) {
      for (int k = 0; k < kCheckGrid; ++k) {
        const ParamPoint p = kCubeDomain.at(static_cast<double>(i) / (kCheckGrid - 1),
                                            static_cast<double>(k) / (kCheckGrid - 1));
        const Vec3 d = cubeDirection(face, p.u, p.v);
        const double r = 1.0 + amplitude * f.evaluate(d.x, d.y, d.z);
        if (!(r > 0.0)) {
          std::ostringstream msg;
          msg << "perturbed radius " << r << " <= 0 in direction " << d;
          throw NonpositiveRadius(msg.str());
        }
      }
    }
  }
  auto map = [f, amplitude, center](const auto& d) {
    const auto r = 1.0 + amplitude * f.evaluate(d.x, d.y, d.z);
    return center + r * d;
  };
  std::ostringstream label;
  label << "perturbed-sphere(amp=" << amplitude << ", terms=" << f.terms.size() << ")";
  return cubeSphere(map, center, label.str());
}

std::vector<SurfacePatch> revolutionPatches(const ProfileCurve& profile, const Vec3& axisOrigin,
                                            const std::string& component, int orientation) {
  std::vector<SurfacePatch> patches;
  for (std::size_t i = 0; i < profile.pieces().size(); ++i) {
    const ProfilePiece& piece = profile.pieces()[i];
    if (ProfileCurve::onAxis(piece)) continue;
    for (int quarter = 0; quarter < 4; ++quarter) {
      const double base = 0.5 * kPi * quarter;
      auto map = [piece, base, axisOrigin](auto s, auto tau) {
        using std::atan;
        using std::cos;
        using std::sin;
        using T = decltype(s);
        T x{};
        T y{};
        evaluatePiece(piece, s, x, y);
        const T angle = base + atan(tau);
        return BasicVec3<T>{axisOrigin.x + x * cos(angle), axisOrigin.y + y, axisOrigin.z + x * sin(angle)};
      };
      patches.push_back(
          makeAnalyticPatch(map, ParamDomain{0.0, length(piece), -1.0, 1.0}, component).withOrientation(orientation));
    }
  }
  return patches;
}

Surface makeRevolution(const ProfileCurve& profile, std::string label, const Vec3& axisOrigin) {
  const int orientation = profile.isClosed() && profile.signedArea() < 0.0 ? -1 : 1;
  return Surface::assemble(revolutionPatches(profile, axisOrigin, label, orientation), label, profile.isClosed());
}

Surface makeTorus(double axisRadius, double tubeRadius) {
  if (!(tubeRadius > 0.0)) throw InvalidRadius(describe("tube radius must be positive, got", tubeRadius));
  if (tubeRadius >= axisRadius) throw SelfIntersecting("torus tube radius must be below the axis radius");
  const ProfileCurve circle({CircularArc{{axisRadius, 0.0}, tubeRadius, 0.0, 2.0 * kPi}});
  std::ostringstream label;
  label << "torus(R=" << axisRadius << ", r=" << tubeRadius << ")";
  return makeRevolution(circle, label.str());
}

Surface makeTubeSegment(double axisRadius, double tubeRadius, double angularExtent) {
  if (!(tubeRadius > 0.0)) throw InvalidRadius(describe("tube radius must be positive, got", tubeRadius));
  if (tubeRadius >= axisRadius) {
    throw SelfIntersecting("tube radius " + std::to_string(tubeRadius) + " >= axis radius " +
                           std::to_string(axisRadius));
  }
  if (!(angularExtent > 0.0) || angularExtent > 2.0 * kPi + 1e-12) {
    throw InvalidParameter("tube angular extent must lie in (0, 2 pi]");
  }
  auto map = [axisRadius, tubeRadius](auto phi, auto theta) {
    using std::cos;
    using std::sin;
    using T = decltype(phi);
    const T rho = axisRadius + tubeRadius * cos(phi);
    return BasicVec3<T>{rho * cos(theta), tubeRadius * sin(phi), rho * sin(theta)};
  };
  const ParamDomain domain{0.0, 2.0 * kPi, 0.0, angularExtent};
  const double mid = 0.5 * angularExtent;
  SurfacePatch patch = makeAnalyticPatch(map, domain, "tube")
                           .orientedAwayFrom({axisRadius * std::cos(mid), 0.0, axisRadius * std::sin(mid)});
  const bool full = angularExtent >= 2.0 * kPi - 1e-12;
  std::ostringstream label;
  label << "tube(R=" << axisRadius << ", r=" << tubeRadius << ", extent=" << angularExtent << ")";
  return Surface::assemble({patch}, label.str(), full);
}

Surface makeCylinder(double radius, double height) {
  if (!(radius > 0.0)) throw InvalidRadius(describe("cylinder radius must be positive, got", radius));
  auto map = [radius](auto phi, auto y) {
    using std::cos;
    using std::sin;
    using T = decltype(phi);
    return BasicVec3<T>{radius * cos(phi), y, radius * sin(phi)};
  };
  SurfacePatch patch =
      makeAnalyticPatch(map, ParamDomain{0.0, 2.0 * kPi, -0.5 * height, 0.5 * height}, "cylinder")
          .orientedAwayFrom({0.0, 0.0, 0.0});
  std::ostringstream label;
  label << "cylinder(r=" << radius << ", h=" << height << ")";
  return Surface::assemble({patch}, label.str(), false);
}

SurfacePatch sphericalChart(double radius) {
  auto map = [radius](auto theta, auto phi) {
    using std::cos;
    using std::sin;
    using T = decltype(theta);
    return BasicVec3<T>{radius * sin(theta) * cos(phi), radius * sin(theta) * sin(phi), radius * cos(theta)};
  };
  return makeAnalyticPatch(map, ParamDomain{0.0, kPi, 0.0, 2.0 * kPi}, "spherical-chart")
      .orientedAwayFrom({0.0, 0.0, 0.0});
}

}  // namespace curvball
