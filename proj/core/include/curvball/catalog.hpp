#pragma once

#include <string>
#include <vector>

#include "curvball/profile.hpp"
#include "curvball/surface.hpp"

namespace curvball {

/// Smooth function on the unit sphere written as a polynomial in the
/// coordinates of the unit direction (x, y, z).
struct RadialPerturbation {
  struct Term {
    int px = 0;
    int py = 0;
    int pz = 0;
    double coefficient = 0.0;
  };
  std::vector<Term> terms;

  /// cos(3 theta) with theta the polar angle from +z: 4 z^3 - 3 z.
  static RadialPerturbation cos3Theta();
  /// Monomials of degree >= 1 in graded lexicographic order with the given
  /// coefficients (x, y, z, x^2, xy, xz, y^2, yz, z^2, x^3, ...).
  static RadialPerturbation monomials(const std::vector<double>& coefficients);
  /// Number of monomials available to `monomials` (degrees 1 through 4).
  static constexpr std::size_t kMaxMonomials = 34;

  template <class T>
  T evaluate(const T& x, const T& y, const T& z) const {
    T sum(0.0);
    for (const Term& t : terms) {
      if (t.coefficient == 0.0) continue;
      T m(t.coefficient);
      for (int i = 0; i < t.px; ++i) m = m * x;
      for (int i = 0; i < t.py; ++i) m = m * y;
      for (int i = 0; i < t.pz; ++i) m = m * z;
      sum = sum + m;
    }
    return sum;
  }
};

/// Sphere as six gnomonic cube-face patches stitched along their edges.
/// Throws InvalidRadius for radius <= 0.
Surface makeSphere(const Vec3& center, double radius);

/// Axis-aligned ellipsoid with semi-axes (a, b, c) along x, y, z.
Surface makeEllipsoid(const Vec3& center, double a, double b, double c);

/// Radial graph r(d) = 1 + amplitude * f(d) over the unit sphere about
/// `center`. Throws NonpositiveRadius if r <= 0 on the check grid.
Surface makePerturbedSphere(const RadialPerturbation& f, double amplitude, const Vec3& center = {});

/// Revolution of the profile about the vertical line through `axisOrigin`
/// (parallel to y). Each non-axis piece gives four quarter patches
/// parametrized by (arc length, tau) with angle = k pi/2 + atan(tau).
/// Closed counter-clockwise profiles yield outward normals.
Surface makeRevolution(const ProfileCurve& profile, std::string label = "revolution",
                       const Vec3& axisOrigin = {});

/// The patches of makeRevolution, for assembling larger surfaces.
std::vector<SurfacePatch> revolutionPatches(const ProfileCurve& profile, const Vec3& axisOrigin,
                                            const std::string& component, int orientation);

/// Torus about the y-axis: revolution of a circle of radius `tubeRadius`
/// centered at distance `axisRadius`.
Surface makeTorus(double axisRadius, double tubeRadius);

/// Torus segment covering revolution angles [0, angularExtent]; closed when
/// the extent is a full turn. Throws SelfIntersecting if tubeRadius >= axisRadius.
Surface makeTubeSegment(double axisRadius, double tubeRadius, double angularExtent);

/// Open circular cylinder about the y-axis, y in [-height/2, height/2].
Surface makeCylinder(double radius, double height);

/// Single spherical-coordinate chart (theta polar from +z, phi azimuth) of the
/// sphere of given radius about O; poles are degenerate. For point queries.
SurfacePatch sphericalChart(double radius);

}  // namespace curvball
