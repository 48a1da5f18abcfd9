#include "curvball/geodesic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "curvball/curvature.hpp"
#include "curvball/errors.hpp"

namespace curvball {

namespace {

// (u, v, u', v') with ' = d/ds.
using State = std::array<double, 4>;

State operator+(const State& a, const State& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }
State operator*(double s, const State& a) { return {s * a[0], s * a[1], s * a[2], s * a[3]}; }

// Solves [E F; F G] x = rhs.
std::array<double, 2> solveMetric(const PatchJet& j, double r0, double r1) {
  const double e = dot(j.ru, j.ru);
  const double f = dot(j.ru, j.rv);
  const double g = dot(j.rv, j.rv);
  const double det = e * g - f * f;
  return {(g * r0 - f * r1) / det, (e * r1 - f * r0) / det};
}

State derivative(const SurfacePatch& patch, const State& s) {
  const PatchJet j = patch.jet({s[0], s[1]});
  const double a = s[2];
  const double b = s[3];
  // Acceleration must be normal: project the quadratic term out of the tangent plane.
  const Vec3 quad = a * a * j.ruu + 2.0 * a * b * j.ruv + b * b * j.rvv;
  const auto acc = solveMetric(j, -dot(j.ru, quad), -dot(j.rv, quad));
  return {a, b, acc[0], acc[1]};
}

State rk4(const SurfacePatch& patch, const State& s, double h) {
  const State k1 = derivative(patch, s);
  const State k2 = derivative(patch, s + (0.5 * h) * k1);
  const State k3 = derivative(patch, s + (0.5 * h) * k2);
  const State k4 = derivative(patch, s + h * k3);
  return s + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Parameter velocity of the unit tangent-plane projection of v.
State chart(const SurfacePatch& patch, ParamPoint p, const Vec3& v) {
  const PatchJet j = patch.jet(p);
  const Vec3 n = normalized(cross(j.ru, j.rv));
  const Vec3 tangent = normalized(v - dot(v, n) * n);
  const auto ab = solveMetric(j, dot(j.ru, tangent), dot(j.rv, tangent));
  return {p.u, p.v, ab[0], ab[1]};
}

Vec3 velocity(const SurfacePatch& patch, const State& s) {
  const PatchJet j = patch.jet({s[0], s[1]});
  return s[2] * j.ru + s[3] * j.rv;
}

// Edge most violated by p, if any, and the edge parameter of the exit.
bool exitEdge(const ParamDomain& d, ParamPoint p, PatchEdge& edge, double& t) {
  const double du = d.u1 - d.u0;
  const double dv = d.v1 - d.v0;
  const std::array<std::pair<double, PatchEdge>, 4> excess = {{{(d.u0 - p.u) / du, PatchEdge::kUMin},
                                                               {(p.u - d.u1) / du, PatchEdge::kUMax},
                                                               {(d.v0 - p.v) / dv, PatchEdge::kVMin},
                                                               {(p.v - d.v1) / dv, PatchEdge::kVMax}}};
  const auto worst = std::max_element(excess.begin(), excess.end(),
                                      [](const auto& a, const auto& b) { return a.first < b.first; });
  if (worst->first <= 0.0) return false;
  edge = worst->second;
  const double raw = (edge == PatchEdge::kUMin || edge == PatchEdge::kUMax) ? (p.v - d.v0) / dv : (p.u - d.u0) / du;
  t = std::clamp(raw, 0.0, 1.0);
  return true;
}

}  // namespace

double defaultGeodesicStep(double length) { return std::min(1e-3, length / 1000.0); }

ParamPoint invertPatch(const SurfacePatch& patch, const Vec3& target, ParamPoint seed) {
  ParamPoint p = seed;
  for (int it = 0; it < 50; ++it) {
    const PatchJet j = patch.jet(p);
    const Vec3 r = target - j.r;
    const auto delta = solveMetric(j, dot(j.ru, r), dot(j.rv, r));
    p.u += delta[0];
    p.v += delta[1];
    if (std::abs(delta[0]) + std::abs(delta[1]) < 1e-15 * (1.0 + patch.domain().extent())) break;
  }
  return p;
}

GeodesicTrace traceGeodesic(const Surface& surface, std::size_t patchIndex, ParamPoint start, const Vec3& direction,
                            double length, double step) {
  if (!(step > 0.0) || !(length >= 0.0)) throw InvalidParameter("geodesic length and step must be positive");
  std::size_t current = patchIndex;
  State s = chart(surface.patch(current), start, direction);

  GeodesicTrace trace;
  trace.startNormal = surface.patch(current).normal(start);
  trace.points.push_back({current, start, surface.patch(current).position(start), 0.0});

  double travelled = 0.0;
  while (travelled < length) {
    const double h = std::min(step, length - travelled);
    s = rk4(surface.patch(current), s, h);
    travelled += h;

    // Re-chart until the state lies inside some patch (corners may take two hops).
    for (int hop = 0; hop < 4; ++hop) {
      const SurfacePatch& patch = surface.patch(current);
      PatchEdge edge{};
      double t = 0.0;
      if (!exitEdge(patch.domain(), {s[0], s[1]}, edge, t)) break;
      const auto next = surface.crossing({current, edge}, t);
      if (!next) {
        std::ostringstream msg;
        msg << "geodesic left patch " << current << " through unstitched edge " << toString(edge);
        throw PatchBoundaryUnstitched(msg.str());
      }
      const Vec3 position = patch.position({s[0], s[1]});
      const Vec3 v = velocity(patch, s);
      const SurfacePatch& target = surface.patch(next->to.patch);
      const ParamPoint seed = edgePoint(target.domain(), next->to.edge, next->t);
      const ParamPoint p = invertPatch(target, position, seed);
      current = next->to.patch;
      s = chart(target, p, v);
    }
    const ParamPoint p{s[0], s[1]};
    trace.points.push_back({current, p, surface.patch(current).position(p), travelled});
  }
  trace.totalLength = travelled;
  trace.endNormal = surface.patch(current).normal({s[0], s[1]});
  return trace;
}

}  // namespace curvball
