#include <cmath>
#include <limits>
#include <random>

#include "curvball/errors.hpp"
#include "curvball/mesh.hpp"

namespace curvball {

double enclosedVolume(const TriMesh& mesh) {
  if (!mesh.isWatertight()) throw NotWatertight("enclosedVolume needs a watertight mesh");
  const Vec3 c = 0.5 * (mesh.boundingBoxMin() + mesh.boundingBoxMax());
  const auto& verts = mesh.vertices();
  double sum = 0.0;
  for (std::size_t t = 0; t < mesh.triangles().size(); ++t) {
    const auto& tri = mesh.triangles()[t];
    const Vec3 centroid = (verts[tri[0]] + verts[tri[1]] + verts[tri[2]]) / 3.0;
    sum += dot(centroid - c, mesh.areaVector(t));
  }
  return sum / 3.0;
}

const char* toString(Containment c) {
  switch (c) {
    case Containment::kInside: return "inside";
    case Containment::kOutside: return "outside";
    case Containment::kOnSurface: return "on-surface";
  }
  return "?";
}

double boundaryTolerance(const TriMesh& mesh) { return 1e-9 * mesh.boundingBoxDiagonal(); }

Vec3 closestPointOnTriangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
  // Voronoi-region walk over vertices, edges and face.
  const Vec3 ab = b - a;
  const Vec3 ac = c - a;
  const Vec3 ap = p - a;
  const double d1 = dot(ab, ap);
  const double d2 = dot(ac, ap);
  if (d1 <= 0.0 && d2 <= 0.0) return a;

  const Vec3 bp = p - b;
  const double d3 = dot(ab, bp);
  const double d4 = dot(ac, bp);
  if (d3 >= 0.0 && d4 <= d3) return b;

  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) return a + (d1 / (d1 - d3)) * ab;

  const Vec3 cp = p - c;
  const double d5 = dot(ab, cp);
  const double d6 = dot(ac, cp);
  if (d6 >= 0.0 && d5 <= d6) return c;

  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) return a + (d2 / (d2 - d6)) * ac;

  const double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
    return b + ((d4 - d3) / ((d4 - d3) + (d5 - d6))) * (c - b);
  }
  const double denom = 1.0 / (va + vb + vc);
  return a + (vb * denom) * ab + (vc * denom) * ac;
}

NearestPoint minDistanceToMesh(const TriMesh& mesh, const Vec3& q) {
  NearestPoint best;
  best.distance = std::numeric_limits<double>::infinity();
  const auto& verts = mesh.vertices();
  for (std::size_t t = 0; t < mesh.triangles().size(); ++t) {
    const auto& tri = mesh.triangles()[t];
    const Vec3 p = closestPointOnTriangle(q, verts[tri[0]], verts[tri[1]], verts[tri[2]]);
    const double d = distance(p, q);
    if (d < best.distance) best = {d, p, t};
  }
  return best;
}

namespace {

enum class RayHit { kMiss, kHit, kAmbiguous };

// Moller-Trumbore against the half-line origin + s * dir, s > 0.
RayHit intersect(const Vec3& origin, const Vec3& dir, const Vec3& a, const Vec3& b, const Vec3& c) {
  constexpr double kEdgeEps = 1e-10;
  const Vec3 e1 = b - a;
  const Vec3 e2 = c - a;
  const Vec3 pv = cross(dir, e2);
  const double det = dot(e1, pv);
  const double scale = norm(e1) * norm(e2);
  if (std::abs(det) <= 1e-14 * scale) {
    // Ray parallel to the triangle plane; only ambiguous if it lies in it.
    const Vec3 n = cross(e1, e2);
    return std::abs(dot(origin - a, n)) <= 1e-14 * scale ? RayHit::kAmbiguous : RayHit::kMiss;
  }
  const double inv = 1.0 / det;
  const Vec3 tv = origin - a;
  const double u = dot(tv, pv) * inv;
  if (u < -kEdgeEps || u > 1.0 + kEdgeEps) return RayHit::kMiss;
  const Vec3 qv = cross(tv, e1);
  const double v = dot(dir, qv) * inv;
  if (v < -kEdgeEps || u + v > 1.0 + kEdgeEps) return RayHit::kMiss;
  const double s = dot(e2, qv) * inv;
  if (s <= 0.0) return RayHit::kMiss;
  if (u <= kEdgeEps || v <= kEdgeEps || u + v >= 1.0 - kEdgeEps) return RayHit::kAmbiguous;
  return RayHit::kHit;
}

}  // namespace

Containment containsPoint(const TriMesh& mesh, const Vec3& q) {
  if (mesh.triangles().empty()) return Containment::kOutside;
  if (minDistanceToMesh(mesh, q).distance < boundaryTolerance(mesh)) return Containment::kOnSurface;

  constexpr int kMaxRedraws = 8;
  std::mt19937_64 rng(0x5eedc0ffeeULL);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec3 dir = normalized(Vec3{0.5773502691896258, 0.5773502691896257, 0.5773502691896259} +
                        Vec3{0.0123456789, -0.0234567891, 0.0345678912});
  const auto& verts = mesh.vertices();
  bool inside = false;
  for (int attempt = 0; attempt <= kMaxRedraws; ++attempt) {
    int crossings = 0;
    bool ambiguous = false;
    for (const auto& tri : mesh.triangles()) {
      const RayHit hit = intersect(q, dir, verts[tri[0]], verts[tri[1]], verts[tri[2]]);
      if (hit == RayHit::kAmbiguous) {
        ambiguous = true;
        break;
      }
      if (hit == RayHit::kHit) ++crossings;
    }
    if (!ambiguous) return crossings % 2 == 1 ? Containment::kInside : Containment::kOutside;
    inside = crossings % 2 == 1;
    dir = normalized(Vec3{gauss(rng), gauss(rng), gauss(rng)});
  }
  return inside ? Containment::kInside : Containment::kOutside;
}

BallContainment containsBall(const TriMesh& mesh, const BallSpec& ball, double tol) {
  if (!mesh.isWatertight()) throw NotWatertight("containsBall needs a watertight mesh");
  if (!(ball.radius > 0.0)) throw InvalidRadius("ball radius must be positive");
  BallContainment out;
  const NearestPoint nearest = minDistanceToMesh(mesh, ball.center);
  out.margin = nearest.distance - ball.radius;
  out.witness = nearest.point;
  out.center = nearest.distance < boundaryTolerance(mesh) ? Containment::kOnSurface : containsPoint(mesh, ball.center);
  out.contained = out.center == Containment::kInside && out.margin >= -tol;
  return out;
}

}  // namespace curvball
