#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "curvball/surface.hpp"
#include "curvball/vec3.hpp"

namespace curvball {

/// Triangle mesh with an undirected edge table. Triangles are
/// counter-clockwise seen from outside.
class TriMesh {
 public:
  using Triangle = std::array<std::uint32_t, 3>;

  struct EdgeUse {
    std::uint32_t a = 0;  ///< smaller vertex index
    std::uint32_t b = 0;
    int forward = 0;   ///< triangles traversing a -> b
    int backward = 0;  ///< triangles traversing b -> a
  };

  TriMesh() = default;
  TriMesh(std::vector<Vec3> vertices, std::vector<Triangle> triangles);

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<EdgeUse>& edges() const { return edges_; }

  /// Every edge is used by exactly two triangles with opposite orientation.
  bool isWatertight() const;
  /// Edges violating the watertight condition.
  std::size_t badEdgeCount() const;
  /// Vertices referenced by at least one triangle.
  std::size_t usedVertexCount() const;

  Vec3 boundingBoxMin() const;
  Vec3 boundingBoxMax() const;
  double boundingBoxDiagonal() const;

  double triangleArea(std::size_t t) const;
  /// Half the cross product of two edges; points outward for outward winding.
  Vec3 areaVector(std::size_t t) const;

  TriMesh flipped() const;
  TriMesh transformed(const RigidMotion& motion) const;

 private:
  void buildEdges();

  std::vector<Vec3> vertices_;
  std::vector<Triangle> triangles_;
  std::vector<EdgeUse> edges_;
};

struct BallSpec {
  Vec3 center;
  double radius = 1.0;
};

inline constexpr double kWeldTolerance = 1e-9;

/// Samples every patch on a density x density lattice (density >= 2), welds
/// coincident vertices within kWeldTolerance and drops triangles that collapse
/// at degenerate edges. Throws StitchMismatch if a stitched edge pair
/// disagrees at this density or if a closed surface does not come out
/// watertight.
TriMesh tessellate(const Surface& surface, int density);

/// Tessellates only the patches accepted by `keep` (no closure check).
TriMesh tessellatePatches(const Surface& surface, int density,
                          const std::function<bool(const SurfacePatch&)>& keep);

/// Divergence-theorem volume (1/3) sum (centroid - c) . areaVector with c the
/// bounding-box center. Throws NotWatertight.
double enclosedVolume(const TriMesh& mesh);

enum class Containment { kInside, kOutside, kOnSurface };

const char* toString(Containment c);

/// Tolerance below which a query counts as on the surface:
/// 1e-9 times the bounding-box diagonal.
double boundaryTolerance(const TriMesh& mesh);

/// Ray parity with up to 8 redraws of the ray direction when a hit lands
/// within 1e-10 (barycentric) of an edge or vertex. Deterministic.
Containment containsPoint(const TriMesh& mesh, const Vec3& q);

struct NearestPoint {
  double distance = 0.0;
  Vec3 point;
  std::size_t triangle = 0;
};

/// Exact brute-force point-to-triangle minimum.
NearestPoint minDistanceToMesh(const TriMesh& mesh, const Vec3& q);

/// Closest point on triangle (a, b, c) to p.
Vec3 closestPointOnTriangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c);

struct BallContainment {
  bool contained = false;
  double margin = 0.0;  ///< min distance from center to mesh minus radius
  Vec3 witness;         ///< nearest mesh point to the center
  Containment center = Containment::kOutside;
};

/// Contained iff the center is inside and the margin is >= -tol.
/// Throws NotWatertight.
BallContainment containsBall(const TriMesh& mesh, const BallSpec& ball, double tol);

/// V - E + F over referenced vertices.
int eulerCharacteristic(const TriMesh& mesh);

}  // namespace curvball
