#include "curvball/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "curvball/errors.hpp"

namespace curvball {

TriMesh::TriMesh(std::vector<Vec3> vertices, std::vector<Triangle> triangles)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles)) {
  for (const Triangle& t : triangles_) {
    for (std::uint32_t i : t) {
      if (i >= vertices_.size()) throw InvalidParameter("triangle references a missing vertex");
    }
  }
  buildEdges();
}

void TriMesh::buildEdges() {
  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(triangles_.size() * 2);
  edges_.clear();
  for (const Triangle& t : triangles_) {
    for (int k = 0; k < 3; ++k) {
      const std::uint32_t from = t[k];
      const std::uint32_t to = t[(k + 1) % 3];
      const std::uint32_t lo = std::min(from, to);
      const std::uint32_t hi = std::max(from, to);
      const std::uint64_t key = (static_cast<std::uint64_t>(lo) << 32) | hi;
      auto [it, inserted] = index.try_emplace(key, edges_.size());
      if (inserted) edges_.push_back({lo, hi, 0, 0});
      EdgeUse& e = edges_[it->second];
      (from == lo ? e.forward : e.backward) += 1;
    }
  }
}

std::size_t TriMesh::badEdgeCount() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const EdgeUse& e) { return e.forward != 1 || e.backward != 1; }));
}

bool TriMesh::isWatertight() const { return !triangles_.empty() && badEdgeCount() == 0; }

std::size_t TriMesh::usedVertexCount() const {
  std::vector<bool> used(vertices_.size(), false);
  for (const Triangle& t : triangles_) {
    for (std::uint32_t i : t) used[i] = true;
  }
  return static_cast<std::size_t>(std::count(used.begin(), used.end(), true));
}

Vec3 TriMesh::boundingBoxMin() const {
  Vec3 m{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
         std::numeric_limits<double>::infinity()};
  for (const Vec3& v : vertices_) m = {std::min(m.x, v.x), std::min(m.y, v.y), std::min(m.z, v.z)};
  return m;
}

Vec3 TriMesh::boundingBoxMax() const {
  Vec3 m{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
         -std::numeric_limits<double>::infinity()};
  for (const Vec3& v : vertices_) m = {std::max(m.x, v.x), std::max(m.y, v.y), std::max(m.z, v.z)};
  return m;
}

double TriMesh::boundingBoxDiagonal() const {
  if (vertices_.empty()) return 0.0;
  return distance(boundingBoxMin(), boundingBoxMax());
}

Vec3 TriMesh::areaVector(std::size_t t) const {
  const Triangle& tri = triangles_[t];
  const Vec3& a = vertices_[tri[0]];
  return 0.5 * cross(vertices_[tri[1]] - a, vertices_[tri[2]] - a);
}

double TriMesh::triangleArea(std::size_t t) const { return norm(areaVector(t)); }

TriMesh TriMesh::flipped() const {
  std::vector<Triangle> tris = triangles_;
  for (Triangle& t : tris) std::swap(t[1], t[2]);
  return TriMesh(vertices_, std::move(tris));
}

TriMesh TriMesh::transformed(const RigidMotion& motion) const {
  std::vector<Vec3> verts = vertices_;
  for (Vec3& v : verts) v = motion.apply(v);
  return TriMesh(std::move(verts), triangles_);
}

namespace {

// Spatial hash welding points closer than kWeldTolerance.
class Welder {
 public:
  std::uint32_t insert(const Vec3& p) {
    const auto cell = cellOf(p);
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dz = -1; dz <= 1; ++dz) {
          auto it = cells_.find(key(cell[0] + dx, cell[1] + dy, cell[2] + dz));
          if (it == cells_.end()) continue;
          for (std::uint32_t idx : it->second) {
            if (distance(points_[idx], p) <= kWeldTolerance) return idx;
          }
        }
      }
    }
    const auto idx = static_cast<std::uint32_t>(points_.size());
    points_.push_back(p);
    cells_[key(cell[0], cell[1], cell[2])].push_back(idx);
    return idx;
  }

  std::vector<Vec3> release() { return std::move(points_); }

 private:
  static constexpr double kCell = 1e-6;

  static std::array<std::int64_t, 3> cellOf(const Vec3& p) {
    return {static_cast<std::int64_t>(std::floor(p.x / kCell)), static_cast<std::int64_t>(std::floor(p.y / kCell)),
            static_cast<std::int64_t>(std::floor(p.z / kCell))};
  }
  static std::uint64_t key(std::int64_t x, std::int64_t y, std::int64_t z) {
    std::uint64_t h = static_cast<std::uint64_t>(x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(y) * 0xC2B2AE3D27D4EB4FULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(z) * 0x165667B19E3779F9ULL + (h << 6) + (h >> 2);
    return h;
  }

  std::vector<Vec3> points_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> cells_;
};

void checkStitches(const Surface& surface, int density) {
  for (const Stitch& st : surface.stitches()) {
    const SurfacePatch& a = surface.patch(st.patchA);
    const SurfacePatch& b = surface.patch(st.patchB);
    for (int i = 0; i < density; ++i) {
      const double t = static_cast<double>(i) / (density - 1);
      const Vec3 pa = a.position(edgePoint(a.domain(), st.edgeA, t));
      const Vec3 pb = b.position(edgePoint(b.domain(), st.edgeB, st.reversed ? 1.0 - t : t));
      if (distance(pa, pb) > kWeldTolerance) {
        std::ostringstream msg;
        msg << "stitch between patch " << st.patchA << " (" << toString(st.edgeA) << ") and patch " << st.patchB
            << " (" << toString(st.edgeB) << ") disagrees by " << distance(pa, pb) << " at t=" << t;
        throw StitchMismatch(msg.str());
      }
    }
  }
}

}  // namespace

TriMesh tessellatePatches(const Surface& surface, int density,
                          const std::function<bool(const SurfacePatch&)>& keep) {
  if (density < 2) throw InvalidParameter("tessellation density must be at least 2");
  Welder welder;
  std::vector<TriMesh::Triangle> triangles;
  std::vector<std::uint32_t> ids(static_cast<std::size_t>(density) * density);
  for (const SurfacePatch& patch : surface.patches()) {
    if (!keep(patch)) continue;
    const ParamDomain& d = patch.domain();
    for (int i = 0; i < density; ++i) {
      for (int j = 0; j < density; ++j) {
        const ParamPoint p = d.at(static_cast<double>(i) / (density - 1), static_cast<double>(j) / (density - 1));
        ids[static_cast<std::size_t>(i) * density + j] = welder.insert(patch.position(p));
      }
    }
    const bool outward = patch.orientation() > 0;
    auto emit = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
      if (a == b || b == c || a == c) return;
      triangles.push_back(outward ? TriMesh::Triangle{a, b, c} : TriMesh::Triangle{a, c, b});
    };
    for (int i = 0; i + 1 < density; ++i) {
      for (int j = 0; j + 1 < density; ++j) {
        const std::uint32_t a = ids[static_cast<std::size_t>(i) * density + j];
        const std::uint32_t b = ids[static_cast<std::size_t>(i + 1) * density + j];
        const std::uint32_t c = ids[static_cast<std::size_t>(i + 1) * density + j + 1];
        const std::uint32_t e = ids[static_cast<std::size_t>(i) * density + j + 1];
        emit(a, b, c);
        emit(a, c, e);
      }
    }
  }
  return TriMesh(welder.release(), std::move(triangles));
}

TriMesh tessellate(const Surface& surface, int density) {
  if (density < 2) throw InvalidParameter("tessellation density must be at least 2");
  checkStitches(surface, density);
  TriMesh mesh = tessellatePatches(surface, density, [](const SurfacePatch&) { return true; });
  if (surface.closed() && !mesh.isWatertight()) {
    std::ostringstream msg;
    msg << "tessellation of closed surface '" << surface.label() << "' has " << mesh.badEdgeCount()
        << " non-manifold or boundary edges";
    throw StitchMismatch(msg.str());
  }
  return mesh;
}

int eulerCharacteristic(const TriMesh& mesh) {
  return static_cast<int>(mesh.usedVertexCount()) - static_cast<int>(mesh.edges().size()) +
         static_cast<int>(mesh.triangles().size());
}

}  // namespace curvball
