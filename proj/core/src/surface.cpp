#include "curvball/surface.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "curvball/errors.hpp"

namespace curvball {

const char* toString(PatchEdge edge) {
  switch (edge) {
    case PatchEdge::kUMin: return "u-min";
    case PatchEdge::kUMax: return "u-max";
    case PatchEdge::kVMin: return "v-min";
    case PatchEdge::kVMax: return "v-max";
  }
  return "?";
}

ParamPoint edgePoint(const ParamDomain& d, PatchEdge edge, double t) {
  switch (edge) {
    case PatchEdge::kUMin: return d.at(0.0, t);
    case PatchEdge::kUMax: return d.at(1.0, t);
    case PatchEdge::kVMin: return d.at(t, 0.0);
    case PatchEdge::kVMax: return d.at(t, 1.0);
  }
  return d.center();
}

namespace {

constexpr std::array<PatchEdge, 4> kEdges = {PatchEdge::kUMin, PatchEdge::kUMax, PatchEdge::kVMin,
                                             PatchEdge::kVMax};
constexpr int kEdgeSamples = 9;

using EdgeSamples = std::array<Vec3, kEdgeSamples>;

EdgeSamples sampleEdge(const SurfacePatch& patch, PatchEdge edge) {
  EdgeSamples s;
  for (int i = 0; i < kEdgeSamples; ++i) {
    s[i] = patch.position(edgePoint(patch.domain(), edge, static_cast<double>(i) / (kEdgeSamples - 1)));
  }
  return s;
}

bool collapsed(const EdgeSamples& s, double tol) {
  return std::all_of(s.begin(), s.end(), [&](const Vec3& p) { return distance(p, s[0]) <= tol; });
}

bool matches(const EdgeSamples& a, const EdgeSamples& b, bool reversed, double tol) {
  for (int i = 0; i < kEdgeSamples; ++i) {
    const Vec3& q = reversed ? b[kEdgeSamples - 1 - i] : b[i];
    if (distance(a[i], q) > tol) return false;
  }
  return true;
}

}  // namespace

Surface Surface::assemble(std::vector<SurfacePatch> patches, std::string label, bool closed,
                          double stitchTolerance) {
  Surface s;
  s.patches_ = std::move(patches);
  s.label_ = std::move(label);
  s.closed_ = closed;

  struct EdgeInfo {
    EdgeRef ref;
    EdgeSamples samples;
    bool collapsed = false;
    bool used = false;
  };
  std::vector<EdgeInfo> edges;
  for (std::size_t p = 0; p < s.patches_.size(); ++p) {
    for (PatchEdge e : kEdges) {
      EdgeInfo info{{p, e}, sampleEdge(s.patches_[p], e)};
      info.collapsed = collapsed(info.samples, stitchTolerance);
      if (info.collapsed) s.collapsed_.push_back(info.ref);
      edges.push_back(info);
    }
  }

  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].collapsed || edges[i].used) continue;
    for (std::size_t k = i + 1; k < edges.size(); ++k) {
      if (edges[k].collapsed || edges[k].used) continue;
      for (bool reversed : {false, true}) {
        if (matches(edges[i].samples, edges[k].samples, reversed, stitchTolerance)) {
          s.stitches_.push_back({edges[i].ref.patch, edges[i].ref.edge, edges[k].ref.patch,
                                 edges[k].ref.edge, reversed});
          edges[i].used = edges[k].used = true;
          break;
        }
      }
      if (edges[i].used) break;
    }
  }

  if (closed) {
    for (const EdgeInfo& e : edges) {
      if (!e.collapsed && !e.used) {
        std::ostringstream msg;
        msg << "surface '" << s.label_ << "': edge " << toString(e.ref.edge) << " of patch " << e.ref.patch
            << " (" << s.patches_[e.ref.patch].component() << ") has no partner";
        throw StitchMismatch(msg.str());
      }
    }
  }
  return s;
}

std::optional<EdgeCrossing> Surface::crossing(EdgeRef from, double t) const {
  for (const Stitch& st : stitches_) {
    if (st.patchA == from.patch && st.edgeA == from.edge) {
      return EdgeCrossing{{st.patchB, st.edgeB}, st.reversed ? 1.0 - t : t};
    }
    if (st.patchB == from.patch && st.edgeB == from.edge) {
      return EdgeCrossing{{st.patchA, st.edgeA}, st.reversed ? 1.0 - t : t};
    }
  }
  return std::nullopt;
}

bool Surface::isCollapsed(EdgeRef edge) const {
  return std::any_of(collapsed_.begin(), collapsed_.end(),
                     [&](const EdgeRef& e) { return e.patch == edge.patch && e.edge == edge.edge; });
}

Surface Surface::transformed(const RigidMotion& motion) const {
  Surface s = *this;
  for (SurfacePatch& p : s.patches_) p = p.transformed(motion);
  return s;
}

Surface Surface::translated(const Vec3& offset) const { return transformed(RigidMotion::translationBy(offset)); }

Surface Surface::relabeled(std::string label) const {
  Surface s = *this;
  s.label_ = std::move(label);
  return s;
}

std::vector<std::string> Surface::components() const {
  std::vector<std::string> out;
  for (const SurfacePatch& p : patches_) {
    if (std::find(out.begin(), out.end(), p.component()) == out.end()) out.push_back(p.component());
  }
  return out;
}

}  // namespace curvball
