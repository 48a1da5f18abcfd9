#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "curvball/patch.hpp"

namespace curvball {

enum class PatchEdge { kUMin, kUMax, kVMin, kVMax };

const char* toString(PatchEdge edge);

/// Parameter point on `edge` at normalized position t in [0,1]; t runs along
/// the free parameter in increasing order.
ParamPoint edgePoint(const ParamDomain& domain, PatchEdge edge, double t);

/// Identification of edgeA of patchA with edgeB of patchB. With `reversed`,
/// edge parameter t on A meets 1 - t on B.
struct Stitch {
  std::size_t patchA = 0;
  PatchEdge edgeA = PatchEdge::kUMin;
  std::size_t patchB = 0;
  PatchEdge edgeB = PatchEdge::kUMin;
  bool reversed = false;
};

struct EdgeRef {
  std::size_t patch = 0;
  PatchEdge edge = PatchEdge::kUMin;
};

/// Where a trace leaving `from` at edge parameter t re-enters.
struct EdgeCrossing {
  EdgeRef to;
  double t = 0.0;
};

inline constexpr double kStitchTolerance = 1e-9;

/// An ordered list of patches glued along edges. Immutable once assembled.
class Surface {
 public:
  /// Detects stitches and collapsed (point) edges by sampling each edge.
  /// For a closed surface every non-collapsed edge must be stitched, otherwise
  /// StitchMismatch is thrown.
  static Surface assemble(std::vector<SurfacePatch> patches, std::string label, bool closed,
                          double stitchTolerance = kStitchTolerance);

  const std::vector<SurfacePatch>& patches() const { return patches_; }
  const SurfacePatch& patch(std::size_t i) const { return patches_.at(i); }
  std::size_t patchCount() const { return patches_.size(); }
  const std::vector<Stitch>& stitches() const { return stitches_; }
  const std::vector<EdgeRef>& collapsedEdges() const { return collapsed_; }
  const std::string& label() const { return label_; }
  bool closed() const { return closed_; }

  std::optional<EdgeCrossing> crossing(EdgeRef from, double t) const;
  bool isCollapsed(EdgeRef edge) const;

  Surface transformed(const RigidMotion& motion) const;
  Surface translated(const Vec3& offset) const;
  Surface relabeled(std::string label) const;

  /// Distinct component names in patch order.
  std::vector<std::string> components() const;

 private:
  std::vector<SurfacePatch> patches_;
  std::vector<Stitch> stitches_;
  std::vector<EdgeRef> collapsed_;
  std::string label_;
  bool closed_ = false;
};

}  // namespace curvball
