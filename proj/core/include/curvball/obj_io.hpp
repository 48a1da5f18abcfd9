#pragma once

#include <iosfwd>
#include <string>

#include "curvball/mesh.hpp"

namespace curvball {

/// ASCII OBJ: `v x y z` lines then `f i j k` with 1-based indices.
void writeObj(std::ostream& out, const TriMesh& mesh, const std::string& comment = {});
void writeObjFile(const std::string& path, const TriMesh& mesh, const std::string& comment = {});

/// Reads `v` and triangular `f` records (the `i/t/n` index forms are
/// accepted, only the vertex index is kept). Polygon faces are fanned.
TriMesh readObj(std::istream& in);
TriMesh readObjFile(const std::string& path);

}  // namespace curvball
