#include "curvball/obj_io.hpp"

#include <cstdio>
#include <charconv>
#include <fstream>
#include <sstream>

#include "curvball/errors.hpp"

namespace curvball {

void writeObj(std::ostream& out, const TriMesh& mesh, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  char buf[96];
  for (const Vec3& v : mesh.vertices()) {
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v.x, v.y, v.z);
    out << buf;
  }
  for (const auto& t : mesh.triangles()) {
    out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
  }
}

void writeObjFile(const std::string& path, const TriMesh& mesh, const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  writeObj(out, mesh, comment);
}

TriMesh readObj(std::istream& in) {
  std::vector<Vec3> vertices;
  std::vector<TriMesh::Triangle> triangles;
  std::string line;
  int lineNo = 0;
  long maxIndex = -1;
  int maxIndexLine = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      Vec3 v;
      if (!(ls >> v.x >> v.y >> v.z)) throw ConfigError("malformed vertex record", lineNo, 1);
      vertices.push_back(v);
    } else if (tag == "f") {
      std::vector<std::uint32_t> idx;
      std::string token;
      while (ls >> token) {
        const int column = static_cast<int>(line.find(token)) + 1;
        const std::string head = token.substr(0, token.find('/'));
        long i = 0;
        const auto [end, ec] = std::from_chars(head.data(), head.data() + head.size(), i);
        if (ec != std::errc() || end != head.data() + head.size() || i == 0) {
          throw ConfigError("malformed face index '" + token + "'", lineNo, column);
        }
        const long resolved = i < 0 ? static_cast<long>(vertices.size()) + i : i - 1;
        if (resolved < 0) throw ConfigError("face index out of range", lineNo, column);
        idx.push_back(static_cast<std::uint32_t>(resolved));
        if (resolved > maxIndex) {
          maxIndex = resolved;
          maxIndexLine = lineNo;
        }
      }
      if (idx.size() < 3) throw ConfigError("face with fewer than three vertices", lineNo, 1);
      for (std::size_t k = 1; k + 1 < idx.size(); ++k) triangles.push_back({idx[0], idx[k], idx[k + 1]});
    }
  }
  if (maxIndex >= static_cast<long>(vertices.size())) {
    throw ConfigError("face index out of range", maxIndexLine, 1);
  }
  return TriMesh(std::move(vertices), std::move(triangles));
}

TriMesh readObjFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return readObj(in);
}

}  // namespace curvball
