#include "uvmesh/obj_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

namespace uvmesh {

namespace {

[[noreturn]] void parse_fail(const std::string& path, int line, const std::string& what) {
  throw DataError(path + ":" + std::to_string(line) + ": " + what);
}

// Face corner "a", "a/at", "a/at/an" or "a//an"; returns 1-based v and vt
// (vt 0 when absent).
std::pair<long, long> parse_corner(const std::string& token, const std::string& path, int line) {
  long v = 0, vt = 0;
  size_t slash = token.find('/');
  std::string vs = token.substr(0, slash);
  auto [p, ec] = std::from_chars(vs.data(), vs.data() + vs.size(), v);
  if (ec != std::errc() || p != vs.data() + vs.size()) parse_fail(path, line, "bad face index '" + token + "'");
  if (slash != std::string::npos) {
    size_t slash2 = token.find('/', slash + 1);
    std::string ts = token.substr(slash + 1, slash2 == std::string::npos ? std::string::npos
                                                                         : slash2 - slash - 1);
    if (!ts.empty()) {
      auto [q, ec2] = std::from_chars(ts.data(), ts.data() + ts.size(), vt);
      if (ec2 != std::errc() || q != ts.data() + ts.size())
        parse_fail(path, line, "bad texture index '" + token + "'");
    }
  }
  return {v, vt};
}

}  // namespace

LoadedMesh load_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);

  TriangleMesh mesh;
  std::vector<Vec2> texcoords;
  bool vt_matches_vertices = true;  // every corner uses vt index == v index
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      double x, y, z;
      if (!(ss >> x >> y >> z)) parse_fail(path, line_no, "bad vertex record");
      mesh.positions.emplace_back(x, y, z);
    } else if (tag == "vt") {
      double u, v;
      if (!(ss >> u >> v)) parse_fail(path, line_no, "bad texture record");
      texcoords.emplace_back(u, v);
    } else if (tag == "f") {
      std::string c0, c1, c2, extra;
      if (!(ss >> c0 >> c1 >> c2)) parse_fail(path, line_no, "face needs 3 corners");
      if (ss >> extra) parse_fail(path, line_no, "only triangle faces are supported");
      Face face;
      const std::string corners[3] = {c0, c1, c2};
      for (int k = 0; k < 3; ++k) {
        auto [v, vt] = parse_corner(corners[k], path, line_no);
        if (v < 0) v = static_cast<long>(mesh.positions.size()) + 1 + v;  // negative = relative
        if (v < 1 || v > static_cast<long>(mesh.positions.size()))
          parse_fail(path, line_no, "vertex index " + std::to_string(v) + " out of range");
        face[k] = static_cast<int>(v - 1);
        if (vt != 0 && vt != v) vt_matches_vertices = false;
      }
      mesh.faces.push_back(face);
    }
    // other records (vn, usemtl, o, g, s, mtllib) are ignored
  }
  mesh.validate();

  LoadedMesh out{std::move(mesh), std::nullopt};
  if (!texcoords.empty() && vt_matches_vertices &&
      texcoords.size() == out.mesh.positions.size()) {
    UVAtlas atlas;
    atlas.coords = std::move(texcoords);
    atlas.seam_map.resize(atlas.coords.size());
    for (int i = 0; i < atlas.vertex_count(); ++i) atlas.seam_map[i] = i;
    out.atlas = std::move(atlas);
  }
  return out;
}

void save_mesh(const std::string& path, const TriangleMesh& mesh, const UVAtlas* atlas) {
  if (atlas && atlas->vertex_count() != mesh.vertex_count())
    throw DataError("atlas/mesh vertex count mismatch");
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  out.precision(17);
  for (const Vec3& p : mesh.positions) out << "v " << p.x() << ' ' << p.y() << ' ' << p.z() << '\n';
  if (atlas)
    for (const Vec2& t : atlas->coords) out << "vt " << t.x() << ' ' << t.y() << '\n';
  for (const Face& f : mesh.faces) {
    if (atlas)
      out << "f " << f[0] + 1 << '/' << f[0] + 1 << ' ' << f[1] + 1 << '/' << f[1] + 1 << ' '
          << f[2] + 1 << '/' << f[2] + 1 << '\n';
    else
      out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
  }
  if (!out) throw DataError("write failed: " + path);
}

SeamSpec load_seam_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  SeamSpec seam;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag[0] == '#') continue;
    if (tag != "edge") parse_fail(path, line_no, "expected 'edge i j'");
    int i, j;
    if (!(ss >> i >> j)) parse_fail(path, line_no, "expected 'edge i j'");
    seam.edges.push_back({i, j});
  }
  return seam;
}

void save_seam_spec(const std::string& path, const SeamSpec& seam) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  for (auto [i, j] : seam.edges) out << "edge " << i << ' ' << j << '\n';
}

std::vector<int> load_seam_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::vector<int> map;
  int open_idx, orig_idx;
  while (in >> open_idx >> orig_idx) {
    if (open_idx != static_cast<int>(map.size()))
      throw DataError(path + ": seam map rows must be ordered by open index");
    map.push_back(orig_idx);
  }
  return map;
}

void save_seam_map(const std::string& path, const std::vector<int>& seam_map) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  for (size_t i = 0; i < seam_map.size(); ++i) out << i << ' ' << seam_map[i] << '\n';
}

std::vector<std::pair<int, int>> load_symmetric_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::vector<std::pair<int, int>> pairs;
  int i, j;
  while (in >> i >> j) pairs.push_back({i, j});
  return pairs;
}

void save_symmetric_pairs(const std::string& path,
                          const std::vector<std::pair<int, int>>& pairs) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  for (auto [i, j] : pairs) out << i << ' ' << j << '\n';
}

}  // namespace uvmesh
