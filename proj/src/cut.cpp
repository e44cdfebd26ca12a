#include "uvmesh/atlas.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace uvmesh {

namespace {

std::pair<int, int> undirected(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Derives symmetric_pairs for the cut mesh. Needs mirror-symmetric
// connectivity and a mirror-symmetric seam; returns empty on any mismatch.
std::vector<std::pair<int, int>> derive_open_pairs(
    const TriangleMesh& closed, const std::set<std::pair<int, int>>& seam_edges,
    const TriangleMesh& open_mesh, const std::vector<int>& seam_map,
    const std::vector<std::vector<int>>& corner_faces_of_open_vertex) {
  std::vector<int> mirror;
  try {
    mirror = closed.mirror_map();
  } catch (const DataError&) {
    return {};
  }

  for (const auto& [a, b] : seam_edges)
    if (!seam_edges.count(undirected(mirror[a], mirror[b]))) return {};

  std::map<std::array<int, 3>, int> face_lookup;
  for (int f = 0; f < closed.face_count(); ++f) {
    std::array<int, 3> key = {closed.faces[f][0], closed.faces[f][1], closed.faces[f][2]};
    std::sort(key.begin(), key.end());
    face_lookup[key] = f;
  }
  std::vector<int> face_mirror(closed.face_count(), -1);
  for (int f = 0; f < closed.face_count(); ++f) {
    std::array<int, 3> key = {mirror[closed.faces[f][0]], mirror[closed.faces[f][1]],
                              mirror[closed.faces[f][2]]};
    std::sort(key.begin(), key.end());
    auto it = face_lookup.find(key);
    if (it == face_lookup.end()) return {};
    face_mirror[f] = it->second;
  }

  // open vertex -> its wedge's partner: the wedge of mirror(orig) that
  // contains the mirrored first face.
  std::map<std::pair<int, int>, int> wedge_lookup;  // (orig vertex, face) -> open vertex
  for (int ov = 0; ov < open_mesh.vertex_count(); ++ov)
    for (int f : corner_faces_of_open_vertex[ov]) wedge_lookup[{seam_map[ov], f}] = ov;

  std::vector<std::pair<int, int>> pairs;
  std::vector<int> partner(open_mesh.vertex_count(), -1);
  for (int ov = 0; ov < open_mesh.vertex_count(); ++ov) {
    int target = -1;
    for (int f : corner_faces_of_open_vertex[ov]) {
      auto it = wedge_lookup.find({mirror[seam_map[ov]], face_mirror[f]});
      if (it == wedge_lookup.end()) return {};
      if (target == -1) target = it->second;
      else if (target != it->second) return {};  // wedge does not map cleanly
    }
    partner[ov] = target;
  }
  for (int ov = 0; ov < open_mesh.vertex_count(); ++ov) {
    if (partner[ov] < 0 || partner[partner[ov]] != ov) return {};
    if (ov <= partner[ov]) pairs.push_back({ov, partner[ov]});
  }
  return pairs;
}

}  // namespace

CutResult cut_mesh(const TriangleMesh& mesh, const SeamSpec& seam) {
  mesh.validate();

  if (seam.edges.empty()) {
    // Nothing to cut: pass an already-open disk through unchanged.
    int loops;
    try {
      loops = static_cast<int>(boundary_loops(mesh).size());
    } catch (const DataError&) {
      loops = -1;
    }
    std::set<std::pair<int, int>> edges;
    for (const Face& f : mesh.faces)
      for (int k = 0; k < 3; ++k) edges.insert(undirected(f[k], f[(k + 1) % 3]));
    int euler = mesh.vertex_count() - static_cast<int>(edges.size()) + mesh.face_count();
    if (loops != 1 || euler != 1)
      throw DataError("empty seam on a non-disk mesh (Euler characteristic " +
                      std::to_string(euler) + ", boundary loops " + std::to_string(loops) + ")");
    std::vector<int> identity(mesh.vertex_count());
    std::iota(identity.begin(), identity.end(), 0);
    return {mesh, std::move(identity)};
  }

  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (int f = 0; f < mesh.face_count(); ++f)
    for (int k = 0; k < 3; ++k)
      edge_faces[undirected(mesh.faces[f][k], mesh.faces[f][(k + 1) % 3])].push_back(f);

  std::set<std::pair<int, int>> seam_edges;
  for (auto [i, j] : seam.edges) {
    auto edge = undirected(i, j);
    if (!edge_faces.count(edge))
      throw DataError("seam edge (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") does not exist in the mesh");
    seam_edges.insert(edge);
  }

  // Group each vertex's corners into wedges: corners of two faces join when
  // the faces share a non-seam interior edge at that vertex.
  const int corner_count = mesh.face_count() * 3;
  DisjointSet wedges(corner_count);
  auto corner_of = [&](int face, int vertex) {
    for (int k = 0; k < 3; ++k)
      if (mesh.faces[face][k] == vertex) return 3 * face + k;
    throw InternalError("corner lookup failed");
  };
  for (const auto& [edge, faces] : edge_faces) {
    if (faces.size() != 2 || seam_edges.count(edge)) continue;
    for (int v : {edge.first, edge.second})
      wedges.unite(corner_of(faces[0], v), corner_of(faces[1], v));
  }

  // New vertices: original order, wedges ordered by smallest incident face.
  std::vector<std::vector<int>> vertex_corners(mesh.vertex_count());
  for (int f = 0; f < mesh.face_count(); ++f)
    for (int k = 0; k < 3; ++k) vertex_corners[mesh.faces[f][k]].push_back(3 * f + k);

  TriangleMesh open_mesh;
  open_mesh.faces = mesh.faces;
  std::vector<int> seam_map;
  std::vector<std::vector<int>> wedge_faces;  // per open vertex
  std::map<int, int> root_to_new;
  for (int v = 0; v < mesh.vertex_count(); ++v) {
    root_to_new.clear();
    for (int corner : vertex_corners[v]) {  // ascending face order
      int root = wedges.find(corner);
      auto [it, inserted] = root_to_new.try_emplace(root, open_mesh.vertex_count());
      if (inserted) {
        open_mesh.positions.push_back(mesh.positions[v]);
        seam_map.push_back(v);
        wedge_faces.push_back({});
      }
      open_mesh.faces[corner / 3][corner % 3] = it->second;
      wedge_faces[it->second].push_back(corner / 3);
    }
  }

  open_mesh.validate();
  int loops;
  try {
    loops = static_cast<int>(boundary_loops(open_mesh).size());
  } catch (const DataError&) {
    loops = -1;  // non-simple boundary
  }
  int euler = open_mesh.vertex_count() -
              static_cast<int>([&] {
                std::set<std::pair<int, int>> edges;
                for (const Face& f : open_mesh.faces)
                  for (int k = 0; k < 3; ++k) edges.insert(undirected(f[k], f[(k + 1) % 3]));
                return edges.size();
              }()) +
              open_mesh.face_count();
  if (loops != 1 || euler != 1)
    throw DataError("seam does not open the mesh into a disk (Euler characteristic " +
                    std::to_string(euler) + ", boundary loops " + std::to_string(loops) + ")");

  if (mesh.has_symmetric_pairs())
    open_mesh.symmetric_pairs =
        derive_open_pairs(mesh, seam_edges, open_mesh, seam_map, wedge_faces);

  return {std::move(open_mesh), std::move(seam_map)};
}

}  // namespace uvmesh
