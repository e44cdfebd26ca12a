#include "uvmesh/mesh.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

namespace uvmesh {

namespace {

std::pair<int, int> undirected(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace

std::vector<int> TriangleMesh::mirror_map() const {
  if (symmetric_pairs.empty()) throw DataError("mesh has no symmetric_pairs");
  std::vector<int> mirror(positions.size(), -1);
  for (auto [i, j] : symmetric_pairs) {
    if (i < 0 || j < 0 || i >= vertex_count() || j >= vertex_count())
      throw DataError("symmetric pair index out of range");
    if ((mirror[i] != -1 && mirror[i] != j) || (mirror[j] != -1 && mirror[j] != i))
      throw DataError("symmetric_pairs is not an involution");
    mirror[i] = j;
    mirror[j] = i;
  }
  for (int v = 0; v < vertex_count(); ++v)
    if (mirror[v] == -1) throw DataError("symmetric_pairs does not cover vertex " + std::to_string(v));
  return mirror;
}

void TriangleMesh::validate() const {
  const int n = vertex_count();
  for (size_t f = 0; f < faces.size(); ++f) {
    const Face& face = faces[f];
    for (int k = 0; k < 3; ++k) {
      if (face[k] < 0 || face[k] >= n)
        throw DataError("face " + std::to_string(f) + " index " + std::to_string(face[k]) +
                        " out of range (vertex count " + std::to_string(n) + ")");
    }
    if (face[0] == face[1] || face[1] == face[2] || face[0] == face[2])
      throw DataError("degenerate face " + std::to_string(f));
  }
  std::map<std::pair<int, int>, int> edge_faces;
  for (const Face& face : faces)
    for (int k = 0; k < 3; ++k) ++edge_faces[undirected(face[k], face[(k + 1) % 3])];
  for (const auto& [edge, count] : edge_faces) {
    if (count > 2)
      throw DataError("non-manifold edge (" + std::to_string(edge.first) + ", " +
                      std::to_string(edge.second) + ") shared by " + std::to_string(count) +
                      " faces");
  }
  if (!symmetric_pairs.empty()) mirror_map();
}

MeshAdjacency MeshAdjacency::build(const TriangleMesh& mesh) {
  MeshAdjacency adj;
  adj.neighbors.resize(mesh.vertex_count());
  adj.vertex_faces.resize(mesh.vertex_count());
  for (int f = 0; f < mesh.face_count(); ++f) {
    const Face& face = mesh.faces[f];
    for (int k = 0; k < 3; ++k) {
      adj.vertex_faces[face[k]].push_back(f);
      adj.neighbors[face[k]].push_back(face[(k + 1) % 3]);
      adj.neighbors[face[k]].push_back(face[(k + 2) % 3]);
    }
  }
  for (auto& nbrs : adj.neighbors) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return adj;
}

int connected_component_count(const TriangleMesh& mesh) {
  const int n = mesh.vertex_count();
  if (n == 0) return 0;
  MeshAdjacency adj = MeshAdjacency::build(mesh);
  std::vector<char> seen(n, 0);
  int components = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++components;
    std::queue<int> frontier;
    frontier.push(start);
    seen[start] = 1;
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      for (int u : adj.neighbors[v]) {
        if (!seen[u]) {
          seen[u] = 1;
          frontier.push(u);
        }
      }
    }
  }
  return components;
}

std::vector<std::vector<int>> boundary_loops(const TriangleMesh& mesh) {
  // Directed edges appearing in faces; a boundary half-edge a->b is one whose
  // opposite b->a belongs to no face.
  std::set<std::pair<int, int>> directed;
  for (const Face& face : mesh.faces)
    for (int k = 0; k < 3; ++k) directed.insert({face[k], face[(k + 1) % 3]});

  std::map<int, int> next_on_boundary;
  for (const auto& [a, b] : directed) {
    if (!directed.count({b, a})) {
      if (next_on_boundary.count(a))
        throw DataError("vertex " + std::to_string(a) + " has more than one outgoing boundary edge");
      next_on_boundary[a] = b;
    }
  }

  std::vector<std::vector<int>> loops;
  std::set<int> visited;
  for (const auto& [start, first] : next_on_boundary) {
    if (visited.count(start)) continue;
    std::vector<int> loop;
    int v = start;
    do {
      loop.push_back(v);
      visited.insert(v);
      auto it = next_on_boundary.find(v);
      if (it == next_on_boundary.end())
        throw DataError("boundary walk dead-ends at vertex " + std::to_string(v));
      v = it->second;
    } while (v != start);
    loops.push_back(std::move(loop));
  }
  return loops;
}

void DistanceMatrix::validate() const {
  if (values.size() != static_cast<size_t>(n) * n) throw DataError("distance matrix shape mismatch");
  for (int i = 0; i < n; ++i) {
    if ((*this)(i, i) != 0.0) throw DataError("distance matrix diagonal not zero");
    for (int j = i + 1; j < n; ++j) {
      double d = (*this)(i, j);
      if (!(d >= 0.0)) throw DataError("negative or non-finite distance");
      if (d != (*this)(j, i)) throw DataError("distance matrix not symmetric");
    }
  }
}

DistanceMatrix uv_distance_matrix(const std::vector<Vec2>& coords, int stride) {
  if (stride < 1) throw DataError("stride must be >= 1");
  std::vector<int> sample;
  for (int v = 0; v < static_cast<int>(coords.size()); v += stride) sample.push_back(v);
  const int m = static_cast<int>(sample.size());
  DistanceMatrix out;
  out.n = m;
  out.values.assign(static_cast<size_t>(m) * m, 0.0);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      double d = (coords[sample[i]] - coords[sample[j]]).norm();
      out(i, j) = d;
      out(j, i) = d;
    }
  }
  return out;
}

}  // namespace uvmesh
