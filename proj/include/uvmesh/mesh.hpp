#pragma once

#include "uvmesh/types.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace uvmesh {

/// Indexed triangle surface. Positions are in meters. symmetric_pairs, when
/// non-empty, maps each vertex to its bilateral mirror (an involution;
/// i == j is allowed for on-axis vertices).
struct TriangleMesh {
  std::vector<Vec3> positions;
  std::vector<Face> faces;
  std::vector<std::pair<int, int>> symmetric_pairs;

  int vertex_count() const { return static_cast<int>(positions.size()); }
  int face_count() const { return static_cast<int>(faces.size()); }
  bool has_symmetric_pairs() const { return !symmetric_pairs.empty(); }

  /// Full involution array built from symmetric_pairs; mirror[i] == j.
  /// Throws DataError if the pairs are not an involution or incomplete.
  std::vector<int> mirror_map() const;

  /// Checks face index ranges, face degeneracy, edge-manifoldness and the
  /// symmetric-pair involution. Throws DataError on the first violation.
  void validate() const;
};

/// Per-vertex adjacency derived once from the face list.
struct MeshAdjacency {
  std::vector<std::vector<int>> neighbors;      // sorted, unique
  std::vector<std::vector<int>> vertex_faces;   // incident faces, ascending

  static MeshAdjacency build(const TriangleMesh& mesh);
};

int connected_component_count(const TriangleMesh& mesh);

/// Undirected boundary edges (edges with exactly one incident face) chained
/// into loops. Each loop is an ordered vertex cycle following the face
/// orientation. Throws DataError if the boundary is not a disjoint union of
/// simple loops.
std::vector<std::vector<int>> boundary_loops(const TriangleMesh& mesh);

enum class DistanceMetric { EdgeLength, HopCount };

/// Dense symmetric all-pairs distances with zero diagonal. `n` counts the
/// sampled vertices when a stride was used.
struct DistanceMatrix {
  int n = 0;
  std::vector<double> values;  // row-major n*n

  double operator()(int i, int j) const { return values[static_cast<size_t>(i) * n + j]; }
  double& operator()(int i, int j) { return values[static_cast<size_t>(i) * n + j]; }

  void validate() const;  // symmetric, nonnegative, zero diagonal
};

/// Shortest-path distances on the vertex-edge graph, one Dijkstra/BFS run per
/// sampled source vertex. stride > 1 samples vertices 0, stride, 2*stride, ...
/// Dense n x n output is refused above 10000 sampled vertices.
DistanceMatrix surface_distance_matrix(const TriangleMesh& mesh, DistanceMetric metric,
                                       int stride = 1);

/// Pairwise Euclidean distances between sampled UV coordinates.
DistanceMatrix uv_distance_matrix(const std::vector<Vec2>& coords, int stride = 1);

}  // namespace uvmesh
