#include "uvmesh/mesh.hpp"
#include "uvmesh/parallel.hpp"

#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace uvmesh {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Single-source shortest paths over a weighted adjacency list.
void dijkstra(const std::vector<std::vector<std::pair<int, double>>>& graph, int source,
              std::vector<double>& dist) {
  dist.assign(graph.size(), kInf);
  dist[source] = 0.0;
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  queue.push({0.0, source});
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    for (auto [v, w] : graph[u]) {
      double nd = d + w;
      if (nd < dist[v]) {
        dist[v] = nd;
        queue.push({nd, v});
      }
    }
  }
}

void bfs_hops(const std::vector<std::vector<int>>& neighbors, int source,
              std::vector<double>& dist) {
  dist.assign(neighbors.size(), kInf);
  dist[source] = 0.0;
  std::queue<int> frontier;
  frontier.push(source);
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    for (int v : neighbors[u]) {
      if (dist[v] == kInf) {
        dist[v] = dist[u] + 1.0;
        frontier.push(v);
      }
    }
  }
}

}  // namespace

DistanceMatrix surface_distance_matrix(const TriangleMesh& mesh, DistanceMetric metric,
                                       int stride) {
  if (stride < 1) throw DataError("stride must be >= 1");
  int components = connected_component_count(mesh);
  if (components != 1)
    throw DataError("mesh is disconnected (" + std::to_string(components) + " components)");

  std::vector<int> sample;
  for (int v = 0; v < mesh.vertex_count(); v += stride) sample.push_back(v);
  const int m = static_cast<int>(sample.size());
  if (m > 10000)
    throw DataError("dense " + std::to_string(m) + "^2 distance matrix refused; pass a sampling stride");

  MeshAdjacency adj = MeshAdjacency::build(mesh);
  std::vector<std::vector<std::pair<int, double>>> weighted;
  if (metric == DistanceMetric::EdgeLength) {
    weighted.resize(mesh.vertex_count());
    for (int v = 0; v < mesh.vertex_count(); ++v) {
      weighted[v].reserve(adj.neighbors[v].size());
      for (int u : adj.neighbors[v])
        weighted[v].push_back({u, (mesh.positions[v] - mesh.positions[u]).norm()});
    }
  }

  DistanceMatrix out;
  out.n = m;
  out.values.assign(static_cast<size_t>(m) * m, 0.0);

  // One source per row; rows are independent, so the parallel split is exact.
  parallel_for(m, [&](std::int64_t begin, std::int64_t end) {
    std::vector<double> dist;
    for (std::int64_t row = begin; row < end; ++row) {
      if (metric == DistanceMetric::EdgeLength)
        dijkstra(weighted, sample[row], dist);
      else
        bfs_hops(adj.neighbors, sample[row], dist);
      for (int col = 0; col < m; ++col) out(static_cast<int>(row), col) = dist[sample[col]];
    }
  });

  // Dijkstra rounding can leave d(i,j) != d(j,i) in the last ulp; keep the
  // matrix exactly symmetric by folding to the minimum.
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      double d = std::min(out(i, j), out(j, i));
      out(i, j) = d;
      out(j, i) = d;
    }
  return out;
}

}  // namespace uvmesh
