#include "uvmesh/atlas.hpp"
#include "uvmesh/parallel.hpp"

#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace uvmesh {

namespace {

// Point on the unit-square perimeter at parameter t in [0,4), CCW from (0,0).
Vec2 square_point(double t) {
  if (t < 1.0) return {t, 0.0};
  if (t < 2.0) return {1.0, t - 1.0};
  if (t < 3.0) return {3.0 - t, 1.0};
  return {0.0, 4.0 - t};
}

Vec2 circle_point(double t) {  // t in [0,1)
  double theta = 2.0 * M_PI * t;
  return {0.5 + 0.5 * std::cos(theta), 0.5 + 0.5 * std::sin(theta)};
}

double face_area_3d(const TriangleMesh& mesh, const Face& f) {
  return 0.5 * (mesh.positions[f[1]] - mesh.positions[f[0]])
                   .cross(mesh.positions[f[2]] - mesh.positions[f[0]])
                   .norm();
}

}  // namespace

double signed_uv_area(const UVAtlas& atlas, const Face& face) {
  const Vec2& a = atlas.coords[face[0]];
  const Vec2& b = atlas.coords[face[1]];
  const Vec2& c = atlas.coords[face[2]];
  return 0.5 * ((b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x()));
}

bool fold_over_free(const UVAtlas& atlas, const TriangleMesh& open_mesh) {
  for (const Face& f : open_mesh.faces)
    if (!(signed_uv_area(atlas, f) > 0.0)) return false;
  return true;
}

UVAtlas tutte_embed(const TriangleMesh& open_mesh, BoundaryShape boundary,
                    std::vector<int> seam_map) {
  open_mesh.validate();
  MeshAdjacency adj = MeshAdjacency::build(open_mesh);
  for (int v = 0; v < open_mesh.vertex_count(); ++v)
    if (adj.neighbors[v].empty())
      throw DataError("isolated vertex " + std::to_string(v) + " makes the system singular");

  auto loops = boundary_loops(open_mesh);
  if (loops.size() != 1)
    throw DataError("expected exactly one boundary loop, found " + std::to_string(loops.size()));
  const std::vector<int>& loop = loops[0];

  // Boundary on the convex outline by cumulative 3D arc length.
  const int n = open_mesh.vertex_count();
  UVAtlas atlas;
  atlas.coords.assign(n, Vec2::Zero());
  std::vector<char> on_boundary(n, 0);
  double total = 0.0;
  std::vector<double> offsets(loop.size(), 0.0);
  for (size_t i = 0; i < loop.size(); ++i) {
    offsets[i] = total;
    const Vec3& a = open_mesh.positions[loop[i]];
    const Vec3& b = open_mesh.positions[loop[(i + 1) % loop.size()]];
    total += (a - b).norm();
  }
  if (!(total > 0.0)) throw DataError("degenerate boundary loop");
  for (size_t i = 0; i < loop.size(); ++i) {
    double t = offsets[i] / total;
    atlas.coords[loop[i]] = boundary == BoundaryShape::Square ? square_point(4.0 * t)
                                                              : circle_point(t);
    on_boundary[loop[i]] = 1;
  }

  // Interior: uniform-weight harmonic system, one Laplacian per axis.
  std::vector<int> interior_index(n, -1);
  std::vector<int> interior;
  for (int v = 0; v < n; ++v)
    if (!on_boundary[v]) {
      interior_index[v] = static_cast<int>(interior.size());
      interior.push_back(v);
    }
  if (!interior.empty()) {
    const int m = static_cast<int>(interior.size());
    std::vector<Eigen::Triplet<double>> triplets;
    Eigen::MatrixX2d rhs = Eigen::MatrixX2d::Zero(m, 2);
    for (int row = 0; row < m; ++row) {
      int v = interior[row];
      triplets.emplace_back(row, row, static_cast<double>(adj.neighbors[v].size()));
      for (int u : adj.neighbors[v]) {
        if (on_boundary[u])
          rhs.row(row) += atlas.coords[u].transpose();
        else
          triplets.emplace_back(row, interior_index[u], -1.0);
      }
    }
    Eigen::SparseMatrix<double> laplacian(m, m);
    laplacian.setFromTriplets(triplets.begin(), triplets.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(laplacian);
    if (solver.info() != Eigen::Success) throw DataError("singular harmonic system");
    Eigen::MatrixX2d solution = solver.solve(rhs);
    if (solver.info() != Eigen::Success) throw DataError("harmonic solve failed");
    for (int row = 0; row < m; ++row) {
      atlas.coords[interior[row]] = solution.row(row).transpose();
      // harmonic values are convex combinations; clamp fp residue
      atlas.coords[interior[row]] = atlas.coords[interior[row]].cwiseMax(0.0).cwiseMin(1.0);
    }
  }

  // A clockwise-oriented input embeds with negative areas; mirror it back.
  double total_area = 0.0;
  for (const Face& f : open_mesh.faces) total_area += signed_uv_area(atlas, f);
  if (total_area < 0.0)
    for (Vec2& c : atlas.coords) c.x() = 1.0 - c.x();

  if (seam_map.empty()) {
    seam_map.resize(n);
    std::iota(seam_map.begin(), seam_map.end(), 0);
  } else if (static_cast<int>(seam_map.size()) != n) {
    throw DataError("seam_map size does not match the open mesh");
  }
  atlas.seam_map = std::move(seam_map);
  return atlas;
}

double area_distortion_energy(const UVAtlas& atlas, const TriangleMesh& open_mesh) {
  if (atlas.vertex_count() != open_mesh.vertex_count())
    throw DataError("atlas/mesh vertex count mismatch");
  const int fc = open_mesh.face_count();
  double uv_total = 0.0, total_3d = 0.0;
  for (const Face& f : open_mesh.faces) {
    uv_total += signed_uv_area(atlas, f);
    total_3d += face_area_3d(open_mesh, f);
  }
  double energy = 0.0;
  for (int f = 0; f < fc; ++f) {
    double r = signed_uv_area(atlas, open_mesh.faces[f]) / uv_total;
    double t = face_area_3d(open_mesh, open_mesh.faces[f]) / total_3d;
    double d = r - t;
    if (!std::isfinite(d))
      throw DataError("non-finite area ratio at face " + std::to_string(f));
    energy += d * d;
  }
  energy *= fc;
  if (!std::isfinite(energy)) throw DataError("non-finite area distortion energy");
  return energy;
}

DistortionResult minimize_area_distortion(const UVAtlas& atlas, const TriangleMesh& open_mesh,
                                          const DistortionConfig& config) {
  if (!fold_over_free(atlas, open_mesh)) throw DataError("input atlas has fold-overs");
  MeshAdjacency adj = MeshAdjacency::build(open_mesh);
  const int n = open_mesh.vertex_count();
  const int fc = open_mesh.face_count();

  std::vector<double> target(fc);  // 3D area fractions
  double total_3d = 0.0;
  for (int f = 0; f < fc; ++f) {
    target[f] = face_area_3d(open_mesh, open_mesh.faces[f]);
    total_3d += target[f];
  }
  for (double& t : target) t /= total_3d;

  DistortionResult result;
  result.atlas = atlas;
  result.initial_energy = area_distortion_energy(atlas, open_mesh);
  double energy = result.initial_energy;

  std::vector<double> ds(fc);  // dE/d(signed area of face f)
  std::vector<Vec2> grad(n);
  std::vector<Vec2> candidate(n);
  double step = config.step;

  for (int iter = 0; iter < config.max_iters; ++iter) {
    // per-face chain term
    double uv_total = 0.0;
    for (const Face& f : open_mesh.faces) uv_total += signed_uv_area(result.atlas, f);
    double coupling = 0.0;
    for (int f = 0; f < fc; ++f) {
      double r = signed_uv_area(result.atlas, open_mesh.faces[f]) / uv_total;
      coupling += (r - target[f]) * r;
    }
    for (int f = 0; f < fc; ++f) {
      double r = signed_uv_area(result.atlas, open_mesh.faces[f]) / uv_total;
      ds[f] = 2.0 * fc / uv_total * ((r - target[f]) - coupling);
    }

    // accumulate per-vertex gradients in fixed (ascending face) order
    parallel_for(n, [&](std::int64_t begin, std::int64_t end) {
      for (std::int64_t v = begin; v < end; ++v) {
        Vec2 g = Vec2::Zero();
        for (int f : adj.vertex_faces[v]) {
          const Face& face = open_mesh.faces[f];
          int k = face[0] == v ? 0 : (face[1] == v ? 1 : 2);
          const Vec2& p1 = result.atlas.coords[face[(k + 1) % 3]];
          const Vec2& p2 = result.atlas.coords[face[(k + 2) % 3]];
          // d(signed area)/d(corner k) = 0.5 * perp(p1 - p2)
          g += ds[f] * 0.5 * Vec2(p1.y() - p2.y(), p2.x() - p1.x());
        }
        grad[v] = g;
      }
    });

    double grad_norm = 0.0;
    for (const Vec2& g : grad) grad_norm = std::max(grad_norm, g.norm());
    if (grad_norm == 0.0) break;

    // backtracking: reject fold-overs and non-decreasing energy
    bool accepted = false;
    double new_energy = energy;
    for (int halving = 0; halving < 60 && !accepted; ++halving) {
      for (int v = 0; v < n; ++v) {
        candidate[v] = result.atlas.coords[v] - step * grad[v];
        candidate[v] = candidate[v].cwiseMax(0.0).cwiseMin(1.0);
      }
      UVAtlas trial;
      trial.coords = candidate;
      trial.seam_map = result.atlas.seam_map;
      if (fold_over_free(trial, open_mesh)) {
        double e = area_distortion_energy(trial, open_mesh);
        if (std::isfinite(e) && e < energy) {
          result.atlas.coords.swap(trial.coords);
          new_energy = e;
          accepted = true;
          break;
        }
      }
      step *= 0.5;
    }
    if (!accepted) break;

    ++result.iterations;
    double drop = energy - new_energy;
    energy = new_energy;
    step *= 1.5;
    if (drop < config.tolerance * std::max(energy, 1e-300)) break;
  }

  result.final_energy = energy;
  return result;
}

double similarity_s1(const DistanceMatrix& a, const DistanceMatrix& b) {
  if (a.n != b.n) throw DataError("distance matrices differ in size");
  const size_t total = a.values.size();
  double mean_a = 0.0, mean_b = 0.0;
  for (size_t i = 0; i < total; ++i) {
    mean_a += a.values[i];
    mean_b += b.values[i];
  }
  mean_a /= static_cast<double>(total);
  mean_b /= static_cast<double>(total);
  double cov = 0.0, var_a = 0.0, var_b = 0.0;
  for (size_t i = 0; i < total; ++i) {
    double da = a.values[i] - mean_a;
    double db = b.values[i] - mean_b;
    cov += da * db;
    var_a += da * da;
    var_b += db * db;
  }
  if (var_a == 0.0 || var_b == 0.0) throw DataError("constant distance matrix has no correlation");
  return cov / std::sqrt(var_a * var_b);
}

double similarity_s2(const DistanceMatrix& a, const DistanceMatrix& b) {
  if (a.n != b.n) throw DataError("distance matrices differ in size");
  double dot = 0.0, norm_a = 0.0, norm_b = 0.0;
  for (size_t i = 0; i < a.values.size(); ++i) {
    dot += a.values[i] * b.values[i];
    norm_a += a.values[i] * a.values[i];
    norm_b += b.values[i] * b.values[i];
  }
  if (norm_a == 0.0 || norm_b == 0.0) throw DataError("zero distance matrix has no cosine");
  return dot / std::sqrt(norm_a * norm_b);
}

}  // namespace uvmesh
