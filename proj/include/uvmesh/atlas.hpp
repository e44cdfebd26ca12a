#pragma once

#include "uvmesh/mesh.hpp"

#include <vector>

namespace uvmesh {

/// Single-chart planar embedding of an open mesh. coords[i] lives in [0,1]^2
/// and belongs to vertex i of the open mesh; seam_map[i] is the index of the
/// originating vertex on the closed mesh (identity when the mesh was never
/// cut). Fold-over freedom means signed UV area > 0 for every face.
struct UVAtlas {
  std::vector<Vec2> coords;
  std::vector<int> seam_map;

  int vertex_count() const { return static_cast<int>(coords.size()); }
};

/// Edge path/tree along which a closed mesh is cut open.
struct SeamSpec {
  std::vector<std::pair<int, int>> edges;
};

/// Result of cutting: the open mesh plus the seam_map from open vertex
/// indices to original ones. When the input carries symmetric_pairs and both
/// the connectivity and the seam are mirror-symmetric, the open mesh carries
/// derived symmetric_pairs as well; otherwise they are dropped.
struct CutResult {
  TriangleMesh open_mesh;
  std::vector<int> seam_map;
};

/// Duplicates vertices along the seam so the surface becomes a disk. Face
/// count and order are preserved. Throws DataError unless the result has
/// exactly one boundary loop and Euler characteristic 1.
CutResult cut_mesh(const TriangleMesh& mesh, const SeamSpec& seam);

enum class BoundaryShape { Square, Circle };

/// Tutte embedding: boundary on a convex outline by 3D arc length, interior
/// as the uniform-weight harmonic average of its neighbors. Requires exactly
/// one boundary loop. The result is fold-over-free.
UVAtlas tutte_embed(const TriangleMesh& open_mesh, BoundaryShape boundary,
                    std::vector<int> seam_map = {});

struct DistortionConfig {
  int max_iters = 500;
  double step = 1e-2;
  double tolerance = 1e-7;  // relative energy change
};

/// Normalized per-face area-ratio energy:
///   E = face_count * sum_f (a_uv_f / sum(a_uv) - a_3d_f / sum(a_3d))^2
double area_distortion_energy(const UVAtlas& atlas, const TriangleMesh& open_mesh);

struct DistortionResult {
  UVAtlas atlas;
  double initial_energy = 0.0;
  double final_energy = 0.0;
  int iterations = 0;
};

/// Projected-gradient descent on the area-ratio energy with a backtracking
/// line search that rejects fold-overs and energy increases, so the energy is
/// non-increasing and the atlas stays inside [0,1]^2.
DistortionResult minimize_area_distortion(const UVAtlas& atlas, const TriangleMesh& open_mesh,
                                          const DistortionConfig& config = {});

struct SymmetrizeResult {
  UVAtlas atlas;
  double mirror_residual = 0.0;  // max |u_i - (1 - u_j)| + |v_i - v_j| after
  double rms_displacement = 0.0;
};

/// Aligns the fitted symmetry axis of the UV point set with u = 0.5 (rigid
/// 2D motion from a reflection Procrustes fit), then averages every
/// coordinate with its partner's mirror so pairs satisfy u_i = 1 - u_j,
/// v_i = v_j exactly. Requires symmetric_pairs on the mesh.
SymmetrizeResult symmetrize_atlas(const UVAtlas& atlas, const TriangleMesh& open_mesh);

/// 2D correlation coefficient between two distance matrices (all entries).
/// Throws DataError when either matrix is constant.
double similarity_s1(const DistanceMatrix& a, const DistanceMatrix& b);

/// Cosine similarity of the flattened matrices. Throws DataError on zero
/// matrices.
double similarity_s2(const DistanceMatrix& a, const DistanceMatrix& b);

inline DistanceMatrix uv_distance_matrix(const UVAtlas& atlas, int stride = 1) {
  return uv_distance_matrix(atlas.coords, stride);
}

/// Signed UV area of face f (positive = not flipped).
double signed_uv_area(const UVAtlas& atlas, const Face& face);

/// True when every face has signed UV area > 0.
bool fold_over_free(const UVAtlas& atlas, const TriangleMesh& open_mesh);

}  // namespace uvmesh
