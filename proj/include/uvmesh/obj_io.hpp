#pragma once

#include "uvmesh/atlas.hpp"
#include "uvmesh/mesh.hpp"

#include <optional>
#include <string>

namespace uvmesh {

struct LoadedMesh {
  TriangleMesh mesh;
  std::optional<UVAtlas> atlas;  // present when vt records are 1:1 with vertices
};

/// ASCII OBJ with `v x y z`, optional `vt u v`, and `f a b c` / `f a/at b/bt
/// c/ct` records. Indices are 1-based on disk. The mesh is validated; parse
/// failures report the line number. `vt` records become a UVAtlas when they
/// are 1:1 with the vertices.
LoadedMesh load_mesh(const std::string& path);

/// Writes positions, faces, and (optionally) per-vertex `vt` records.
void save_mesh(const std::string& path, const TriangleMesh& mesh,
               const UVAtlas* atlas = nullptr);

/// SeamSpec as `edge i j` lines (0-based vertex indices, comments with #).
SeamSpec load_seam_spec(const std::string& path);
void save_seam_spec(const std::string& path, const SeamSpec& seam);

/// seam_map sidecar: `open_idx orig_idx` lines.
std::vector<int> load_seam_map(const std::string& path);
void save_seam_map(const std::string& path, const std::vector<int>& seam_map);

/// Symmetric-pair sidecar: `i j` lines (0-based).
std::vector<std::pair<int, int>> load_symmetric_pairs(const std::string& path);
void save_symmetric_pairs(const std::string& path,
                          const std::vector<std::pair<int, int>>& pairs);

}  // namespace uvmesh
