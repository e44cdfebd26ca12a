#pragma once

#include "uvmesh/types.hpp"

#include <string>
#include <vector>

namespace uvmesh {

struct FactorySample {
  std::string mesh_path;
  double camera_scale = 1.0;
  double camera_tx = 0.0;
  double camera_ty = 0.0;
  std::string iuv_out;
  std::string location_out;
};

/// Ground-truth data factory manifest. Paths are resolved relative to the
/// manifest file unless absolute.
struct FactoryManifest {
  std::string atlas_obj;            // open mesh with vt records
  std::string seam_map_path;        // optional sidecar
  int iuv_height = 256, iuv_width = 256;
  int map_height = 128, map_width = 128;
  double alpha = 2.0;
  std::vector<int> torso_seeds;     // closed-mesh vertex indices
  double threshold = 0.5;
  double consistency_floor = 1.0;   // px^2 self-check bound
  std::string reference_out;
  std::string weight_out;
  std::vector<FactorySample> samples;

  static FactoryManifest load(const std::string& path);
};

struct FactorySampleReport {
  std::string mesh_path;
  bool ok = false;
  double consistency = 0.0;
  std::string error;
};

struct FactoryReport {
  std::vector<FactorySampleReport> samples;
  int failures = 0;
};

/// Runs the factory: per sample writes the gt IUV image and location map
/// (UVT + PNG preview), plus the weight map and reference map once. Each
/// sample self-checks loss_consistent against the manifest floor. Sample
/// failures are recorded and the batch continues. Parallel across samples.
FactoryReport run_factory(const FactoryManifest& manifest, const std::string& out_dir);

void write_factory_summary(const std::string& path, const FactoryReport& report);

}  // namespace uvmesh
