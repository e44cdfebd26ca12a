#pragma once

#include <Eigen/Core>

#include <array>
#include <stdexcept>
#include <string>

namespace uvmesh {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Face = std::array<int, 3>;

/// Bad or inconsistent input data (file contents, shape mismatches,
/// violated preconditions). Maps to CLI exit code 2.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A violated internal invariant. Maps to CLI exit code 3.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace uvmesh
