#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>

#include "cflow/vec.hpp"

namespace cflow {

/// Regular lattice of cell centers. Values are stored row-major with the
/// x index fastest: idx = (k*ny + j)*nx + i. `origin` is the physical
/// coordinate of the center of cell (0,0,0).
struct Grid {
  int dim = 2;
  std::array<int, 3> shape{8, 8, 1};
  double spacing = 1.0;
  Vec origin{};

  Grid() = default;
  Grid(int dim_, std::array<int, 3> shape_, double spacing_, Vec origin_)
      : dim(dim_), shape(shape_), spacing(spacing_), origin(origin_) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("grid.dim must be 2 or 3");
    if (dim == 2) shape[2] = 1;
    for (int d = 0; d < dim; ++d)
      if (shape[d] < 8) throw std::invalid_argument("grid.shape must be >= 8 per axis");
    if (!(spacing > 0.0)) throw std::invalid_argument("grid.spacing must be > 0");
  }

  std::size_t cell_count() const {
    return std::size_t(shape[0]) * shape[1] * shape[2];
  }

  std::size_t stride(int axis) const {
    if (axis == 0) return 1;
    if (axis == 1) return std::size_t(shape[0]);
    return std::size_t(shape[0]) * shape[1];
  }

  std::size_t index(int i, int j, int k = 0) const {
    return (std::size_t(k) * shape[1] + j) * shape[0] + i;
  }

  std::array<int, 3> coords(std::size_t idx) const {
    int i = int(idx % shape[0]);
    int j = int((idx / shape[0]) % shape[1]);
    int k = int(idx / (std::size_t(shape[0]) * shape[1]));
    return {i, j, k};
  }

  Vec center(int i, int j, int k = 0) const {
    return {origin.x + i * spacing, origin.y + j * spacing,
            dim == 3 ? origin.z + k * spacing : 0.0};
  }

  Vec center(std::size_t idx) const {
    auto c = coords(idx);
    return center(c[0], c[1], c[2]);
  }

  /// Coordinate of the last cell center along an axis.
  double high(int axis) const { return origin[axis] + (shape[axis] - 1) * spacing; }
  double low(int axis) const { return origin[axis]; }

  bool operator==(const Grid& o) const {
    return dim == o.dim && shape == o.shape && spacing == o.spacing &&
           origin.x == o.origin.x && origin.y == o.origin.y && origin.z == o.origin.z;
  }
  bool operator!=(const Grid& o) const { return !(*this == o); }
};

}  // namespace cflow
