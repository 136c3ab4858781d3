#pragma once

#include <cstdint>
#include <vector>

#include "cflow/grid.hpp"

namespace cflow {

/// One scalar sample per cell.
struct ScalarField {
  Grid grid;
  std::vector<double> v;

  ScalarField() = default;
  explicit ScalarField(const Grid& g, double fill = 0.0)
      : grid(g), v(g.cell_count(), fill) {}

  double& operator[](std::size_t i) { return v[i]; }
  double operator[](std::size_t i) const { return v[i]; }
  std::size_t size() const { return v.size(); }
};

/// One vector sample per cell, stored per component.
struct VectorField {
  Grid grid;
  std::array<std::vector<double>, 3> comp;

  VectorField() = default;
  explicit VectorField(const Grid& g) : grid(g) {
    for (int d = 0; d < g.dim; ++d) comp[d].assign(g.cell_count(), 0.0);
  }

  Vec at(std::size_t i) const {
    return {comp[0][i], comp[1][i], grid.dim == 3 ? comp[2][i] : 0.0};
  }
  void set(std::size_t i, Vec w) {
    comp[0][i] = w.x;
    comp[1][i] = w.y;
    if (grid.dim == 3) comp[2][i] = w.z;
  }
};

/// Grid approximation of a closed set: true on cells that belong to it.
struct SetMask {
  Grid grid;
  std::vector<std::uint8_t> inside;

  SetMask() = default;
  explicit SetMask(const Grid& g, bool fill = false)
      : grid(g), inside(g.cell_count(), fill ? 1 : 0) {}

  bool operator[](std::size_t i) const { return inside[i] != 0; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool full() const { return count() == grid.cell_count(); }
  bool operator==(const SetMask& o) const {
    return grid == o.grid && inside == o.inside;
  }
};

/// Forward difference per axis, zero at the high boundary.
VectorField gradient(const ScalarField& u);

/// Exact negative adjoint of `gradient`: <grad u, p> = -<u, divergence p>.
ScalarField divergence(const VectorField& p);

double dot(const ScalarField& a, const ScalarField& b);
double dot(const VectorField& a, const VectorField& b);
double sup_norm(const ScalarField& a);
double sup_diff(const ScalarField& a, const ScalarField& b);

}  // namespace cflow
