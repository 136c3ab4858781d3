#include "cflow/fields.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cflow {

std::size_t SetMask::count() const {
  std::size_t n = 0;
  for (auto b : inside) n += b != 0;
  return n;
}

VectorField gradient(const ScalarField& u) {
  const Grid& g = u.grid;
  VectorField out(g);
  const double inv = 1.0 / g.spacing;
  const int nx = g.shape[0], ny = g.shape[1], nz = g.shape[2];
  for (int d = 0; d < g.dim; ++d) {
    const std::size_t s = g.stride(d);
    const int last = g.shape[d] - 1;
    auto& c = out.comp[d];
    std::size_t idx = 0;
    for (int k = 0; k < nz; ++k)
      for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i, ++idx) {
          const int pos = d == 0 ? i : (d == 1 ? j : k);
          c[idx] = (pos < last) ? (u.v[idx + s] - u.v[idx]) * inv : 0.0;
        }
  }
  return out;
}

ScalarField divergence(const VectorField& p) {
  const Grid& g = p.grid;
  ScalarField out(g);
  const double inv = 1.0 / g.spacing;
  const int nx = g.shape[0], ny = g.shape[1], nz = g.shape[2];
  for (int d = 0; d < g.dim; ++d) {
    const std::size_t s = g.stride(d);
    const int last = g.shape[d] - 1;
    const auto& c = p.comp[d];
    std::size_t idx = 0;
    for (int k = 0; k < nz; ++k)
      for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i, ++idx) {
          const int pos = d == 0 ? i : (d == 1 ? j : k);
          const double a = (pos < last) ? c[idx] : 0.0;
          const double b = (pos > 0) ? c[idx - s] : 0.0;
          out.v[idx] += (a - b) * inv;
        }
  }
  return out;
}

double dot(const ScalarField& a, const ScalarField& b) {
  if (a.grid != b.grid) throw std::invalid_argument("field grids differ");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a.v[i] * b.v[i];
  return s;
}

double dot(const VectorField& a, const VectorField& b) {
  if (a.grid != b.grid) throw std::invalid_argument("field grids differ");
  double s = 0.0;
  for (int d = 0; d < a.grid.dim; ++d)
    for (std::size_t i = 0; i < a.comp[d].size(); ++i) s += a.comp[d][i] * b.comp[d][i];
  return s;
}

double sup_norm(const ScalarField& a) {
  double m = 0.0;
  for (double x : a.v) m = std::max(m, std::abs(x));
  return m;
}

double sup_diff(const ScalarField& a, const ScalarField& b) {
  if (a.grid != b.grid) throw std::invalid_argument("field grids differ");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.v[i] - b.v[i]));
  return m;
}

}  // namespace cflow
