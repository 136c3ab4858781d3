#include "cflow/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cflow/distance.hpp"

namespace cflow {

namespace {

std::vector<std::uint8_t> live_cells(const ScalarField& g, const Anisotropy& a) {
  const double half_cap = 0.5 * distance_cap(g.grid, a);
  std::vector<std::uint8_t> live(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) live[i] = std::abs(g.v[i]) < half_cap;
  return live;
}

double default_tol(const ScalarField& g, const std::vector<std::uint8_t>& live) {
  double m = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (live[i]) m = std::max(m, std::abs(g.v[i]));
  return 1e-4 * std::max(1.0, m);
}

}  // namespace

double gradient_operator_bound(const Grid& g) {
  return 2.0 * std::sqrt(double(g.dim)) / g.spacing;
}

StepSolution implicit_step(const ScalarField& g, double h, const Anisotropy& a,
                           const SolverParams& p, const VectorField* warm_z) {
  if (!(h > 0)) throw std::invalid_argument("implicit_step needs h > 0");
  if (a.dim() != g.grid.dim)
    throw std::invalid_argument("anisotropy/grid dimension mismatch");
  if (p.max_iters < 1 || p.check_every < 1)
    throw std::invalid_argument("solver params: max_iters, check_every must be >= 1");

  const Grid& gr = g.grid;
  const int dim = gr.dim;
  const int nx = gr.shape[0], ny = gr.shape[1], nz = gr.shape[2];
  const std::size_t sx = gr.stride(0), sy = gr.stride(1), sz = gr.stride(2);
  const double dx = gr.spacing;

  const auto live = live_cells(g, a);
  const double tol = p.tol_residual > 0 ? p.tol_residual : default_tol(g, live);

  const double L = gradient_operator_bound(gr);
  const double tau = 0.99 / (h * L);
  const double sigma_h = 0.99 / L;  // sigma * h with sigma = tau

  StepSolution out;
  out.u = g;
  out.z = warm_z && warm_z->grid == gr ? *warm_z : VectorField(gr);
  ScalarField ubar = g;

  auto& u = out.u.v;
  auto& ub = ubar.v;
  double* zc[3] = {out.z.comp[0].data(), out.z.comp[1].data(),
                   dim == 3 ? out.z.comp[2].data() : nullptr};

  // Edges with a frozen endpoint carry no gradient; clear any warm values.
  {
    std::size_t idx = 0;
    for (int k = 0; k < nz; ++k)
      for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i, ++idx) {
          const int pos[3] = {i, j, k};
          for (int d = 0; d < dim; ++d) {
            const std::size_t s = d == 0 ? sx : (d == 1 ? sy : sz);
            bool edge_live = live[idx] && pos[d] < gr.shape[d] - 1 && live[idx + s];
            if (!edge_live) zc[d][idx] = 0.0;
          }
        }
  }

  const double inv_dx = 1.0 / dx;
  double res = 0.0;
  int iter = 0;
  out.converged = false;
  for (; iter < p.max_iters; ++iter) {
    // Dual ascent with projection onto {polar <= 1}.
    std::size_t idx = 0;
    for (int k = 0; k < nz; ++k)
      for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i, ++idx) {
          if (!live[idx]) continue;
          const int pos[3] = {i, j, k};
          Vec zt{};
          std::array<bool, 3> act{false, false, false};
          int n_act = 0;
          for (int d = 0; d < dim; ++d) {
            const std::size_t s = d == 0 ? sx : (d == 1 ? sy : sz);
            if (pos[d] < gr.shape[d] - 1 && live[idx + s]) {
              zt[d] = zc[d][idx] + sigma_h * (ub[idx + s] - ub[idx]) * inv_dx;
              act[d] = true;
              ++n_act;
            }
          }
          if (n_act == 0) continue;
          bool conv = true;
          Vec zp = n_act == dim
                       ? a.project_dual(zt, p.dual_projection_tol, &conv)
                       : a.project_dual_slice(zt, act, p.dual_projection_tol, &conv);
          if (!conv) ++out.dual_projection_warnings;
          for (int d = 0; d < dim; ++d)
            if (act[d]) zc[d][idx] = zp[d];
        }

    // Proximal descent; the increment |u - u_new|/tau equals the
    // fixed-point residual |-h div z + u_new - g| cellwise.
    const bool measure = (iter + 1) % p.check_every == 0 || iter + 1 == p.max_iters;
    if (measure) res = 0.0;
    idx = 0;
    for (int k = 0; k < nz; ++k)
      for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i, ++idx) {
          if (!live[idx]) continue;
          const int pos[3] = {i, j, k};
          double divz = 0.0;
          for (int d = 0; d < dim; ++d) {
            const std::size_t s = d == 0 ? sx : (d == 1 ? sy : sz);
            const double fwd = pos[d] < gr.shape[d] - 1 ? zc[d][idx] : 0.0;
            const double bwd = pos[d] > 0 ? zc[d][idx - s] : 0.0;
            divz += (fwd - bwd) * inv_dx;
          }
          const double unew = (u[idx] + tau * (h * divz + g.v[idx])) / (1.0 + tau);
          if (measure) res = std::max(res, std::abs(u[idx] - unew) / tau);
          ub[idx] = 2.0 * unew - u[idx];
          u[idx] = unew;
        }

    if (measure && res <= tol) {
      out.converged = true;
      ++iter;
      break;
    }
  }
  out.iters = iter;

  // Report the exact exit-state measures.
  std::size_t idx = 0;
  out.residual = 0.0;
  out.gap = 0.0;
  for (int k = 0; k < nz; ++k)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i, ++idx) {
        if (!live[idx]) continue;
        const int pos[3] = {i, j, k};
        double divz = 0.0;
        Vec grad{}, zv{};
        for (int d = 0; d < dim; ++d) {
          const std::size_t s = d == 0 ? sx : (d == 1 ? sy : sz);
          const double fwd = pos[d] < gr.shape[d] - 1 ? zc[d][idx] : 0.0;
          const double bwd = pos[d] > 0 ? zc[d][idx - s] : 0.0;
          divz += (fwd - bwd) * inv_dx;
          if (pos[d] < gr.shape[d] - 1 && live[idx + s])
            grad[d] = (u[idx + s] - u[idx]) * inv_dx;
          zv[d] = pos[d] < gr.shape[d] - 1 ? zc[d][idx] : 0.0;
        }
        out.residual = std::max(out.residual, std::abs(-h * divz + u[idx] - g.v[idx]));
        out.gap = std::max(out.gap, a.phi(grad) - dot(zv, grad));
      }
  return out;
}

OptimalityReport check_optimality(const StepSolution& s, const ScalarField& g,
                                  double h, const Anisotropy& a, double tol) {
  const Grid& gr = g.grid;
  const auto live = live_cells(g, a);
  ScalarField divz = divergence(s.z);
  VectorField grad = gradient(s.u);

  OptimalityReport rep;
  rep.tolerance = tol;
  for (std::size_t i = 0; i < g.size(); ++i) {
    rep.dual_infeasibility = std::max(rep.dual_infeasibility, a.polar(s.z.at(i)) - 1.0);
    if (!live[i]) continue;
    rep.residual = std::max(rep.residual, std::abs(-h * divz.v[i] + s.u.v[i] - g.v[i]));
    // Suppress gradient components across frozen cells, as the solver does.
    Vec gv = grad.at(i);
    auto co = gr.coords(i);
    for (int d = 0; d < gr.dim; ++d) {
      const std::size_t st = gr.stride(d);
      if (co[d] < gr.shape[d] - 1 && !live[i + st]) gv[d] = 0.0;
    }
    rep.complementarity_gap =
        std::max(rep.complementarity_gap, a.phi(gv) - dot(s.z.at(i), gv));
  }
  rep.pass = rep.residual <= tol && rep.complementarity_gap <= tol &&
             rep.dual_infeasibility <= tol;
  return rep;
}

}  // namespace cflow
