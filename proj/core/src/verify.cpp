#include "cflow/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cflow {

namespace {

std::string cell_location(const Grid& g, std::size_t idx, int step = -1) {
  auto c = g.coords(idx);
  std::ostringstream os;
  if (step >= 0) os << "step " << step << ", ";
  os << "cell (" << c[0] << "," << c[1];
  if (g.dim == 3) os << "," << c[2];
  os << ")";
  return os.str();
}

}  // namespace

CheckReport check_comparison(const FlowTrace& trE, const FlowTrace& trF,
                             const Anisotropy& a) {
  CheckReport rep;
  rep.name = "comparison";
  if (trE.steps.empty() || trF.steps.empty())
    throw std::invalid_argument("check_comparison: empty trace");
  const Grid& g = trE.steps[0].mask.grid;
  if (g != trF.steps[0].mask.grid || trE.params.h != trF.params.h)
    throw std::invalid_argument("check_comparison: traces not comparable");

  const SetMask& E0 = trE.steps[0].mask;
  const SetMask& F0 = trF.steps[0].mask;
  for (std::size_t i = 0; i < E0.inside.size(); ++i)
    if (E0[i] && !F0[i])
      throw std::invalid_argument("check_comparison: initial sets not nested");

  const double cap = distance_cap(g, a);
  const double delta0 = std::min(cap, set_to_complement_distance(E0, F0, a));
  rep.tolerance_used = 4.0 * g.spacing;

  const std::size_t n = std::min(trE.steps.size(), trF.steps.size());
  double min_dist = cap;
  for (std::size_t k = 0; k < n; ++k) {
    const SetMask& E = trE.steps[k].mask;
    const SetMask& F = trF.steps[k].mask;
    for (std::size_t i = 0; i < E.inside.size(); ++i)
      if (E[i] && !F[i]) {
        rep.pass = false;
        rep.worst_violation = cap;
        rep.location = cell_location(g, i, int(k)) + " (inclusion)";
        return rep;
      }
    double dist = set_to_complement_distance(E, F, a);
    if (dist < min_dist) {
      min_dist = dist;
      rep.location = "step " + std::to_string(k);
    }
  }
  rep.worst_violation = std::max(0.0, delta0 - min_dist);
  rep.pass = rep.worst_violation <= rep.tolerance_used;
  return rep;
}

CheckReport check_supersolution_step(const ScalarField& d_prev,
                                     const ScalarField& d_next,
                                     const VectorField& z, double h,
                                     double delta, double solver_residual) {
  const Grid& g = d_prev.grid;
  if (delta < 2.0 * g.spacing)
    throw std::invalid_argument("check_supersolution_step: delta must be >= 2 dx");
  CheckReport rep;
  rep.name = "supersolution-step";
  rep.tolerance_used = 4.0 * g.spacing / h + 10.0 * solver_residual / h;
  ScalarField divz = divergence(z);
  double worst = -std::numeric_limits<double>::infinity();
  std::size_t worst_i = 0;
  for (std::size_t i = 0; i < d_next.size(); ++i) {
    if (d_next.v[i] < delta) continue;
    double viol = divz.v[i] - (d_next.v[i] - d_prev.v[i]) / h;
    if (viol > worst) {
      worst = viol;
      worst_i = i;
    }
  }
  rep.worst_violation = std::isfinite(worst) ? worst : 0.0;
  rep.location = std::isfinite(worst) ? cell_location(g, worst_i) : "vacuous";
  rep.pass = rep.worst_violation <= rep.tolerance_used;
  return rep;
}

CheckReport check_divz_bounds(const VectorField& z, const ScalarField& d,
                              double h, double R, double solver_residual) {
  const Grid& g = d.grid;
  if (!(h <= R * R / (g.dim + 1)))
    throw std::invalid_argument("check_divz_bounds requires h <= R^2/(N+1)");
  CheckReport rep;
  rep.name = "divz-bounds";
  rep.tolerance_used = 4.0 * g.spacing * g.spacing / h + 10.0 * solver_residual / h;
  const int N = g.dim;
  const double upper = (N - 1) / R;
  const double lower = -(1.0 / std::sqrt(h)) * 2.0 * N / std::sqrt(N + 1.0);
  ScalarField divz = divergence(z);
  double worst = 0.0;
  std::size_t worst_i = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    double viol = 0.0;
    if (d.v[i] >= R) viol = std::max(viol, divz.v[i] - upper);
    if (d.v[i] > 0.0) viol = std::max(viol, lower - divz.v[i]);
    if (viol > worst) {
      worst = viol;
      worst_i = i;
    }
  }
  rep.worst_violation = worst;
  rep.location = worst > 0 ? cell_location(g, worst_i) : "none";
  rep.pass = rep.worst_violation <= rep.tolerance_used;
  return rep;
}

CheckReport check_lipschitz(const ScalarField& u, const Anisotropy& a) {
  const Grid& g = u.grid;
  CheckReport rep;
  rep.name = "lipschitz";
  rep.tolerance_used = 1.02;
  const double inv = 1.0 / g.spacing;
  const int nx = g.shape[0], ny = g.shape[1], nz = g.shape[2];
  double worst = 0.0;
  std::size_t worst_i = 0;
  std::size_t idx = 0;
  for (int k = 0; k < nz; ++k)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i, ++idx) {
        const int pos[3] = {i, j, k};
        Vec grad{};
        for (int d = 0; d < g.dim; ++d) {
          const std::size_t s = g.stride(d);
          const int last = g.shape[d] - 1;
          double fwd = pos[d] < last ? (u.v[idx + s] - u.v[idx]) * inv : 0.0;
          double bwd = pos[d] > 0 ? (u.v[idx] - u.v[idx - s]) * inv : 0.0;
          if (pos[d] == last) fwd = bwd;
          if (pos[d] == 0) bwd = fwd;
          // minmod: zero across kinks, else the smaller one-sided slope
          if (fwd * bwd <= 0.0)
            grad[d] = 0.0;
          else
            grad[d] = std::abs(fwd) < std::abs(bwd) ? fwd : bwd;
        }
        double p = a.phi(grad);
        if (p > worst) {
          worst = p;
          worst_i = idx;
        }
      }
  rep.worst_violation = worst;
  rep.location = cell_location(g, worst_i);
  rep.pass = rep.worst_violation <= rep.tolerance_used;
  return rep;
}

CheckReport check_shrink_bound(const FlowTrace& tr, const Anisotropy& a) {
  CheckReport rep;
  rep.name = "shrink-bound";
  if (tr.steps.empty()) {
    rep.pass = true;
    rep.location = "vacuous";
    return rep;
  }
  const Grid& g = tr.steps[0].mask.grid;
  const int N = g.dim;
  const double h = tr.params.h;
  rep.tolerance_used = 4.0 * g.spacing;

  std::vector<ScalarField> dist;
  dist.reserve(tr.steps.size());
  for (const FlowStep& s : tr.steps) dist.push_back(signed_distance(s.mask, a));

  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> cell_pick(0, g.cell_count() - 1);
  std::uniform_int_distribution<std::size_t> step_pick(0, tr.steps.size() - 1);

  const double cap = distance_cap(g, a);
  double worst = 0.0;
  constexpr int kSamples = 4096;
  int checked = 0;
  for (int s = 0; s < kSamples; ++s) {
    std::size_t ka = step_pick(rng), kb = step_pick(rng);
    std::size_t x = cell_pick(rng);
    if (ka == kb) continue;
    if (ka > kb) std::swap(ka, kb);
    double dt = dist[ka].v[x];
    if (dt <= 0.0 || dt >= cap / 2) continue;
    double tgap = h * double(kb - ka) + h;
    if (tgap >= dt * dt / (8.0 * (N + 1))) continue;
    double bound = std::sqrt(dt * dt - 4.0 * (N - 1) * tgap);
    double viol = bound - dist[kb].v[x];
    ++checked;
    if (viol > worst) {
      worst = viol;
      rep.location = "steps " + std::to_string(ka) + "->" + std::to_string(kb) +
                     ", " + cell_location(g, x);
    }
  }
  rep.worst_violation = worst;
  if (checked == 0) rep.location = "vacuous";
  rep.pass = rep.worst_violation <= rep.tolerance_used;
  return rep;
}

}  // namespace cflow
