#pragma once

#include "cflow/anisotropy.hpp"
#include "cflow/fields.hpp"

namespace cflow {

struct SolverParams {
  int max_iters = 20000;
  /// Stopping threshold on sup|-h div z + u - g|. Values <= 0 select the
  /// default 1e-4 * max(1, sup|g|).
  double tol_residual = 0.0;
  int check_every = 20;
  double dual_projection_tol = 1e-10;
};

struct StepSolution {
  ScalarField u;
  VectorField z;
  double residual = 0.0;  // achieved sup|-h div z + u - g|
  double gap = 0.0;       // max over cells of phi(grad u) - z.grad u
  int iters = 0;
  bool converged = true;
  int dual_projection_warnings = 0;
};

/// One implicit time step: solve -h div z + u = g, z in subdiff phi(grad u),
/// by a primal-dual saddle-point iteration on
/// min_u max_{polar(z)<=1} h <z, grad u> + 1/2 |u - g|^2.
/// Cells with |g| >= distance_cap/2 are sentinels for an empty side; they are
/// frozen to u = g, z = 0 and excluded from the residual.
/// Throws std::invalid_argument when h <= 0.
StepSolution implicit_step(const ScalarField& g, double h, const Anisotropy& a,
                           const SolverParams& p,
                           const VectorField* warm_z = nullptr);

struct OptimalityReport {
  double residual = 0.0;
  double complementarity_gap = 0.0;
  double dual_infeasibility = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Re-derives all three optimality measures of a step solution from scratch.
OptimalityReport check_optimality(const StepSolution& s, const ScalarField& g,
                                  double h, const Anisotropy& a, double tol);

/// Step-size bound used by the solver: |grad| <= 2 sqrt(N) / dx.
double gradient_operator_bound(const Grid& g);

}  // namespace cflow
