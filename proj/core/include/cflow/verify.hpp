#pragma once

#include <string>

#include "cflow/flow.hpp"

namespace cflow {

struct CheckReport {
  std::string name;
  bool pass = false;
  double worst_violation = 0.0;
  std::string location;        // cell/step of the worst violation
  double tolerance_used = 0.0;
};

/// Nested flows stay nested: exact cellwise inclusion of E in F at every
/// step, and the polar distance from E to F's complement never drops more
/// than 4 dx below its initial value. Requires E(0) inside F(0).
CheckReport check_comparison(const FlowTrace& trE, const FlowTrace& trF,
                             const Anisotropy& a);

/// One-step supersolution inequality: div z <= (d_next - d_prev)/h + tol on
/// cells with d_next >= delta, tol = 4 dx / h + 10 * solver_residual / h.
CheckReport check_supersolution_step(const ScalarField& d_prev,
                                     const ScalarField& d_next,
                                     const VectorField& z, double h,
                                     double delta, double solver_residual = 0.0);

/// Curvature bounds of a step: div z <= (N-1)/R on {d >= R} and
/// div z >= -(1/sqrt h) 2N/sqrt(N+1) on {d > 0}, where d is the data
/// distance of the step. Requires h <= R^2/(N+1).
CheckReport check_divz_bounds(const VectorField& z, const ScalarField& d,
                              double h, double R, double solver_residual = 0.0);

/// max over cells of phi(grad u) <= 1.02, with the gradient evaluated by
/// minimum-magnitude one-sided differences per axis (zero across sign
/// changes) so that cone-type profiles are measured by their a.e. slope.
CheckReport check_lipschitz(const ScalarField& u, const Anisotropy& a);

/// Sampled two-time bound d(x,s) >= sqrt(d(x,t)^2 - 4(N-1)(s-t+h)) with
/// slack 4 dx, on seeded samples restricted to the bound's validity window.
CheckReport check_shrink_bound(const FlowTrace& tr, const Anisotropy& a);

}  // namespace cflow
