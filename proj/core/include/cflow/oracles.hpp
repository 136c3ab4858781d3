#pragma once

#include <optional>

#include "cflow/anisotropy.hpp"
#include "cflow/vec.hpp"

namespace cflow {

/// Dimension-dependent constants of the closed-form bounds.
struct OracleConstants {
  int dim;
  double chi;  // 4N / sqrt(3(N+1))
};
OracleConstants oracle_constants(int dim);

/// Closed-form solution of the anisotropic total variation flow started
/// from the polar norm. Inner branch is flat in space with front radius
/// r(t) = sqrt((N+1)t).
double tv_flow_f(Vec x, double t, const Anisotropy& a);

/// The matching flux field: x/r(t) inside the front, x/polar(x) outside.
/// Returns 0 at (x,t) = (0,0) by convention.
Vec tv_flow_zeta(Vec x, double t, const Anisotropy& a);

/// Front radius of the flat region of tv_flow_f.
double tv_front_radius(double t, int dim);

/// One-step profile of the implicit scheme applied to polar(x) - R:
/// flat at sqrt(h)*2N/sqrt(N+1) where polar(x) <= sqrt(h(N+1)), else
/// polar(x) + h(N-1)/polar(x), shifted by -R.
double resolvent_wulff(Vec x, double h, double R, const Anisotropy& a);

double plateau_width(double h, int dim);   // sqrt(h(N+1))
double plateau_value(double h, int dim);   // sqrt(h)*2N/sqrt(N+1)

/// Radius after k implicit steps starting from R:
/// r <- (r + sqrt(r^2 - 4h(N-1)))/2. `radius` is empty once the closed
/// form's validity region h <= r^2/(4(N+1)) is left (the set extinguishes
/// at discrete scale); `left_regime` marks that the stop came from the
/// validity bound rather than from the square root's domain.
struct RadiusRecursionResult {
  std::optional<double> radius;
  bool left_regime = false;
};
RadiusRecursionResult radius_recursion(double R, double h, int steps, int dim);

/// Zero-step-size limit of the radius recursion: sqrt(R^2 - 2(N-1)t),
/// empty from t = R^2 / (2(N-1)) on.
std::optional<double> continuous_radius(double R, double t, int dim);

/// Short-time lower bound R - chi_N*sqrt(s) on the distance from a point
/// that starts at distance R. Valid for s in [0, R^2/(16 chi_N^2)];
/// throws std::domain_error outside.
double comp_wulff_bound(double R, double s, int dim);

}  // namespace cflow
