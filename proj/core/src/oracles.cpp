#include "cflow/oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace cflow {

namespace {
void require_dim(int dim) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("oracle dim must be 2 or 3");
}
}  // namespace

OracleConstants oracle_constants(int dim) {
  require_dim(dim);
  return {dim, 4.0 * dim / std::sqrt(3.0 * (dim + 1))};
}

double tv_front_radius(double t, int dim) {
  require_dim(dim);
  return std::sqrt((dim + 1) * t);
}

double tv_flow_f(Vec x, double t, const Anisotropy& a) {
  if (t < 0) throw std::invalid_argument("tv_flow_f needs t >= 0");
  const int N = a.dim();
  const double p = a.polar(x);
  if (t == 0.0) return p;
  const double r = tv_front_radius(t, N);
  if (p <= r) return r + t * (N - 1) / r;
  return p + t * (N - 1) / p;
}

Vec tv_flow_zeta(Vec x, double t, const Anisotropy& a) {
  const int N = a.dim();
  const double p = a.polar(x);
  if (t <= 0.0) {
    if (p == 0.0) return Vec{};
    return (1.0 / p) * x;
  }
  const double r = tv_front_radius(t, N);
  if (p <= r) return (1.0 / r) * x;
  return (1.0 / p) * x;
}

double plateau_width(double h, int dim) {
  require_dim(dim);
  return std::sqrt(h * (dim + 1));
}

double plateau_value(double h, int dim) {
  require_dim(dim);
  return std::sqrt(h) * 2.0 * dim / std::sqrt(dim + 1.0);
}

double resolvent_wulff(Vec x, double h, double R, const Anisotropy& a) {
  if (!(h > 0)) throw std::invalid_argument("resolvent_wulff needs h > 0");
  const int N = a.dim();
  const double p = a.polar(x);
  if (p <= plateau_width(h, N)) return plateau_value(h, N) - R;
  return p + h * (N - 1) / p - R;
}

RadiusRecursionResult radius_recursion(double R, double h, int steps, int dim) {
  require_dim(dim);
  if (!(R > 0) || !(h > 0) || steps < 0)
    throw std::invalid_argument("radius_recursion needs R > 0, h > 0, steps >= 0");
  double r = R;
  for (int k = 0; k < steps; ++k) {
    const double disc = r * r - 4.0 * h * (dim - 1);
    if (disc < 0.0) return {std::nullopt, false};
    if (r * r < 4.0 * h * (dim + 1)) return {std::nullopt, true};
    r = 0.5 * (r + std::sqrt(disc));
  }
  return {r, false};
}

std::optional<double> continuous_radius(double R, double t, int dim) {
  require_dim(dim);
  if (!(R > 0) || t < 0)
    throw std::invalid_argument("continuous_radius needs R > 0, t >= 0");
  const double s = R * R - 2.0 * (dim - 1) * t;
  if (s <= 0.0) return std::nullopt;
  return std::sqrt(s);
}

double comp_wulff_bound(double R, double s, int dim) {
  const double chi = oracle_constants(dim).chi;
  if (s < 0.0 || s > R * R / (16.0 * chi * chi))
    throw std::domain_error("comp_wulff_bound: s outside [0, R^2/(16 chi^2)]");
  return R - chi * std::sqrt(s);
}

}  // namespace cflow
