#include "cflow/flow.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cflow/oracles.hpp"

namespace cflow {

const char* to_string(StopReason r) {
  switch (r) {
    case StopReason::Extinct: return "Extinct";
    case StopReason::Full: return "Full";
    case StopReason::TimeUp: return "TimeUp";
    case StopReason::MarginBreach: return "MarginBreach";
  }
  return "?";
}

double default_margin(const Grid& g, double t_max) {
  return 8.0 * g.spacing + oracle_constants(g.dim).chi * std::sqrt(std::max(0.0, t_max));
}

FlowTrace run_flow(const SetMask& initial, const Anisotropy& a,
                   const FlowParams& fp, const SolverParams& sp,
                   const StepObserver& observe) {
  const Grid& g = initial.grid;
  if (!(fp.h > 0)) throw std::invalid_argument("flow.h must be > 0");
  if (!(fp.margin >= 4.0 * g.spacing))
    throw std::invalid_argument("flow.margin must be >= 4 dx");

  FlowTrace tr;
  tr.params = fp;
  tr.plateau_warning = plateau_width(fp.h, g.dim) < 3.0 * g.spacing;

  tr.steps.push_back({0, initial, std::nullopt, std::nullopt, 0.0, 0, true});

  SetMask cur = initial;
  std::optional<ScalarField> d_cur;  // signed distance of cur, reused across steps
  VectorField warm_store;
  const VectorField* warm = nullptr;

  for (int k = 0;; ++k) {
    if (cur.empty()) {
      tr.extinction_time = fp.h * k;
      tr.reason = StopReason::Extinct;
      return tr;
    }
    if (cur.full()) {
      tr.reason = StopReason::Full;
      return tr;
    }
    if (margin_distance(cur, a) < fp.margin) {
      tr.reason = StopReason::MarginBreach;
      return tr;
    }
    if (fp.h * k >= fp.t_max) {
      tr.reason = StopReason::TimeUp;
      return tr;
    }

    if (!d_cur) d_cur = signed_distance(cur, a);
    StepSolution sol = implicit_step(*d_cur, fp.h, a, sp, fp.warm_start ? warm : nullptr);
    if (!sol.converged) tr.nonconverged_steps = true;

    SetMask next(g);
    for (std::size_t i = 0; i < next.inside.size(); ++i)
      next.inside[i] = sol.u.v[i] <= 0.0 ? 1 : 0;
    ScalarField d_next = signed_distance(next, a);

    if (observe) observe(StepRecord{k, cur, next, *d_cur, d_next, sol});

    FlowStep step;
    step.k = k + 1;
    step.mask = next;
    step.residual = sol.residual;
    step.iters = sol.iters;
    step.converged = sol.converged;
    if (fp.record_fields) {
      step.u = sol.u;
      step.z = sol.z;
    }
    tr.steps.push_back(std::move(step));

    cur = std::move(next);
    d_cur = std::move(d_next);
    // Keep the dual state of this step as the next warm start.
    warm_store = std::move(sol.z);
    warm = &warm_store;
  }
}

std::vector<RadiusSample> radius_trace(const FlowTrace& tr, const Anisotropy& a,
                                       Vec center) {
  std::vector<RadiusSample> out;
  for (const FlowStep& s : tr.steps) {
    if (s.mask.empty()) break;
    const Grid& g = s.mask.grid;
    double r = 0.0;
    for (std::size_t i = 0; i < s.mask.inside.size(); ++i)
      if (s.mask[i]) r = std::max(r, a.polar(g.center(i) - center));
    RadiusSample sample;
    sample.t = tr.params.h * s.k;
    sample.r = r;
    if (r > 0.0) {
      // Reconstruction from the measured radius, without fit checks.
      SetMask w(g);
      for (std::size_t i = 0; i < w.inside.size(); ++i)
        w.inside[i] = a.polar(g.center(i) - center) <= r ? 1 : 0;
      sample.wulff_gap = hausdorff_gap(s.mask, w, a);
      sample.flagged = sample.wulff_gap > 2.0 * g.spacing;
    }
    out.push_back(sample);
  }
  return out;
}

std::vector<std::pair<double, double>> fattening_gap(const SetMask& initial,
                                                     const Anisotropy& a,
                                                     const FlowParams& fp,
                                                     const SolverParams& sp,
                                                     double delta) {
  const Grid& g = initial.grid;
  if (delta < g.spacing && delta != 0.0)
    throw std::invalid_argument("fattening delta must be >= dx (or exactly 0)");
  ScalarField d0 = signed_distance(initial, a);
  SetMask outer(g), inner(g);
  for (std::size_t i = 0; i < d0.size(); ++i) {
    outer.inside[i] = d0.v[i] <= delta ? 1 : 0;
    inner.inside[i] = d0.v[i] <= -delta ? 1 : 0;
  }
  FlowTrace to = run_flow(outer, a, fp, sp);
  FlowTrace ti = run_flow(inner, a, fp, sp);
  std::vector<std::pair<double, double>> gaps;
  std::size_t n = std::min(to.steps.size(), ti.steps.size());
  for (std::size_t k = 0; k < n; ++k)
    gaps.emplace_back(fp.h * double(k),
                      hausdorff_gap(to.steps[k].mask, ti.steps[k].mask, a));
  return gaps;
}

}  // namespace cflow
