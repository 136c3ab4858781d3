#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cflow/distance.hpp"
#include "cflow/resolvent.hpp"

namespace cflow {

struct FlowParams {
  double h = 0.01;        // time step
  double t_max = 1.0;
  double margin = 0.0;    // min polar distance from the set to the grid rim
  bool record_fields = false;
  bool warm_start = true;
};

enum class StopReason { Extinct, Full, TimeUp, MarginBreach };
const char* to_string(StopReason r);

struct FlowStep {
  int k = 0;
  SetMask mask;
  std::optional<ScalarField> u;  // present when record_fields
  std::optional<VectorField> z;
  double residual = 0.0;
  int iters = 0;
  bool converged = true;
};

struct FlowTrace {
  FlowParams params;
  std::vector<FlowStep> steps;  // steps[k].mask is the set after k steps
  std::optional<double> extinction_time;
  StopReason reason = StopReason::TimeUp;
  bool plateau_warning = false;  // step too small for the grid: motion may pin
  bool nonconverged_steps = false;
};

/// Everything one iteration produced, for streaming consumers.
struct StepRecord {
  int k = 0;                   // index of the produced set (k+1 in the trace)
  const SetMask& prev_mask;
  const SetMask& next_mask;
  const ScalarField& d_prev;   // signed distance of prev_mask (the data g)
  const ScalarField& d_next;   // signed distance of next_mask
  const StepSolution& sol;
};
using StepObserver = std::function<void(const StepRecord&)>;

/// Iterate: g = signed_distance(E_k); (u,z) = implicit_step(g); E_{k+1} =
/// {u <= 0}. Stops on extinction (recorded as h * first empty k), full grid,
/// t_max, or when the set gets closer than `margin` to the grid rim.
FlowTrace run_flow(const SetMask& initial, const Anisotropy& a,
                   const FlowParams& fp, const SolverParams& sp,
                   const StepObserver& observe = {});

/// Default margin: 8 dx plus the reach chi_N * sqrt(t_max) of the
/// short-time comparison bound.
double default_margin(const Grid& g, double t_max);

struct RadiusSample {
  double t = 0.0;
  double r = 0.0;          // max polar(x - center) over mask cells
  double wulff_gap = 0.0;  // distance to the wulff mask of radius r
  bool flagged = false;    // mask is not wulff-like within 2 dx
};

/// Radius trace about `center`; entries stop at the first empty mask.
std::vector<RadiusSample> radius_trace(const FlowTrace& tr, const Anisotropy& a,
                                       Vec center);

/// Gap between the flows started from the delta-outer and delta-inner level
/// sets of the initial mask's signed distance, per common step. A gap that
/// does not shrink to O(delta) flags nonuniqueness of the evolution.
std::vector<std::pair<double, double>> fattening_gap(const SetMask& initial,
                                                     const Anisotropy& a,
                                                     const FlowParams& fp,
                                                     const SolverParams& sp,
                                                     double delta);

}  // namespace cflow
