#pragma once

#include <span>
#include <vector>

#include "rppg/types.hpp"

namespace rppg {

// Exponentially weighted scalar recursive least squares: one adaptive gain
// mapping the pigmentation reference onto the interference in the blood
// series.
struct RlsState {
  double weight = 0.0;     // adaptive gain K
  double inv_corr = 0.0;   // inverse correlation accumulator P
  double forgetting = 0.0; // alpha in (0, 1)
  double init_scale = 0.0; // delta, initial P
  long samples_seen = 0;
};

RlsState rls_init(double alpha, double delta);

// One update; returns the a priori error, which is the rectified sample.
double rls_step(RlsState& state, double desired, double reference);

struct RectifiedTrace {
  std::vector<double> blood_flow_pure;
  std::vector<double> interference_estimate;  // weight(t) * reference(t)
  std::vector<double> weight_history;         // gain used at each sample (pre-update)
  RlsState final_state;
};

RectifiedTrace rectify_trace(std::span<const double> blood_flow_impure,
                             std::span<const double> pigmentation_impure,
                             double alpha, double delta);

}  // namespace rppg
