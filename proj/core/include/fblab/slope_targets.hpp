#pragma once

#include <vector>

#include "fblab/log_scale.hpp"

namespace fblab {

// Scales where the rescaled graph has slope m at the unit circle: roots of
// A sin A = m, one branch per period (rising half-wave matching the sign of
// m), returned as combined log-scales rho' = e^A. Branches whose amplitude
// cannot reach |m| are skipped and reported.
struct SlopeTarget {
    int branch = 0;
    double A = 0.0;
    double rho = 0.0;
};

struct SlopeTargetReport {
    std::vector<SlopeTarget> targets;
    std::vector<int> skipped_branches;
};

SlopeTargetReport graph_slope_targets(double m, int k_min, int k_max);

} // namespace fblab
