#pragma once

#include <vector>

#include "fblab/common.hpp"

namespace fblab {

// Closed polyline approximating the smooth curve {s = 0} on the unit sphere.
// Points are Newton-projected onto the curve (|s| <= 1e-12, unit norm), so
// sampling error is purely the arc spacing between consecutive points.
struct BaseCurve {
    std::vector<Vec3> points; // closed loop, first point not repeated
    double gap = 0.0;         // max chord between consecutive points (with wrap)
    double length = 0.0;      // polyline length
    double max_cyl_radius = 0.0;

    // Cumulative chord length; arc[i] is the length up to points[i],
    // arc.back() == length (the closing segment included).
    std::vector<double> arc;

    // Points along the loop at the given arc spacing, snapped back onto the
    // curve. spacing is clamped to the traced resolution from below.
    std::vector<Vec3> resample(double spacing) const;
};

// Predictor-corrector continuation from the seed (0,1,0) along the
// tangent grad(s) x p, Newton-projected onto {s=0} cap S^2 each step.
// target_gap must lie in (1e-6, 0.1). Throws if the loop fails to close
// within the step budget.
BaseCurve trace_base_curve(double target_gap);

// Snap a near-curve unit vector onto {s=0} cap S^2 (tangential Newton).
Vec3 project_to_base_curve(Vec3 q);

} // namespace fblab
