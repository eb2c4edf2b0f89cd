#pragma once

#include <vector>

#include "fblab/point_cloud.hpp"
#include "fblab/set_distance.hpp"

namespace fblab {

// Scales rho_k = exp(theta0 + 2 pi k): for the log-log law these are exactly
// the scales whose rotation angle is theta0 mod 2pi. eps_k = rho_k^{-1/2} is
// the per-scale inner cutoff of the convergence experiment.
struct BlowupSequence {
    double theta0 = 0.0;
    std::vector<int> k;
    std::vector<double> rho;
    std::vector<double> eps;
};

// Requires theta0 in [0, 2pi), scales inside the pure-law region, and
// rho_{k_max} within the e^70 precision budget.
BlowupSequence blowup_log_scales(double theta0, int k_min, int k_max);

// One scale of the blow-up experiment. hd_estimate is the raw Hausdorff
// distance between the rescaled interface and the rotated cone over the
// sampled annulus [eps, R] (brute-force cloud value, or the matched-shell
// analytic bound where a cloud at the prescribed gap would be infeasible).
// envelope = hd_estimate + gap_terms is the certified upper estimate for
// the full-ball distance; its eps-driven decay is the rho^{-1/2} law.
struct BlowupRow {
    int k = 0;
    double rho = 0.0;
    double eps = 0.0;
    bool used_cloud = false;
    double hd_estimate = 0.0;
    double gap_terms = 0.0;
    double envelope = 0.0;
    std::size_t cloud_points = 0;
};

struct BlowupOptions {
    double R = 2.0;
    std::size_t max_cloud_points = 30'000'000;
    bool force_cloud = false; // error instead of falling back to matched shells
};

std::vector<BlowupRow> blowup_convergence(const TwistProfile& profile, double theta0,
                                          int k_min, int k_max, const BaseCurve& curve,
                                          const BlowupOptions& opt = {});

// sup over t in (0, R] of 2 t sin(|theta(rho - log t) - reference|/2) * sigma,
// the shell-matching upper bound for the distance between the rescaled
// interface and the cone rotated by `reference`.
double matched_shell_bound(const TwistProfile& profile, double rho, double R,
                           double reference_angle, double max_cyl_radius);

// Lemma-style two-sided check at one scale: lhs from clouds over [eps, R],
// the matched-shell analogue, and rhs = max(eps, sup_t t |dtheta|).
struct HdLemmaResult {
    double rho = 0.0;
    double R = 0.0;
    double eps = 0.0;
    bool has_cloud = false;
    double lhs_cloud = 0.0;
    double gap_terms = 0.0;
    double lhs_matched = 0.0;
    double rhs_sup = 0.0;
    double ratio_cloud = 0.0;   // (lhs_cloud + gap_terms) / rhs_sup
    double ratio_matched = 0.0; // max(eps, lhs_matched) / rhs_sup
};

HdLemmaResult hd_lemma_check(const TwistProfile& profile, const LogScale& scale, double R,
                             double eps, double cloud_gap, const BaseCurve* curve);

// Coverage of a target-angle grid by the accumulation set of theta mod 2pi
// over the given scales, plus the empirical diameter of that set on the
// circle. diameter > pi/2 flags a genuinely multi-angle accumulation set.
struct CoverageReport {
    double coverage = 0.0; // fraction of the angular_tol grid hit
    double diameter = 0.0;
    bool non_unique = false;
    std::size_t grid_size = 0;
};

CoverageReport accumulation_coverage(const TwistProfile& profile,
                                     const std::vector<double>& rhos, double angular_tol);

} // namespace fblab
