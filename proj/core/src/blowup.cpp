#include "fblab/blowup.hpp"

#include <algorithm>

#include "fblab/twist_map.hpp"

namespace fblab {

BlowupSequence blowup_log_scales(double theta0, int k_min, int k_max)
{
    if (!(theta0 >= 0.0) || !(theta0 < kTwoPi))
        throw std::domain_error("blowup_log_scales: theta0 must lie in [0, 2pi)");
    if (k_min > k_max) throw std::domain_error("blowup_log_scales: empty k range");
    if (theta0 + kTwoPi * k_max > 70.0)
        throw std::domain_error("blowup_log_scales: k_max exceeds the e^70 precision budget");
    // theta = log rho exactly only in the pure region.
    if (std::exp(theta0 + kTwoPi * k_min) < kPureLawRho)
        throw std::domain_error("blowup_log_scales: k_min scale below the pure-law region");

    BlowupSequence seq;
    seq.theta0 = theta0;
    const TwistProfile loglog = TwistProfile::log_log();
    for (int k = k_min; k <= k_max; ++k) {
        const double rho = std::exp(theta0 + kTwoPi * k);
        const AngleJet jet = theta_jet(loglog, LogScale(rho));
        if (circular_distance(jet.theta_mod, theta0) > 1e-9)
            throw std::runtime_error("blowup_log_scales: angle verification failed");
        seq.k.push_back(k);
        seq.rho.push_back(rho);
        seq.eps.push_back(1.0 / std::sqrt(rho));
    }
    return seq;
}

double matched_shell_bound(const TwistProfile& profile, double rho, double R,
                           double reference_angle, double max_cyl_radius)
{
    // Peaks live at the outer shells; inner shells die like t. 8192 samples
    // over 40 e-folds of t resolve the smooth profile far below the
    // tolerances this bound feeds.
    const int n = 8192;
    const double lo = std::log(R) - 40.0;
    double best = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double lt = lo + (std::log(R) - lo) * static_cast<double>(i) / n;
        const double t = std::exp(lt);
        const double dth =
            circular_distance(theta_at(profile, rho - lt).theta, reference_angle);
        best = std::max(best, 2.0 * t * std::sin(0.5 * dth) * max_cyl_radius);
    }
    return best;
}

namespace {

double rhs_sup_lemma(const TwistProfile& profile, double rho, double eps, double R)
{
    const double theta_r = theta_at(profile, rho).theta;
    const int n = 8192;
    double sup = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double lt =
            std::log(eps) + (std::log(R) - std::log(eps)) * static_cast<double>(i) / n;
        const double t = std::exp(lt);
        sup = std::max(sup, t * std::fabs(theta_at(profile, rho - lt).theta - theta_r));
    }
    return std::max(eps, sup);
}

// Cloud size estimate for the twisted sampler at a structural gap.
double estimated_cloud_points(const BaseCurve& curve, double R, double gap)
{
    return curve.length * R * R / (2.0 * 0.9 * gap * gap);
}

} // namespace

HdLemmaResult hd_lemma_check(const TwistProfile& profile, const LogScale& scale, double R,
                             double eps, double cloud_gap, const BaseCurve* curve)
{
    if (!(eps > 0.0) || !(eps < R))
        throw std::domain_error("hd_lemma_check: need 0 < eps < R");
    if (scale.rho() - std::log(R) < kPureLawRho)
        throw std::domain_error("hd_lemma_check: R r must stay below 1/100 (pure region)");

    HdLemmaResult res;
    res.rho = scale.rho();
    res.R = R;
    res.eps = eps;
    res.rhs_sup = rhs_sup_lemma(profile, scale.rho(), eps, R);

    const double sigma = curve ? curve->max_cyl_radius : 1.0;
    const double ref = theta_at(profile, scale.rho()).theta;
    res.lhs_matched = matched_shell_bound(profile, scale.rho(), R, wrap_angle(ref), sigma);
    res.ratio_matched = std::max(eps, res.lhs_matched) / res.rhs_sup;

    if (curve && cloud_gap > 0.0) {
        const PointCloud twisted =
            sample_twisted_interface(profile, scale, R, eps, cloud_gap, *curve);
        const PointCloud reference = sample_twisted_interface(
            TwistProfile::none(), scale, R, eps, cloud_gap, *curve, wrap_angle(ref));
        const DistanceResult hd = hausdorff_in_ball(twisted, reference, R);
        res.has_cloud = true;
        res.lhs_cloud = hd.value;
        res.gap_terms = hd.uncertainty;
        res.ratio_cloud = (hd.value + hd.uncertainty) / res.rhs_sup;
    }
    return res;
}

std::vector<BlowupRow> blowup_convergence(const TwistProfile& profile, double theta0,
                                          int k_min, int k_max, const BaseCurve& curve,
                                          const BlowupOptions& opt)
{
    const BlowupSequence seq = blowup_log_scales(theta0, k_min, k_max);
    std::vector<BlowupRow> rows;
    rows.reserve(seq.k.size());

    for (std::size_t i = 0; i < seq.k.size(); ++i) {
        BlowupRow row;
        row.k = seq.k[i];
        row.rho = seq.rho[i];
        row.eps = seq.eps[i];

        // Gap prescription: a tenth of the predicted distance level eps_k.
        const double gap = row.eps / 10.0;
        const double predicted = estimated_cloud_points(curve, opt.R, gap);

        if (predicted <= static_cast<double>(opt.max_cloud_points)) {
            const LogScale scale(row.rho);
            const PointCloud twisted =
                sample_twisted_interface(profile, scale, opt.R, row.eps, gap, curve);
            const PointCloud reference = sample_twisted_interface(
                TwistProfile::none(), scale, opt.R, row.eps, gap, curve, theta0);
            const DistanceResult hd = hausdorff_in_ball(twisted, reference, opt.R);
            row.used_cloud = true;
            row.hd_estimate = hd.value;
            row.gap_terms = hd.uncertainty;
            row.cloud_points = twisted.size() + reference.size();
        } else if (opt.force_cloud) {
            throw std::runtime_error(
                "blowup_convergence: resolution budget exceeded at k=" +
                std::to_string(row.k) + "; feasible k_max is " +
                std::to_string(row.k - 1));
        } else {
            row.used_cloud = false;
            row.hd_estimate = matched_shell_bound(profile, row.rho, opt.R, theta0,
                                                  curve.max_cyl_radius);
            // The hole terms a cloud at cutoff eps_k would carry.
            row.gap_terms = 2.0 * row.eps;
        }
        row.envelope = row.hd_estimate + row.gap_terms;
        rows.push_back(row);
    }
    return rows;
}

CoverageReport accumulation_coverage(const TwistProfile& profile,
                                     const std::vector<double>& rhos, double angular_tol)
{
    if (!(angular_tol > 1e-4) || !(angular_tol < 0.1))
        throw std::domain_error("accumulation_coverage: tol must lie in (1e-4, 0.1)");

    std::vector<double> mods;
    mods.reserve(rhos.size());
    for (double rho : rhos) mods.push_back(wrap_angle(theta_at(profile, rho).theta));
    std::sort(mods.begin(), mods.end());
    mods.erase(std::unique(mods.begin(), mods.end()), mods.end());

    CoverageReport rep;
    if (mods.empty()) return rep;

    const std::size_t grid = static_cast<std::size_t>(std::ceil(kTwoPi / angular_tol));
    rep.grid_size = grid;
    std::size_t hit = 0;
    for (std::size_t j = 0; j < grid; ++j) {
        const double target = kTwoPi * static_cast<double>(j) / static_cast<double>(grid);
        auto it = std::lower_bound(mods.begin(), mods.end(), target);
        double best = kTwoPi;
        if (it != mods.end()) best = std::min(best, std::fabs(*it - target));
        if (it != mods.begin()) best = std::min(best, std::fabs(*(it - 1) - target));
        best = std::min({best, std::fabs(mods.front() + kTwoPi - target),
                         std::fabs(target - (mods.back() - kTwoPi))});
        if (best <= angular_tol) ++hit;
    }
    rep.coverage = static_cast<double>(hit) / static_cast<double>(grid);

    // Circular diameter: for each angle, the farthest other angle sits near
    // its antipode; scan with a binary search per point.
    double diam = 0.0;
    for (double a : mods) {
        const double target = wrap_angle(a + kPi);
        auto it = std::lower_bound(mods.begin(), mods.end(), target);
        for (int off = -1; off <= 1; ++off) {
            std::ptrdiff_t idx = (it - mods.begin()) + off;
            if (idx < 0) idx += static_cast<std::ptrdiff_t>(mods.size());
            if (idx >= static_cast<std::ptrdiff_t>(mods.size()))
                idx -= static_cast<std::ptrdiff_t>(mods.size());
            diam = std::max(diam, circular_distance(a, mods[static_cast<std::size_t>(idx)]));
        }
    }
    rep.diameter = diam;
    rep.non_unique = diam > kPi / 2.0;
    return rep;
}

} // namespace fblab
