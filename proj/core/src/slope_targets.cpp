#include "fblab/slope_targets.hpp"

#include "fblab/common.hpp"

namespace fblab {

namespace {

double bisect_asina(double m, double lo, double hi)
{
    auto g = [m](double a) { return a * std::sin(a) - m; };
    double flo = g(lo);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = g(mid);
        if ((flo <= 0.0) == (fm <= 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

SlopeTargetReport graph_slope_targets(double m, int k_min, int k_max)
{
    if (!std::isfinite(m)) throw std::domain_error("graph_slope_targets: m must be finite");
    if (k_min < 0 || k_min > k_max)
        throw std::domain_error("graph_slope_targets: bad branch range");

    SlopeTargetReport rep;
    for (int k = k_min; k <= k_max; ++k) {
        double a = 0.0;
        if (m == 0.0) {
            a = kPi * k; // sin vanishes exactly
        } else if (m > 0.0) {
            const double lo = kTwoPi * k, hi = kTwoPi * k + kPi / 2.0;
            if (hi < m) { // amplitude on the rising half-wave peaks at A = hi
                rep.skipped_branches.push_back(k);
                continue;
            }
            a = bisect_asina(m, lo, hi);
        } else {
            const double lo = kTwoPi * k + kPi, hi = kTwoPi * k + 1.5 * kPi;
            if (hi < -m) {
                rep.skipped_branches.push_back(k);
                continue;
            }
            a = bisect_asina(m, lo, hi);
        }
        if (a > 70.0)
            throw std::domain_error("graph_slope_targets: branch exceeds the e^70 budget");
        rep.targets.push_back({k, a, std::exp(a)});
    }
    return rep;
}

} // namespace fblab
