#include "fblab/graph_surface.hpp"

#include <algorithm>

namespace fblab {

namespace {

GraphAmplitude pure_amplitude(double rho)
{
    const double a = std::log(rho);
    const double s = std::sin(a), c = std::cos(a);
    return {a * s, (s + a * c) / rho};
}

} // namespace

GraphAmplitude graph_amplitude(double rho)
{
    if (rho <= 0.0) return {0.0, 0.0};
    if (rho >= kPureLawRho) return pure_amplitude(rho);

    const GraphAmplitude edge = pure_amplitude(kPureLawRho);
    const double t = rho / kPureLawRho;
    const double h01 = t * t * (3.0 - 2.0 * t);
    const double h11 = t * t * (t - 1.0);
    const double dh01 = 6.0 * t * (1.0 - t) / kPureLawRho;
    const double dh11 = t * (3.0 * t - 2.0) / kPureLawRho;
    return {h01 * edge.value + h11 * kPureLawRho * edge.slope,
            dh01 * edge.value + dh11 * kPureLawRho * edge.slope};
}

AmplitudeEnvelope graph_amplitude_envelope(double rho_lo, double rho_hi)
{
    if (rho_lo > rho_hi)
        throw std::invalid_argument("graph_amplitude_envelope: empty interval");
    AmplitudeEnvelope env{0.0, 0.0};
    auto grow = [&](double v, double s) {
        env.max_abs_value = std::max(env.max_abs_value, std::fabs(v));
        env.max_abs_slope = std::max(env.max_abs_slope, std::fabs(s));
    };

    // Pure piece: |A sin A| <= A which grows with rho, and
    // |G'| <= (1 + A)/rho which decays for rho > 1.
    const double plo = std::max(rho_lo, kPureLawRho);
    if (plo <= rho_hi) {
        grow(std::log(rho_hi), 0.0);
        grow(0.0, (1.0 + std::log(plo)) / plo);
    }
    // Blend piece: cubic; scan endpoints plus the slope quadratic's vertex
    // and the cubic's stationary points.
    const double blo = std::clamp(rho_lo, 0.0, kPureLawRho);
    const double bhi = std::clamp(rho_hi, 0.0, kPureLawRho);
    if (blo < bhi) {
        const GraphAmplitude edge = pure_amplitude(kPureLawRho);
        const double v0 = edge.value, s0r = edge.slope * kPureLawRho;
        // G'(rho)*rho0 = a t^2 + b t
        const double a = -6.0 * v0 + 3.0 * s0r;
        const double b = 6.0 * v0 - 2.0 * s0r;
        auto consider = [&](double rho) {
            if (rho >= blo && rho <= bhi) {
                const GraphAmplitude g = graph_amplitude(rho);
                grow(g.value, g.slope);
            }
        };
        consider(blo);
        consider(bhi);
        if (a != 0.0) consider((-b / (2.0 * a)) * kPureLawRho); // slope extremum
        if (a != 0.0 && b / a < 0.0) consider((-b / a) * kPureLawRho); // G' = 0: value extremum
    }
    return env;
}

ScalarJet2 graph_jet(const Vec2& q, const std::optional<LogScale>& scale_offset)
{
    const double t = q.norm();

    if (!scale_offset) {
        if (t == 0.0) return {0.0, Vec2::Zero()};
        const double rho = -std::log(t);
        const GraphAmplitude g = graph_amplitude(rho);
        // v = x G(rho(t)), d rho/dx = -x/t^2
        return {q.x() * g.value,
                Vec2(g.value - q.x() * q.x() * g.slope / (t * t),
                     -q.x() * q.y() * g.slope / (t * t))};
    }

    if (t == 0.0)
        throw std::domain_error("graph_jet: rescaled jet undefined at the axis");
    const double rho_c = scale_offset->rho() - std::log(t);
    if (rho_c <= 1.0)
        throw std::domain_error("graph_jet: combined scale " + std::to_string(rho_c) +
                                " <= 1, oscillation amplitude undefined");
    const double a = std::log(rho_c);
    const double s = std::sin(a), c = std::cos(a);
    const double slope_term = (s + a * c) / rho_c; // d(A sin A)/d rho
    return {q.x() * a * s,
            Vec2(a * s - q.x() * q.x() * slope_term / (t * t),
                 -q.x() * q.y() * slope_term / (t * t))};
}

} // namespace fblab
