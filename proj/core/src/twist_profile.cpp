#include "fblab/twist_profile.hpp"

#include <algorithm>

namespace fblab {

namespace {

struct PureLaw {
    double value;
    double slope;
};

PureLaw pure_law(const TwistProfile& p, double rho)
{
    switch (p.law) {
    case TwistProfile::Law::LogLog:
        return {std::log(rho), 1.0 / rho};
    case TwistProfile::Law::PowerLaw:
        return {std::pow(rho, p.exponent), p.exponent * std::pow(rho, p.exponent - 1.0)};
    case TwistProfile::Law::None:
        return {0.0, 0.0};
    }
    return {0.0, 0.0};
}

// Cubic Hermite on [0, rho0]: H(0)=0, H'(0)=0, H(rho0)=v0, H'(rho0)=s0.
ThetaValue hermite_blend(double rho, double v0, double s0)
{
    const double t = rho / kPureLawRho;
    const double h01 = t * t * (3.0 - 2.0 * t);
    const double h11 = t * t * (t - 1.0);
    const double dh01 = 6.0 * t * (1.0 - t) / kPureLawRho;
    const double dh11 = t * (3.0 * t - 2.0) / kPureLawRho;
    return {h01 * v0 + h11 * kPureLawRho * s0,
            dh01 * v0 + dh11 * kPureLawRho * s0};
}

bool uses_raw_power_blend(const TwistProfile& p)
{
    return p.law == TwistProfile::Law::PowerLaw && p.exponent >= 3.0;
}

} // namespace

std::string TwistProfile::describe() const
{
    switch (law) {
    case Law::LogLog: return "loglog";
    case Law::PowerLaw: return "power:" + std::to_string(exponent);
    case Law::None: return "none";
    }
    return "none";
}

ThetaValue theta_at(const TwistProfile& profile, double rho)
{
    if (profile.is_none() || rho <= 0.0) return {0.0, 0.0};
    if (rho >= kPureLawRho || uses_raw_power_blend(profile)) {
        const PureLaw pl = pure_law(profile, rho);
        return {pl.value, pl.slope};
    }
    const PureLaw at0 = pure_law(profile, kPureLawRho);
    return hermite_blend(rho, at0.value, at0.slope);
}

double sup_dtheta_drho(const TwistProfile& profile, double rho_lo, double rho_hi)
{
    if (rho_lo > rho_hi)
        throw std::invalid_argument("sup_dtheta_drho: empty interval");
    if (profile.is_none()) return 0.0;

    double best = 0.0;
    auto consider = [&](double rho) {
        if (rho > 0.0) best = std::max(best, theta_at(profile, rho).dtheta_drho);
    };

    // Pure region piece: the slope is monotone in rho, so endpoints suffice.
    const double plo = std::max(rho_lo, kPureLawRho);
    if (plo <= rho_hi) {
        consider(plo);
        consider(rho_hi);
    }
    // Blend piece: slope is quadratic in rho; endpoints plus the vertex.
    double blo = std::max(rho_lo, 0.0);
    double bhi = std::min(rho_hi, kPureLawRho);
    if (blo < bhi && !uses_raw_power_blend(profile)) {
        consider(blo);
        consider(bhi);
        // H'(rho) = a t^2 + b t with t = rho/rho0; vertex at t = -b/(2a).
        const PureLaw at0 = pure_law(profile, kPureLawRho);
        const double v0 = at0.value, s0r = at0.slope * kPureLawRho;
        const double a = -6.0 * v0 + 3.0 * s0r;
        const double b = 6.0 * v0 - 2.0 * s0r;
        if (a != 0.0) {
            const double tv = -b / (2.0 * a);
            if (tv > 0.0 && tv < 1.0) consider(tv * kPureLawRho);
        }
    } else if (blo < bhi) {
        consider(blo);
        consider(bhi);
    }
    return best;
}

AngleJet theta_jet(const TwistProfile& profile, const LogScale& scale)
{
    const double rho = scale.rho();
    if (rho > kMaxRho)
        throw std::domain_error("theta_jet: rho exceeds the e^70 precision budget");
    const ThetaValue tv = theta_at(profile, rho);
    if (std::fabs(tv.theta) > kMaxReducibleAngle)
        throw std::domain_error("theta_jet: angle too large for a meaningful mod-2pi reduction");
    return {tv.theta, wrap_angle(tv.theta), tv.dtheta_drho};
}

} // namespace fblab
