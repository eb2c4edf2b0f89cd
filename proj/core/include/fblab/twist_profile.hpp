#pragma once

#include "fblab/common.hpp"
#include "fblab/log_scale.hpp"

namespace fblab {

// Rotation law theta as a function of rho = -log r.
//   LogLog      theta(rho) = log(rho)   for rho >= rho0
//   PowerLaw p  theta(rho) = rho^p      for rho >= rho0
//   None        theta == 0
// Below rho0 a C^1 cubic Hermite blend takes theta to 0 with zero slope at
// rho = 0 (r = 1), matching value and slope at rho0. For p >= 3 the Hermite
// blend is not monotone, so the raw power law (already C^1 at 0) is kept.
struct TwistProfile {
    enum class Law { LogLog, PowerLaw, None };

    Law law = Law::None;
    double exponent = 1.0; // PowerLaw only

    static TwistProfile log_log() { return {Law::LogLog, 1.0}; }
    static TwistProfile power_law(double p)
    {
        if (!(p > 0.0)) throw std::domain_error("TwistProfile: exponent must be > 0");
        return {Law::PowerLaw, p};
    }
    static TwistProfile none() { return {Law::None, 1.0}; }

    bool is_none() const { return law == Law::None; }

    std::string describe() const;
};

// Angle and its scale rate at one log-scale. theta is the unreduced angle;
// theta_mod lies in [0, 2pi); dtheta_drho = d theta / d rho, which equals
// |r theta'(r)| (the scale-invariant rotation speed).
struct AngleJet {
    double theta = 0.0;
    double theta_mod = 0.0;
    double dtheta_drho = 0.0;
};

// Raw evaluation at any real rho (rho <= 0 means r >= 1 where theta == 0).
// Used by maps and signed fields that cross the blend region.
struct ThetaValue {
    double theta;
    double dtheta_drho;
};
ThetaValue theta_at(const TwistProfile& profile, double rho);

// Largest dtheta_drho over rho in [rho_lo, rho_hi]; certifies Jacobian and
// gradient bounds on balls. Requires rho_lo <= rho_hi.
double sup_dtheta_drho(const TwistProfile& profile, double rho_lo, double rho_hi);

// The rotation profile at a validated scale. Throws std::domain_error for
// nonpositive rho (enforced by LogScale) and refuses scales where the mod-2pi
// reduction would silently lose precision (rho > e^70 or theta > 1e12).
AngleJet theta_jet(const TwistProfile& profile, const LogScale& scale);

} // namespace fblab
