#pragma once

#include "fblab/common.hpp"

namespace fblab {

// A radius r in (0,1) stored as rho = -log(r). Blow-up sequences like
// r_k = exp(-e^{2 pi k}) never materialize r, so scales far below the
// double-precision underflow threshold stay exactly representable.
class LogScale {
public:
    explicit LogScale(double rho) : rho_(rho)
    {
        if (!(rho > 0.0))
            throw std::domain_error("LogScale: rho must be positive, got " + std::to_string(rho));
    }

    static LogScale from_radius(double r)
    {
        if (!(r > 0.0) || !(r < 1.0))
            throw std::domain_error("LogScale: radius must lie in (0,1)");
        return LogScale(-std::log(r));
    }

    double rho() const { return rho_; }

    // May underflow to 0 for rho > ~708; callers use this for display only.
    double to_radius() const { return std::exp(-rho_); }

    bool in_pure_region() const { return rho_ >= kPureLawRho; }

    // Scale of a point at (rescaled) radius t: physical radius t*exp(-rho).
    LogScale combined(double t) const
    {
        if (!(t > 0.0))
            throw std::domain_error("LogScale::combined: t must be positive");
        return LogScale(rho_ - std::log(t));
    }

private:
    double rho_;
};

} // namespace fblab
