#pragma once

#include <optional>

#include "fblab/log_scale.hpp"

namespace fblab {

// Oscillating graph z = v(x,y). In the pure region (cylindrical radius
// r <= 1/100) the profile is v = x * A sin A with A = log(-log r); rescaled
// by e^{-rho} this becomes v_rho(x,y) = x * A sin A at the combined scale
// A = log(rho - log|(x,y)|). The amplitude factor A sin A blends to 0 over
// r in [1/100, 1] with the same C^1 Hermite rule as the rotation profile,
// which keeps v odd everywhere (the antipodal symmetry every harmonic-
// measure statistic relies on).
struct ScalarJet2 {
    double value;
    Vec2 gradient;
};

// With scale_offset: the pure rescaled jet; requires the combined scale
// rho - log|q| > 1 (otherwise A is undefined) and |q| > 0, else throws a
// domain error naming the offending combined scale. Without scale_offset:
// the physical graph, defined for every q including the origin.
ScalarJet2 graph_jet(const Vec2& q, const std::optional<LogScale>& scale_offset = std::nullopt);

// Amplitude factor G(rho) (v = x * G at combined scale rho) and its slope,
// for any raw rho; rho <= 0 gives 0.
struct GraphAmplitude {
    double value;
    double slope;
};
GraphAmplitude graph_amplitude(double rho);

// Certified sup of |G| and |G'| over [rho_lo, rho_hi]; feeds the Lipschitz
// bounds of the graph signed field.
struct AmplitudeEnvelope {
    double max_abs_value;
    double max_abs_slope;
};
AmplitudeEnvelope graph_amplitude_envelope(double rho_lo, double rho_hi);

} // namespace fblab
