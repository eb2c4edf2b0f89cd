#include "fblab/signed_field.hpp"

#include <limits>

#include "fblab/graph_surface.hpp"
#include "fblab/szulkin.hpp"
#include "fblab/twist_map.hpp"

namespace fblab {

namespace {

// rho range covered by points with cylindrical/spherical radius in
// [t_lo, t_hi] at offset rho_hat. t_lo == 0 maps to the largest rho any
// representable point can have (t >= DBL_MIN), keeping bounds certified
// without an infinite endpoint.
std::pair<double, double> rho_range(double rho_hat, double t_lo, double t_hi)
{
    const double tiny = std::numeric_limits<double>::denorm_min();
    return {rho_hat - std::log(std::max(t_hi, tiny)),
            rho_hat - std::log(std::max(t_lo, tiny))};
}

} // namespace

TwistedSzulkinField::TwistedSzulkinField(TwistProfile profile, std::optional<LogScale> scale)
    : profile_(profile), scale_(std::move(scale))
{
}

double TwistedSzulkinField::value(const Vec3& p) const
{
    if (p.norm() == 0.0) return 0.0;
    return szulkin(twist_map(profile_, MapDirection::Backward, p, scale_));
}

double TwistedSzulkinField::gradient_norm_bound(const Vec3& p, double radius) const
{
    if (!(radius >= 0.0))
        throw std::domain_error("gradient_norm_bound: radius must be >= 0");
    const double t = p.norm();
    const double t_hi = t + radius;
    if (t_hi == 0.0) return 0.0;
    const double rho_hat = scale_ ? scale_->rho() : 0.0;
    const auto [rho_lo, rho_hi] = rho_range(rho_hat, t - radius, t_hi);
    // |grad f| <= ||D Phi|| |grad s| <= (1 + ||E||) * envelope * |p|^2,
    // and ||E||_2 <= dtheta/drho pointwise.
    const double twist_norm = 1.0 + sup_dtheta_drho(profile_, rho_lo, rho_hi);
    return twist_norm * kSzulkinGradientEnvelope * t_hi * t_hi;
}

std::string TwistedSzulkinField::describe() const
{
    std::string s = "twisted-szulkin(" + profile_.describe() + ")";
    if (scale_) s += "@rho=" + std::to_string(scale_->rho());
    return s;
}

OscillatingGraphField::OscillatingGraphField(std::optional<LogScale> scale)
    : scale_(std::move(scale))
{
}

double OscillatingGraphField::value(const Vec3& p) const
{
    const Vec2 q(p.x(), p.y());
    if (q.norm() == 0.0) return p.z();
    return p.z() - graph_jet(q, scale_).value;
}

double OscillatingGraphField::gradient_norm_bound(const Vec3& p, double radius) const
{
    if (!(radius >= 0.0))
        throw std::domain_error("gradient_norm_bound: radius must be >= 0");
    const double t = Vec2(p.x(), p.y()).norm();
    const double rho_hat = scale_ ? scale_->rho() : 0.0;
    const auto [rho_lo, rho_hi] = rho_range(rho_hat, t - radius, t + radius);
    const AmplitudeEnvelope env = graph_amplitude_envelope(rho_lo, rho_hi);
    // v = x G(rho_c): |v_x| <= |G| + |G'|, |v_y| <= |G'|.
    const double bx = env.max_abs_value + env.max_abs_slope;
    const double by = env.max_abs_slope;
    return std::sqrt(1.0 + bx * bx + by * by);
}

std::string OscillatingGraphField::describe() const
{
    std::string s = "oscillating-graph";
    if (scale_) s += "@rho=" + std::to_string(scale_->rho());
    return s;
}

std::unique_ptr<ImplicitDomain> make_field(const DomainKind& kind,
                                           std::optional<LogScale> scale)
{
    if (kind.is_twist())
        return std::make_unique<TwistedSzulkinField>(kind.profile, std::move(scale));
    return std::make_unique<OscillatingGraphField>(std::move(scale));
}

double safe_step(const ImplicitDomain& field, Side side, const Vec3& p)
{
    const double v = side_sign(side) * field.value(p);
    if (!(v > 0.0)) return 0.0;
    const double cap = 0.5 * p.norm();
    if (cap == 0.0) return 0.0;
    const double bound = field.gradient_norm_bound(p, cap);
    if (!(bound > 0.0)) return cap;
    return std::min(cap, v / bound);
}

} // namespace fblab
