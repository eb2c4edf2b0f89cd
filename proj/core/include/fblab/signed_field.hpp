#pragma once

#include <memory>
#include <optional>

#include "fblab/domain.hpp"
#include "fblab/log_scale.hpp"

namespace fblab {

// A signed defining function f for an interface: f > 0 on the plus side,
// f < 0 on the minus side, f = 0 on the interface, together with a certified
// Lipschitz envelope. gradient_norm_bound(p, radius) must dominate
// sup{|grad f(y)| : |y - p| <= radius}, which makes |f(p)| / bound a safe
// step radius for walks and a safe clearance certificate for probes.
class ImplicitDomain {
public:
    virtual ~ImplicitDomain() = default;
    virtual double value(const Vec3& p) const = 0;
    virtual double gradient_norm_bound(const Vec3& p, double radius) const = 0;
    virtual std::string describe() const = 0;
};

// Rescaled twisted Szulkin field f(p) = s(Phi_{-theta} p) at log-scale rho
// (physical scale when rho is absent).
class TwistedSzulkinField final : public ImplicitDomain {
public:
    TwistedSzulkinField(TwistProfile profile, std::optional<LogScale> scale);
    double value(const Vec3& p) const override;
    double gradient_norm_bound(const Vec3& p, double radius) const override;
    std::string describe() const override;

private:
    TwistProfile profile_;
    std::optional<LogScale> scale_;
};

// Rescaled oscillating-graph field f(p) = p_z - v_rho(p_x, p_y) (physical
// graph with its blend when rho is absent).
class OscillatingGraphField final : public ImplicitDomain {
public:
    explicit OscillatingGraphField(std::optional<LogScale> scale);
    double value(const Vec3& p) const override;
    double gradient_norm_bound(const Vec3& p, double radius) const override;
    std::string describe() const override;

private:
    std::optional<LogScale> scale_;
};

// Flat oracle {z > 0}; closed-form harmonic measure makes it the
// calibration domain for walks and corkscrew probes.
class HalfSpaceField final : public ImplicitDomain {
public:
    double value(const Vec3& p) const override { return p.z(); }
    double gradient_norm_bound(const Vec3&, double) const override { return 1.0; }
    std::string describe() const override { return "half-space"; }
};

std::unique_ptr<ImplicitDomain> make_field(const DomainKind& kind,
                                           std::optional<LogScale> scale);

// Safe step radius at p for the given side: certified not to cross the
// interface, and capped at |p|/2 so the certifying ball stays away from the
// scale-degenerate origin.
double safe_step(const ImplicitDomain& field, Side side, const Vec3& p);

} // namespace fblab
