#pragma once

#include "fblab/twist_profile.hpp"

namespace fblab {

enum class Side { Plus, Minus };

inline double side_sign(Side s) { return s == Side::Plus ? 1.0 : -1.0; }
inline Side opposite(Side s) { return s == Side::Plus ? Side::Minus : Side::Plus; }
inline const char* side_name(Side s) { return s == Side::Plus ? "plus" : "minus"; }

// The two example constructions. Both are odd, so the two sides of either
// kind are antipodal images of each other.
struct DomainKind {
    enum class Kind { TwistedSzulkin, OscillatingGraph };

    Kind kind = Kind::TwistedSzulkin;
    TwistProfile profile; // TwistedSzulkin only

    static DomainKind twisted_szulkin(const TwistProfile& p)
    {
        return {Kind::TwistedSzulkin, p};
    }
    static DomainKind oscillating_graph()
    {
        return {Kind::OscillatingGraph, TwistProfile::none()};
    }

    bool is_twist() const { return kind == Kind::TwistedSzulkin; }
    std::string describe() const
    {
        return is_twist() ? "twisted-szulkin(" + profile.describe() + ")" : "oscillating-graph";
    }
};

} // namespace fblab
