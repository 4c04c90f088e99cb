#include "dsb/criteria/invariants.hpp"

#include "dsb/error.hpp"

namespace dsb::criteria {

void validate(const CurveInvariants& c) {
    if (c.g < 2) throw InvalidInput("genus must be at least 2");
    if (c.gamma < 2) throw InvalidInput("gonality must be at least 2");
    if (c.cliff < 0) throw InvalidInput("cliff must be nonnegative");
    if (c.cliff < c.gamma - 3) throw InvalidInput("cliff ≥ γ−3 violated");
    if (c.cliff > c.gamma - 2) throw InvalidInput("cliff ≤ γ−2 violated");
    if ((c.cliff == 0) != c.hyperelliptic) throw InvalidInput("cliff = 0 ⇔ hyperelliptic violated");
    if (c.hyperelliptic && c.gamma != 2) throw InvalidInput("hyperelliptic requires γ = 2");
    if (c.g == 2 && c.cliff != 0) throw InvalidInput("g = 2 ⇒ cliff = 0 violated");
    if (c.g == 3 && c.cliff > 1) throw InvalidInput("g = 3 ⇒ cliff ∈ {0,1} violated");
}

void validate(const CurveInvariants& c, const SeriesInvariants& s) {
    validate(c);
    if (s.d < 1) throw InvalidInput("degree must be positive");
    if (s.dimV < 2) throw InvalidInput("dimV ≥ 2 violated");
    if (s.h0 < 0 || s.h1 < 0) throw InvalidInput("h0, h1 must be nonnegative");
    if (s.h0 - s.h1 != s.d - c.g + 1) throw InvalidInput("Riemann–Roch violated");
    if (s.dimV > s.h0) throw InvalidInput("dimV ≤ h0 violated");
    if (s.flags.complete != (s.dimV == s.h0)) throw InvalidInput("complete ⇔ dimV = h0 violated");
    if (s.flags.computes_clifford) {
        if (s.d - 2 * (s.h0 - 1) != c.cliff) throw InvalidInput("computes_clifford ⇒ d − 2(h0−1) = cliff violated");
        if (s.h0 < 2 || s.h1 < 2) throw InvalidInput("computes_clifford ⇒ h0 ≥ 2 and h1 ≥ 2 violated");
    }
    if (s.flags.is_canonical_twist_deg2 && (s.d != 2 * c.g || s.h1 != 0))
        throw InvalidInput("canonical twist ⇒ d = 2g and h1 = 0 violated");
}

} // namespace dsb::criteria
