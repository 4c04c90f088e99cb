#pragma once

#include "dsb/exact/rational.hpp"

namespace dsb::criteria {

struct CurveInvariants {
    int g = 2;
    int gamma = 2;
    int cliff = 0;
    bool hyperelliptic = true;
};

struct SeriesFlags {
    bool complete = false;
    bool globally_generated = false;
    bool birational = false;
    bool computes_clifford = false;
    bool is_canonical_twist_deg2 = false;   // L = omega_C(D) with deg D = 2
    bool general_subspace = false;
};

struct SeriesInvariants {
    int d = 0;
    int h0 = 0;
    int h1 = 0;
    int dimV = 2;
    SeriesFlags flags;

    int codim() const { return h0 - dimV; }
    int r() const { return dimV - 1; }
    /// -d / (dimV - 1)
    exact::Rational slope() const { return exact::Rational(-d) / exact::Rational(dimV - 1); }
};

/// Checks every invariant relation; throws InvalidInput naming the first
/// violated relation.
void validate(const CurveInvariants& c, const SeriesInvariants& s);
void validate(const CurveInvariants& c);

} // namespace dsb::criteria
