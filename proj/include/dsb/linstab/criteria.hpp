#pragma once

#include "dsb/criteria/invariants.hpp"
#include "dsb/linstab/chordal.hpp"
#include "dsb/linstab/verdict.hpp"

namespace dsb::linstab {

/// Linear stability of a birational plane map from its worst multiplicity.
/// Throws InvalidInput("criterion requires birational morphism").
LinStabVerdict plane_criterion(const PlaneMap& phi);

/// Search over sub-series V(-B) with base divisors supported on rational
/// factors of the basis, combined with lower bounds from the splitting type.
LinStabVerdict base_divisor_search(const p1::LinearSeriesP1& v, int max_base_degree);
LinStabVerdict base_divisor_search(const p1::LinearSeriesP1& v);

/// Numerical rule for complete series with d - 2(h0 - 1) <= Cliff.
/// Throws InvalidInput("rule not applicable") when a hypothesis fails.
LinStabVerdict clifford_linear_rule(const criteria::CurveInvariants& c, const criteria::SeriesInvariants& s);

} // namespace dsb::linstab
