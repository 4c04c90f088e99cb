#pragma once

#include "dsb/p1/series.hpp"
#include "dsb/p1/splitting.hpp"

#include <vector>

namespace dsb::p1 {

/// Point (a : b) of P^1 with rational coordinates, not both zero.
struct ProjPoint {
    exact::Rational a, b;
};

struct ModificationReport {
    int k;
    SplittingType original;
    LinearSeriesP1 modified;
    SplittingType modified_type;
    bool rank_ok;          // modified rank is r - k
    bool degree_ok;        // modified twists sum to d - k
    bool last_twist_ok;    // when k = r - 1 the single twist equals d - r + 1
    bool ok() const { return rank_ok && degree_ok && last_twist_ok; }
};

/// Passes to V(-D) for D the given k distinct points, divides out D and
/// checks the degree and rank bookkeeping. Throws InvalidInput("special divisor")
/// when the points fail to impose independent conditions and
/// InvalidInput("base point in modified series") when V(-D) has extra base points.
ModificationReport elementary_modification_check(const LinearSeriesP1& v, const std::vector<ProjPoint>& points);

} // namespace dsb::p1
