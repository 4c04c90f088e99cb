#pragma once

#include "dsb/exact/upoly.hpp"

#include <vector>

namespace dsb::exact {

/// Largest squarefree degree the factorizer accepts.
inline constexpr int kMaxFactorDegree = 120;
/// Largest number of modular factors the recombination stage accepts.
inline constexpr int kMaxModularFactors = 22;

struct UFactor {
    UPoly poly;        // monic, irreducible over Q
    int multiplicity;
};

/// Complete factorization over Q into monic irreducibles, sorted by degree
/// then coefficients. Throws InvalidInput for the zero polynomial and
/// CeilingExceeded beyond the documented limits.
std::vector<UFactor> factor(const UPoly& a);

/// Rational roots of a nonzero polynomial, ascending, without multiplicity.
std::vector<Rational> rational_roots(const UPoly& a);

} // namespace dsb::exact
