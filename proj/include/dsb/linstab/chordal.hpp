#pragma once

#include "dsb/exact/bivariate.hpp"
#include "dsb/exact/factor.hpp"
#include "dsb/linstab/plane_map.hpp"

#include <optional>
#include <vector>

namespace dsb::linstab {

/// Identification data of a plane map. The gcd G of the divided minors is
/// constant exactly when the map is birational; for birational maps the
/// identified parameters are the roots of an eliminant obtained from the
/// syzygy basis, of degree at most (d-1)(d-2).
struct ChordalForm {
    std::array<exact::BivariatePoly, 3> minors;   // g01, g02, g12 in the chart y = 1
    exact::BivariatePoly G;
    bool birational = false;

    exact::UPoly eliminant;                 // squarefree, monic; roots = special affine parameters
    bool infinity_special = false;          // (1 : 0) lies in a special fiber
    std::vector<exact::UFactor> factors;    // irreducible factors of the eliminant
    bool factored = false;
    int delta = 0;                          // (d-1)(d-2)/2
    int special_parameters = 0;             // distinct parameters in special fibers
    bool nodes_only = false;                // special_parameters == 2 delta
    std::optional<int> identified_pairs;    // known when nodes_only
};

ChordalForm chordal_form(const PlaneMap& phi);

struct FiberEntry {
    Point point;
    BinaryForm fiber;
    int multiplicity;
};

/// Image points whose coordinates are irrational: one entry per eliminant
/// factor, with bounds on the common multiplicity of the conjugate points.
struct IrrationalCluster {
    exact::UPoly factor;
    int lower;
    int upper;
};

struct MultiplicityReport {
    std::vector<FiberEntry> points;          // rational singular points, sorted
    std::vector<IrrationalCluster> clusters;
    int max_multiplicity = 1;                // certified lower bound on the maximum
    int max_upper = 1;                       // certified upper bound on the maximum
    bool exact = true;                       // max_multiplicity == max_upper
};

MultiplicityReport multiplicity_report(const PlaneMap& phi, const ChordalForm& chordal);
MultiplicityReport multiplicity_report(const PlaneMap& phi);

} // namespace dsb::linstab
