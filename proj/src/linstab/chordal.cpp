#include "dsb/linstab/chordal.hpp"

#include "dsb/error.hpp"
#include "dsb/exact/matrix.hpp"

#include <algorithm>

namespace dsb::linstab {

using exact::BivariatePoly;
using exact::UPoly;

namespace {

BivariatePoly divided_minor(const UPoly& fi, const UPoly& fj) {
    BivariatePoly num = BivariatePoly::in_s(fi) * BivariatePoly::in_t(fj) - BivariatePoly::in_s(fj) * BivariatePoly::in_t(fi);
    return exact::exact_quotient(num, BivariatePoly::s() - BivariatePoly::t());
}

// Sum_i p_i(s) f_i(t), divided by (s - t).
BivariatePoly moving_line(const p1::Syzygy& syz, const std::vector<BinaryForm>& forms) {
    BivariatePoly acc;
    for (std::size_t i = 0; i < forms.size(); ++i)
        acc += BivariatePoly::in_s(syz.components[i].dehomogenize()) * BivariatePoly::in_t(forms[i].dehomogenize());
    return exact::exact_quotient(acc, BivariatePoly::s() - BivariatePoly::t());
}

// Determinant of the Sylvester matrix of a, b taken with formal degrees m, n.
Rational sylvester(const UPoly& a, int m, const UPoly& b, int n) {
    const int size = m + n;
    if (size == 0) return 1;
    exact::ExactMatrix S(size, size);
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k) S.at(row, row + k) = a.coeff(m - k);
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k) S.at(n + row, row + k) = b.coeff(n - k);
    return exact::determinant(S);
}

// Resultant in s of P(s, t), Q(s, t) with formal s-degrees m, n, as a
// polynomial in t of degree at most bound, by evaluation and interpolation.
UPoly resultant_in_s(const BivariatePoly& P, int m, const BivariatePoly& Q, int n, int bound) {
    std::vector<Rational> xs, ys;
    for (int j = 0; j <= bound; ++j) {
        xs.emplace_back(j);
        ys.push_back(sylvester(P.at_t(j), m, Q.at_t(j), n));
    }
    return exact::interpolate(xs, ys);
}

} // namespace

ChordalForm chordal_form(const PlaneMap& phi) {
    ChordalForm cf;
    const auto& f = phi.forms();
    const int d = phi.degree();
    std::array<UPoly, 3> u{f[0].dehomogenize(), f[1].dehomogenize(), f[2].dehomogenize()};
    cf.minors = {divided_minor(u[0], u[1]), divided_minor(u[0], u[2]), divided_minor(u[1], u[2])};
    cf.G = exact::bivariate_gcd(cf.minors[0], exact::bivariate_gcd(cf.minors[1], cf.minors[2]));
    cf.birational = cf.G.is_constant();
    cf.delta = (d - 1) * (d - 2) / 2;
    if (!cf.birational) return cf;

    const auto syz = p1::syzygy_module_basis(phi.series());
    const int mu = syz[0].degree, nu = syz[1].degree;
    const UPoly R = resultant_in_s(moving_line(syz[0], f), mu - 1, moving_line(syz[1], f), nu - 1, 2 * cf.delta);
    if (R.is_zero()) throw InternalError("eliminant vanishes for a birational map");
    cf.eliminant = exact::is_squarefree(R) ? R.monic() : exact::squarefree_part(R);

    const Point at_infinity = phi.image(1, 0);
    cf.infinity_special = fiber_form(phi, at_infinity).degree() >= 2;
    cf.special_parameters = std::max(0, cf.eliminant.degree()) + (cf.infinity_special ? 1 : 0);
    if (cf.special_parameters > 2 * cf.delta) throw InternalError("more special parameters than the genus formula allows");
    cf.nodes_only = cf.special_parameters == 2 * cf.delta;
    if (cf.nodes_only) cf.identified_pairs = cf.delta;

    if (!cf.eliminant.is_constant()) {
        try {
            cf.factors = exact::factor(cf.eliminant);
            cf.factored = true;
        } catch (const CeilingExceeded&) {
            cf.factored = false;
        }
    } else {
        cf.factored = true;
    }
    return cf;
}

namespace {

// phi(alpha) for alpha a root of q, when that point has rational coordinates.
std::optional<Point> rational_image(const PlaneMap& phi, const UPoly& q) {
    std::array<UPoly, 3> u;
    for (int i = 0; i < 3; ++i) u[i] = phi.forms()[i].dehomogenize() % q;
    int j = 0;
    while (j < 3 && u[j].is_zero()) ++j;
    if (j == 3) throw InternalError("parameter is a base point");
    const UPoly inv = exact::inverse_mod(u[j], q);
    Point p;
    for (int i = 0; i < 3; ++i) {
        UPoly c = (u[i] * inv) % q;
        if (!c.is_constant()) return std::nullopt;
        p[i] = c.coeff(0);
    }
    return p;
}

int max_m_with_budget(int budget, int orbit) {
    // largest m with orbit * m(m-1)/2 <= budget
    int m = 1;
    while (orbit * (m + 1) * m / 2 <= budget) ++m;
    return m;
}

} // namespace

MultiplicityReport multiplicity_report(const PlaneMap& phi, const ChordalForm& cf) {
    if (!cf.birational) throw InvalidInput("criterion requires birational morphism");
    MultiplicityReport rep;
    std::vector<UPoly> fibers;   // dehomogenized fibers of the rational points found
    auto add_point = [&](const Point& p) {
        const Point n = normalize_point(p);
        for (const auto& e : rep.points)
            if (e.point == n) return;
        BinaryForm fib = fiber_form(phi, n);
        rep.points.push_back({n, fib, fib.degree()});
        fibers.push_back(fib.dehomogenize());
    };
    if (cf.infinity_special) add_point(phi.image(1, 0));

    std::vector<UPoly> unresolved;
    if (cf.factored) {
        for (const auto& fac : cf.factors) {
            bool covered = false;
            for (const auto& fb : fibers)
                if (!fb.is_zero() && (fb % fac.poly).is_zero()) covered = true;
            if (covered) continue;
            if (auto p = rational_image(phi, fac.poly)) {
                add_point(*p);
            } else {
                unresolved.push_back(fac.poly);
            }
        }
    } else if (!cf.eliminant.is_constant()) {
        UPoly rest = cf.eliminant;
        for (const auto& fb : fibers) rest = exact::exact_quotient(rest, exact::gcd(rest, fb));
        if (!rest.is_constant()) unresolved.push_back(rest);
    }

    std::sort(rep.points.begin(), rep.points.end(), [](const FiberEntry& a, const FiberEntry& b) {
        return std::lexicographical_compare(a.point.begin(), a.point.end(), b.point.begin(), b.point.end());
    });

    int budget = cf.delta;
    for (const auto& e : rep.points) budget -= e.multiplicity * (e.multiplicity - 1) / 2;
    for (const auto& q : unresolved) {
        int lower = 2, upper;
        if (cf.nodes_only) {
            upper = 2;
        } else {
            // without factoring, a single rational point cannot be excluded
            upper = max_m_with_budget(budget, cf.factored ? 2 : 1);
        }
        if (upper < lower) throw InternalError("multiplicity budget exhausted");
        rep.clusters.push_back({q, lower, upper});
    }

    rep.max_multiplicity = 1;
    rep.max_upper = 1;
    for (const auto& e : rep.points) {
        rep.max_multiplicity = std::max(rep.max_multiplicity, e.multiplicity);
        rep.max_upper = std::max(rep.max_upper, e.multiplicity);
    }
    for (const auto& c : rep.clusters) {
        rep.max_multiplicity = std::max(rep.max_multiplicity, c.lower);
        rep.max_upper = std::max(rep.max_upper, c.upper);
    }
    rep.exact = rep.max_multiplicity == rep.max_upper;
    return rep;
}

MultiplicityReport multiplicity_report(const PlaneMap& phi) { return multiplicity_report(phi, chordal_form(phi)); }

} // namespace dsb::linstab
