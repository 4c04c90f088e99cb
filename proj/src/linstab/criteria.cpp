#include "dsb/linstab/criteria.hpp"

#include "dsb/error.hpp"
#include "dsb/exact/matrix.hpp"
#include "dsb/p1/splitting.hpp"

#include <map>
#include <set>

namespace dsb::linstab {

using exact::Vector;

namespace {

Witness pencil_witness(const PlaneMap& phi, const Point& p) {
    auto pencil = pencil_through(phi, p);
    Witness w;
    w.kind = "fiber";
    w.base = exact::form_gcd(pencil[0], pencil[1]);
    w.subseries = {pencil[0], pencil[1]};
    w.d_prime = phi.degree() - w.base.degree();
    w.r_prime = 1;
    w.ratio = Rational(w.d_prime);
    w.point = normalize_point(p);
    return w;
}

} // namespace

LinStabVerdict plane_criterion(const PlaneMap& phi) {
    if (phi.birational_flag() == false) throw InvalidInput("criterion requires birational morphism");
    const ChordalForm cf = chordal_form(phi);
    if (!cf.birational) throw InvalidInput("criterion requires birational morphism");
    const MultiplicityReport rep = multiplicity_report(phi, cf);
    const int d = phi.degree();
    LinStabVerdict v;
    v.record.method = "plane_criterion";
    v.record.best_ratio = Rational(d - rep.max_multiplicity);
    v.record.lower_bound = Rational(d - rep.max_upper);
    v.record.notes.push_back("delta " + std::to_string(cf.delta) + ", special parameters " +
                             std::to_string(cf.special_parameters) + (cf.nodes_only ? ", nodes only" : ""));
    v.record.candidates_examined = static_cast<int>(rep.points.size() + rep.clusters.size());

    // Worst exhibited rational point, or any image point when the curve is smooth.
    const FiberEntry* worst = nullptr;
    for (const auto& e : rep.points)
        if (!worst || e.multiplicity > worst->multiplicity) worst = &e;
    if (worst) {
        v.witness = pencil_witness(phi, worst->point);
    } else if (rep.max_multiplicity == 1) {
        v.witness = pencil_witness(phi, phi.image(1, 0));
    }

    const int lo = rep.max_multiplicity, hi = rep.max_upper;
    if (2 * hi < d) {
        v.status = LinStatus::stable;
    } else if (2 * lo > d) {
        v.status = LinStatus::unstable;
    } else if (lo == hi && 2 * lo == d) {
        v.status = LinStatus::strictly_semistable;
    } else {
        v.status = LinStatus::unknown;
    }
    v.ratio = Rational(d - lo);
    v.complete = rep.exact;
    return v;
}

namespace {

struct PencilCertificate {
    Rational lower_bound;
    bool strict = false;                 // every pencil ratio exceeds lower_bound
    bool attained = false;               // some pencil has ratio exactly lower_bound
    std::optional<Witness> witness;
    std::string note;
};

std::vector<Vector> coefficient_vectors(const p1::Syzygy& s) {
    std::vector<Vector> out;
    for (int k = 0; k <= s.degree; ++k) {
        Vector v;
        for (const auto& c : s.components) v.push_back(c.coeff(k));
        out.push_back(v);
    }
    return out;
}

Witness point_witness(const p1::LinearSeriesP1& v, const Vector& P) {
    auto lines = exact::kernel_basis(exact::ExactMatrix::from_rows({P}));
    Witness w;
    w.kind = "fiber";
    w.subseries = {v.combine(lines[0]), v.combine(lines[1])};
    w.base = exact::form_gcd(w.subseries[0], w.subseries[1]);
    w.d_prime = v.degree() - w.base.degree();
    w.r_prime = 1;
    w.ratio = Rational(w.d_prime);
    w.point = Point{P[0], P[1], P[2]};
    return w;
}

// Pencils of a plane series correspond to image points P, with ratio d - m_P.
// The degree-mu syzygy decides whether some point reaches the largest
// possible multiplicity.
PencilCertificate pencil_certificate(const p1::LinearSeriesP1& v) {
    const auto syz = p1::syzygy_module_basis(v);
    const int mu = syz[0].degree, nu = syz[1].degree;
    PencilCertificate c;
    if (mu < nu) {
        auto vecs = coefficient_vectors(syz[0]);
        if (exact::rank_of(vecs) <= 2) {
            auto P = exact::kernel_of_rows(vecs, 3);
            c.witness = point_witness(v, P[0]);
            c.lower_bound = Rational(mu);
            c.attained = true;
            c.note = "syzygy of degree " + std::to_string(mu) + " is supported on a pencil";
        } else {
            c.lower_bound = Rational(nu);
            c.note = "every point has multiplicity at most " + std::to_string(mu);
        }
        return c;
    }
    // balanced: multiplicity d/2 occurs iff some combination of the two
    // syzygies has coefficient vectors of rank at most 2
    c.lower_bound = Rational(mu);
    auto pv = coefficient_vectors(syz[0]), qv = coefficient_vectors(syz[1]);
    std::vector<std::vector<BinaryForm>> M(3, std::vector<BinaryForm>(mu + 1));
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k <= mu; ++k) M[i][k] = BinaryForm(1, {pv[k][i], qv[k][i]});
    std::vector<BinaryForm> minors;
    for (int a = 0; a <= mu; ++a)
        for (int b = a + 1; b <= mu; ++b)
            for (int e = b + 1; e <= mu; ++e) {
                auto m3 = [&](int i, int k) -> const BinaryForm& { return M[i][k == 0 ? a : (k == 1 ? b : e)]; };
                BinaryForm det = m3(0, 0) * (m3(1, 1) * m3(2, 2) - m3(1, 2) * m3(2, 1)) -
                                 m3(0, 1) * (m3(1, 0) * m3(2, 2) - m3(1, 2) * m3(2, 0)) +
                                 m3(0, 2) * (m3(1, 0) * m3(2, 1) - m3(1, 1) * m3(2, 0));
                if (!det.is_zero()) minors.push_back(det);
            }
    std::optional<std::pair<Rational, Rational>> root;
    if (minors.empty()) {
        c.attained = true;
        root = {Rational(1), Rational(0)};
    } else {
        BinaryForm g = exact::form_gcd(minors);
        if (g.degree() == 0) {
            c.strict = true;
            c.note = "no combination of the syzygies drops rank; every point has multiplicity below d/2";
            return c;
        }
        c.attained = true;
        for (const auto& f : exact::squarefree_and_factor(g))
            if (f.form.degree() == 1) {
                // f = u x + w y vanishes at (-w : u)
                root = {-f.form.coeff(1), f.form.coeff(0)};
                break;
            }
    }
    if (root) {
        std::vector<Vector> vecs;
        for (int k = 0; k <= mu; ++k) {
            Vector x(3);
            for (int i = 0; i < 3; ++i) x[i] = root->first * pv[k][i] + root->second * qv[k][i];
            vecs.push_back(x);
        }
        auto P = exact::kernel_of_rows(vecs, 3);
        c.witness = point_witness(v, P[0]);
        c.note = "a point of multiplicity d/2 exists";
    } else {
        c.note = "a point of multiplicity d/2 exists at an irrational parameter";
    }
    return c;
}

struct Search {
    const p1::LinearSeriesP1& v;
    int max_degree;
    std::vector<BinaryForm> primes;
    std::set<std::vector<Rational>> visited;
    int examined = 0;
    std::optional<Witness> best;

    void consider(Witness w) {
        if (!best || w.ratio < best->ratio || (w.ratio == best->ratio && w.base < best->base)) best = std::move(w);
    }

    void explore(const BinaryForm& base) {
        for (const auto& q : primes) {
            BinaryForm D = base * q;
            if (D.degree() > max_degree) continue;
            auto coords = v.coordinates_divisible_by(D);
            ++examined;
            if (coords.size() < 2) continue;
            std::vector<BinaryForm> W;
            for (const auto& c : coords) W.push_back(v.combine(c));
            BinaryForm h = exact::form_gcd(W);
            if (!visited.insert(h.coeffs()).second) continue;
            Witness w;
            w.kind = "base_divisor";
            w.base = h;
            w.subseries = W;
            w.d_prime = v.degree() - h.degree();
            w.r_prime = static_cast<int>(W.size()) - 1;
            w.ratio = Rational(w.d_prime) / Rational(w.r_prime);
            consider(w);
            if (h.degree() < max_degree) explore(h);
        }
    }
};

} // namespace

LinStabVerdict base_divisor_search(const p1::LinearSeriesP1& v) { return base_divisor_search(v, v.degree() - 1); }

LinStabVerdict base_divisor_search(const p1::LinearSeriesP1& v, int max_base_degree) {
    const int d = v.degree(), r = v.rank();
    if (max_base_degree < 0 || max_base_degree > d - 1) throw InvalidInput("max_base_degree must lie in [0, d-1]");
    const Rational target = Rational(d) / Rational(r);
    LinStabVerdict out;
    out.record.method = "base_divisor_search";
    if (r == 1) {
        out.status = LinStatus::stable;
        out.complete = true;
        out.record.notes.push_back("no proper sub-series of positive dimension");
        return out;
    }

    Search s{v, max_base_degree, {}, {}, 0, std::nullopt};
    std::set<std::vector<Rational>> seen;
    auto add_factors = [&](const BinaryForm& f) {
        for (const auto& fac : exact::squarefree_and_factor(f))
            if (fac.form.degree() <= max_base_degree && seen.insert(fac.form.coeffs()).second) s.primes.push_back(fac.form);
    };
    for (const auto& f : v.basis()) add_factors(f);
    for (std::size_t i = 0; i < v.basis().size(); ++i)
        for (std::size_t j = i + 1; j < v.basis().size(); ++j) {
            BinaryForm g = exact::form_gcd(v.basis()[i], v.basis()[j]);
            if (g.degree() > 0) add_factors(g);
        }
    std::sort(s.primes.begin(), s.primes.end());
    s.explore(BinaryForm(0, {1}));

    // Certified lower bound on the ratio of every proper sub-series.
    const p1::SplittingType st = p1::splitting_type(v);
    Rational lower;
    bool strict = false, attained = false;
    if (r == 2) {
        PencilCertificate c = pencil_certificate(v);
        lower = c.lower_bound;
        strict = c.strict;
        attained = c.attained;
        if (c.witness && c.witness->base.degree() <= max_base_degree) s.consider(*c.witness);
        out.record.notes.push_back(c.note);
    } else {
        int sum = 0;
        for (int rp = 1; rp < r; ++rp) {
            sum += st.twists()[rp - 1];
            Rational bound = Rational(sum) / Rational(rp);
            if (rp == 1 || bound < lower) lower = bound;
        }
        out.record.notes.push_back("splitting bound from twists");
    }
    out.record.lower_bound = lower;
    out.record.candidates_examined = s.examined;
    if (s.best) {
        out.witness = s.best;
        out.ratio = s.best->ratio;
        out.record.best_ratio = s.best->ratio;
    }

    if (s.best && s.best->ratio < target) {
        out.status = LinStatus::unstable;
    } else if (lower > target || (lower == target && strict)) {
        out.status = LinStatus::stable;
    } else if (lower == target && ((s.best && s.best->ratio == target) || attained)) {
        out.status = LinStatus::strictly_semistable;
    } else {
        out.status = LinStatus::unknown;
    }
    out.complete = out.status != LinStatus::unknown && s.best && s.best->ratio == lower && !strict;
    return out;
}

LinStabVerdict clifford_linear_rule(const criteria::CurveInvariants& c, const criteria::SeriesInvariants& s) {
    if (!s.flags.complete || s.dimV != s.h0) throw InvalidInput("rule not applicable");
    if (!s.flags.globally_generated) throw InvalidInput("rule not applicable");
    if (s.d - 2 * (s.h0 - 1) > c.cliff) throw InvalidInput("rule not applicable");
    LinStabVerdict v;
    v.record.method = "clifford_linear_rule";
    const bool exception = s.flags.is_canonical_twist_deg2 || (c.hyperelliptic && s.d == 2 * (s.h0 - 1));
    v.status = exception ? LinStatus::strictly_semistable : LinStatus::stable;
    v.complete = true;
    v.record.notes.push_back("d - 2(h0 - 1) = " + std::to_string(s.d - 2 * (s.h0 - 1)) + " <= cliff = " + std::to_string(c.cliff));
    if (exception) v.record.notes.push_back("exception case applies");
    return v;
}

} // namespace dsb::linstab
