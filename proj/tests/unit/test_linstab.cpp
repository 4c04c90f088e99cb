#include "doctest.h"

#include "dsb/error.hpp"
#include "dsb/exact/upoly.hpp"
#include "dsb/linstab/criteria.hpp"
#include "dsb/p1/splitting.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace dsb::linstab;
using dsb::exact::BinaryForm;
using dsb::exact::Rational;
using dsb::exact::UPoly;
using dsb::p1::LinearSeriesP1;

namespace {

BinaryForm F(std::vector<Rational> c) { return BinaryForm(static_cast<int>(c.size()) - 1, c); }

PlaneMap conic() { return PlaneMap(2, {F({1, 0, 0}), F({0, 1, 0}), F({0, 0, 1})}); }

// (u(s^2-u^2), s(s^2-u^2), u^3) with s = x, u = y
PlaneMap nodal_cubic() { return PlaneMap(3, {F({0, 1, 0, -1}), F({1, 0, -1, 0}), F({0, 0, 0, 1})}); }

// Quintic with f0, f1 divisible by x^2 - y^2: (1:1) and (1:-1) both map to (0:0:1).
PlaneMap rational_node_quintic(std::mt19937_64& rng) {
    const BinaryForm q = F({1, 0, -1});
    for (;;) {
        auto a = oracle::random_form(rng, 3), b = oracle::random_form(rng, 3), c = oracle::random_form(rng, 5);
        try {
            PlaneMap phi(5, {q * a, q * b, c});
            if (chordal_form(phi).birational) return phi;
        } catch (const dsb::InvalidInput&) {
        }
    }
}

PlaneMap random_plane_map(std::mt19937_64& rng, int d) {
    for (;;) {
        try {
            PlaneMap phi(d, {oracle::random_form(rng, d), oracle::random_form(rng, d), oracle::random_form(rng, d)});
            return phi;
        } catch (const dsb::InvalidInput&) {
        }
    }
}

std::string error_of(auto&& fn) {
    try {
        fn();
    } catch (const dsb::InvalidInput& e) {
        return e.what();
    }
    return "";
}

// Fiber length through the parameter (s0 : 1): degree of the gcd in t of the
// 2x2 minors of (f(s0), f(t)). Computed with univariate arithmetic only.
int oracle_fiber_length(const PlaneMap& phi, const Rational& s0) {
    std::vector<Rational> v;
    std::vector<UPoly> ft;
    for (const auto& f : phi.forms()) {
        v.push_back(f.eval(s0, Rational(1)));
        ft.push_back(f.dehomogenize());
    }
    UPoly g;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            UPoly m = ft[j] * UPoly({v[i]}) - ft[i] * UPoly({v[j]});
            g = g.is_zero() ? m : dsb::exact::gcd(g, m);
        }
    return g.degree();
}

} // namespace

TEST_CASE("multiplicity at a point") {
    CHECK(multiplicity_at_point(conic(), {1, 1, 1}) == 1);
    CHECK(multiplicity_at_point(nodal_cubic(), {0, 0, 1}) == 2);
    CHECK(error_of([] { multiplicity_at_point(conic(), {1, 0, 1}); }) == "point off curve");
    CHECK(fiber_form(nodal_cubic(), {0, 0, 1}).degree() == 2);
}

TEST_CASE("generic image points are smooth") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        PlaneMap phi = random_plane_map(rng, 4);
        if (!chordal_form(phi).birational) continue;
        std::uniform_int_distribution<int> u(-40, 40);
        const Rational s0 = Rational(u(rng)) / Rational(7);
        CHECK(multiplicity_at_point(phi, phi.image(s0, 1)) == 1);
        CHECK(oracle_fiber_length(phi, s0) == 1);
    }
}

TEST_CASE("chordal form examples") {
    auto c = chordal_form(conic());
    CHECK(c.birational);
    CHECK(c.G.is_constant());
    CHECK(c.special_parameters == 0);

    auto n = chordal_form(nodal_cubic());
    CHECK(n.birational);
    CHECK(n.delta == 1);
    CHECK(n.nodes_only);
    REQUIRE(n.identified_pairs);
    CHECK(*n.identified_pairs == 1);
    CHECK(n.eliminant == UPoly({-1, 0, 1}));
    CHECK_FALSE(n.infinity_special);

    // a double cover of a conic is flagged, not rejected
    auto dbl = chordal_form(PlaneMap(4, {F({1, 0, 0, 0, 0}), F({0, 0, 1, 0, 0}), F({0, 0, 0, 0, 1})}));
    CHECK_FALSE(dbl.birational);
}

TEST_CASE("random quintic maps have six identified pairs") {
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int trial = 0; trial < 10 && checked < 4; ++trial) {
        PlaneMap phi = random_plane_map(rng, 5);
        auto cf = chordal_form(phi);
        REQUIRE(cf.birational);
        CHECK(cf.delta == 6);
        if (!cf.nodes_only) continue;
        ++checked;
        CHECK(*cf.identified_pairs == 6);
        CHECK(cf.special_parameters == 12);
        auto rep = multiplicity_report(phi, cf);
        CHECK(rep.max_multiplicity == 2);
        CHECK(rep.exact);
    }
    CHECK(checked >= 1);
}

TEST_CASE("rational node is located and matches the univariate oracle") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 3; ++trial) {
        PlaneMap phi = rational_node_quintic(rng);
        auto rep = multiplicity_report(phi);
        bool found = false;
        for (const auto& e : rep.points)
            if (e.point == Point{0, 0, 1}) {
                found = true;
                CHECK(e.multiplicity == 2);
            }
        CHECK(found);
        CHECK(oracle_fiber_length(phi, 1) == 2);
        CHECK(oracle_fiber_length(phi, -1) == 2);
        CHECK(multiplicity_at_point(phi, {0, 0, 1}) == 2);
    }
}

TEST_CASE("rational special parameters agree with fiber oracle") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 4; ++trial) {
        PlaneMap phi = rational_node_quintic(rng);
        auto cf = chordal_form(phi);
        for (const auto& root : dsb::exact::rational_roots(cf.eliminant)) CHECK(oracle_fiber_length(phi, root) >= 2);
        for (int s = -3; s <= 3; ++s)
            if (oracle_fiber_length(phi, s) >= 2) CHECK(cf.eliminant.eval(Rational(s)).is_zero());
    }
}

TEST_CASE("plane criterion examples") {
    auto c = plane_criterion(conic());
    CHECK(c.status == LinStatus::strictly_semistable);
    CHECK(c.complete);
    CHECK(*c.ratio == 1);

    auto n = plane_criterion(nodal_cubic());
    CHECK(n.status == LinStatus::unstable);
    REQUIRE(n.witness);
    CHECK(n.witness->ratio == 1);
    CHECK(*n.witness->point == Point{0, 0, 1});

    std::mt19937_64 rng(8);
    auto q = plane_criterion(rational_node_quintic(rng));
    CHECK(q.status == LinStatus::stable);
    REQUIRE(q.witness);
    CHECK(q.witness->ratio == 3);

    CHECK(error_of([] { plane_criterion(PlaneMap(4, {F({1, 0, 0, 0, 0}), F({0, 0, 1, 0, 0}), F({0, 0, 0, 0, 1})})); }) ==
          "criterion requires birational morphism");
    CHECK(error_of([] { plane_criterion(PlaneMap(conic().series(), false)); }) == "criterion requires birational morphism");
}

TEST_CASE("base divisor search examples") {
    auto complete2 = base_divisor_search(LinearSeriesP1::complete(2), 1);
    CHECK(complete2.status == LinStatus::strictly_semistable);
    CHECK(*complete2.ratio == 1);
    CHECK(complete2.complete);

    auto pencil = base_divisor_search(LinearSeriesP1(4, {F({1, 0, 0, 0, 0}), F({0, 0, 0, 0, 1})}));
    CHECK(pencil.status == LinStatus::stable);

    auto cubic = base_divisor_search(nodal_cubic().series());
    CHECK(cubic.status == LinStatus::unstable);
    CHECK(*cubic.ratio == 1);

    std::mt19937_64 rng(8);
    auto quintic = base_divisor_search(rational_node_quintic(rng).series());
    CHECK(quintic.status == LinStatus::stable);
    CHECK(*quintic.ratio == 3);
    CHECK(*quintic.record.lower_bound == 3);

    CHECK(error_of([] { base_divisor_search(LinearSeriesP1::complete(3), 3); }) == "max_base_degree must lie in [0, d-1]");
}

TEST_CASE("complete series are strictly semistable") {
    for (int d = 1; d <= 6; ++d) {
        auto v = base_divisor_search(LinearSeriesP1::complete(d));
        CHECK(v.status == (d == 1 ? LinStatus::stable : LinStatus::strictly_semistable));
    }
}

TEST_CASE("plane criterion and base search agree on fixtures") {
    std::mt19937_64 rng(3);
    std::vector<PlaneMap> fixtures = {conic(), nodal_cubic(), rational_node_quintic(rng), rational_node_quintic(rng)};
    for (const auto& phi : fixtures) {
        auto a = plane_criterion(phi), b = base_divisor_search(phi.series());
        CHECK(a.status == b.status);
        CHECK(*a.ratio == *b.ratio);
    }
}

TEST_CASE("witnesses replay to their claimed ratio") {
    std::mt19937_64 rng(19);
    std::vector<LinearSeriesP1> cases = {LinearSeriesP1::complete(3), nodal_cubic().series(), conic().series(),
                                         rational_node_quintic(rng).series()};
    for (int i = 0; i < 6; ++i) cases.push_back(gen::random_series(rng, 4 + i % 2, 2 + i % 2));
    for (const auto& v : cases) {
        auto res = base_divisor_search(v);
        INFO(v.degree(), " ", v.rank(), " ", dsb::linstab::to_string(res.status), " ", (res.record.notes.empty() ? "" : res.record.notes[0]));
        if (res.status != LinStatus::unknown) CHECK((res.witness || (res.record.lower_bound && !res.record.notes.empty())));
        if (res.witness) CHECK(replay_witness(v, *res.witness) == res.witness->ratio);
    }
    auto pc = plane_criterion(nodal_cubic());
    CHECK(replay_witness(nodal_cubic().series(), *pc.witness) == 1);
}

TEST_CASE("forged witnesses are rejected") {
    auto v = LinearSeriesP1::complete(3);
    auto res = base_divisor_search(v);
    REQUIRE(res.witness);
    Witness w = *res.witness;
    w.ratio = Rational(1, 2);
    CHECK_THROWS_AS(replay_witness(v, w), dsb::InternalError);
    w = *res.witness;
    w.subseries[0] = F({1, 1, 1, 1});
    CHECK_THROWS_AS(replay_witness(v, w), dsb::InternalError);
}

TEST_CASE("verdicts are invariant under pullback") {
    std::mt19937_64 rng(31);
    std::vector<LinearSeriesP1> cases = {conic().series(), nodal_cubic().series(), LinearSeriesP1::complete(3)};
    const std::vector<std::pair<BinaryForm, BinaryForm>> maps = {{F({1, 0, 1}), F({0, 1, 0})},
                                                                  {F({1, 0, 0, 1}), F({0, 1, 0, 0})}};
    for (const auto& v : cases) {
        auto base = base_divisor_search(v);
        for (const auto& [a, c] : maps) {
            auto up = pullback(v, a, c);
            CHECK(up.degree() == v.degree() * a.degree());
            auto lifted = base_divisor_search(up);
            CHECK(lifted.status == base.status);
            if (base.ratio && lifted.ratio && lifted.complete && base.complete)
                CHECK(*lifted.ratio == *base.ratio * Rational(a.degree()));
        }
    }
    PlaneMap q = rational_node_quintic(rng);
    auto up = pullback(q.series(), F({1, 0, 1}), F({0, 1, 0}));
    CHECK(base_divisor_search(up).status == LinStatus::stable);
    CHECK(error_of([&] { pullback(q.series(), F({1, 0}), F({1, 0})); }) == "pullback forms must be coprime");
}

TEST_CASE("clifford linear rule") {
    using dsb::criteria::CurveInvariants;
    using dsb::criteria::SeriesInvariants;
    auto series = [](int d, int h0, int h1) {
        SeriesInvariants s;
        s.d = d;
        s.h0 = h0;
        s.h1 = h1;
        s.dimV = h0;
        s.flags.complete = true;
        s.flags.globally_generated = true;
        return s;
    };
    CHECK(clifford_linear_rule({4, 3, 1, false}, series(6, 4, 1)).status == LinStatus::stable);
    CHECK(clifford_linear_rule({3, 2, 0, true}, series(4, 3, 0)).status == LinStatus::strictly_semistable);
    CHECK(error_of([&] { clifford_linear_rule({5, 4, 2, false}, series(7, 3, 0)); }) == "rule not applicable");
    auto twist = series(8, 5, 0);
    twist.flags.is_canonical_twist_deg2 = true;
    CHECK(clifford_linear_rule({4, 3, 1, false}, twist).status == LinStatus::strictly_semistable);
}
