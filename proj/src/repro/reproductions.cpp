#include "dsb/repro/reproductions.hpp"

#include "dsb/error.hpp"

#include <random>

namespace dsb::repro {

using exact::BinaryForm;
using exact::Rational;
using linstab::LinStatus;

namespace {

BinaryForm sample_form(std::mt19937_64& rng, int d) {
    std::uniform_int_distribution<int> u(-5, 5);
    std::vector<Rational> c;
    for (int i = 0; i <= d; ++i) c.emplace_back(u(rng));
    return BinaryForm(d, c);
}

BinaryForm form(std::vector<Rational> c) {
    const int d = static_cast<int>(c.size()) - 1;
    return BinaryForm(d, std::move(c));
}

} // namespace

CounterexampleReport plane_counterexample(int d, std::uint64_t seed, int budget) {
    if (d < 5 || d % 2 == 0) throw InvalidInput("degree must be odd and at least 5");
    std::mt19937_64 rng(seed);
    std::string last = "no attempt";
    for (int attempt = 1; attempt <= budget; ++attempt) {
        std::vector<BinaryForm> basis = {sample_form(rng, d), sample_form(rng, d), sample_form(rng, d)};
        std::optional<p1::LinearSeriesP1> v;
        try {
            v.emplace(d, basis);
        } catch (const InvalidInput& e) {
            last = e.what();
            continue;
        }
        linstab::PlaneMap phi(*v);
        linstab::ChordalForm cf = chordal_form(phi);
        if (!cf.birational) {
            last = "not birational";
            continue;
        }
        if (!cf.nodes_only) {
            last = "singularities beyond nodes";
            continue;
        }
        linstab::MultiplicityReport rep = multiplicity_report(phi, cf);
        if (!rep.exact || rep.max_multiplicity > 2) {
            last = "multiplicity not certified";
            continue;
        }
        linstab::LinStabVerdict lin = plane_criterion(phi);
        p1::SplittingType st = p1::splitting_type(*v);
        p1::SlopeVerdict sv = p1::split_slope_verdict(st);
        if (lin.status != LinStatus::stable || sv != p1::SlopeVerdict::unstable)
            throw InternalError("certified node-only series is not a counterexample");
        return {seed, attempt, *v, st, rep, lin, sv};
    }
    throw CeilingExceeded("retry budget exhausted: " + last);
}

FamilyReport slope3_family(int k) {
    if (k < 2) throw InvalidInput("k must be at least 2");
    FamilyReport f;
    f.k = k;
    f.curve = {2 * k, k + 1, k - 1, false};
    f.series.d = 3 * k - 3;
    f.series.h0 = k;
    f.series.h1 = 2;
    f.series.dimV = k;
    f.series.flags.complete = true;
    f.series.flags.globally_generated = true;
    f.series.flags.computes_clifford = true;
    f.verdicts = criteria::apply_rules(f.curve, f.series);
    if (*f.verdicts.slope != Rational(-3) || f.verdicts.get(criteria::Notion::slope) != criteria::Status::stable)
        throw InternalError("slope-3 family check failed");
    return f;
}

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = [] {
        std::vector<Fixture> out;
        auto plane = [&](std::string name, std::string desc, int d, std::vector<std::vector<Rational>> forms, Expected e) {
            std::vector<BinaryForm> basis;
            for (auto& c : forms) basis.push_back(form(c));
            out.push_back({std::move(name), std::move(desc), p1::LinearSeriesP1(d, basis), std::nullopt, std::move(e)});
        };
        plane("conic", "smooth conic (x^2, xy, y^2)", 2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
              {std::vector<int>{1, 1}, LinStatus::strictly_semistable, 1, {}, {}, false});
        plane("nodal_cubic", "nodal cubic (y(x^2-y^2), x(x^2-y^2), y^3), node at (0:0:1)", 3,
              {{0, 1, 0, -1}, {1, 0, -1, 0}, {0, 0, 0, 1}}, {std::vector<int>{1, 2}, LinStatus::unstable, 2, {}, {}, false});
        for (int d = 1; d <= 8; ++d) {
            Expected e;
            e.twists = std::vector<int>(d, 1);
            e.linear = d == 1 ? LinStatus::stable : LinStatus::strictly_semistable;
            out.push_back({"complete_d" + std::to_string(d), "complete series of degree " + std::to_string(d),
                           p1::LinearSeriesP1::complete(d), std::nullopt, e});
        }
        // f0, f1 divisible by x^2 - y^2, so (1:1) and (1:-1) both map to (0:0:1)
        const Expected node{std::vector<int>{2, 3}, LinStatus::stable, 2, {}, {}, false};
        plane("quintic_node_1", "quintic with a rational node at (0:0:1)", 5,
              {{-2, 0, -1, 0, 3, 0}, {-2, 2, 2, -1, 0, -1}, {2, 2, 3, -2, -3, 3}}, node);
        plane("quintic_node_2", "quintic with a rational node at (0:0:1)", 5,
              {{2, 1, 0, 2, -2, -3}, {-2, 2, 4, -3, -2, 1}, {-2, 0, -1, 1, 2, -3}}, node);
        plane("quintic_node_3", "quintic with a rational node at (0:0:1)", 5,
              {{2, 3, -3, -1, 1, -2}, {1, 0, -1, -3, 0, 3}, {-2, -2, 3, 0, -1, -1}}, node);
        plane("monomial_quintic", "monomial quintic (x^5, x^2y^3, y^5); triple point at (1:0:0)", 5,
              {{1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1}},
              {std::vector<int>{2, 3}, LinStatus::unstable, 3, {}, {}, false});

        criteria::SeriesInvariants s;
        s.d = 18;
        s.h0 = 10;
        s.h1 = 1;
        s.dimV = 7;
        s.flags.globally_generated = true;
        s.flags.general_subspace = true;
        Expected g;
        g.slope = Rational(-3);
        g.discrepancy_flag = true;
        out.push_back({"genus10_projection", "codimension 3 projection of a canonical curve of genus 10", std::nullopt,
                       std::make_pair(criteria::CurveInvariants{10, 6, 4, false}, s), g});
        return out;
    }();
    return all;
}

const Fixture& fixture(const std::string& name) {
    for (const auto& f : fixtures())
        if (f.name == name) return f;
    throw InvalidInput("unknown fixture");
}

} // namespace dsb::repro
