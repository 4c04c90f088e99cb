#include "doctest.h"

#include "dsb/io/json.hpp"
#include "support/generators.hpp"

#include <random>

using namespace dsb::io;
using dsb::exact::Rational;

TEST_CASE("rationals serialize as p/q strings") {
    CHECK(to_json(Rational(3, 6)) == "1/2");
    CHECK(to_json(Rational(-4, 2)) == "-2");
    CHECK(rational_from_json(Json("-7/21")) == Rational(-1, 3));
    CHECK(rational_from_json(Json(5)) == Rational(5));
    CHECK_THROWS_AS(rational_from_json(Json(1.5)), dsb::InvalidInput);
}

TEST_CASE("forms and series round trip") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        auto v = gen::random_series(rng, 3 + i % 4, 1 + i % 3);
        auto back = series_from_json(Json::parse(to_json(v).dump()));
        CHECK(back.basis() == v.basis());
        for (const auto& f : v.basis()) CHECK(form_from_json(to_json(f)) == f);
    }
}

TEST_CASE("plane maps round trip with their flag") {
    std::mt19937_64 rng(4);
    auto v = gen::random_series(rng, 4, 2);
    dsb::linstab::PlaneMap phi(v, true);
    auto back = plane_map_from_json(to_json(phi));
    CHECK(back.forms() == phi.forms());
    CHECK(back.birational_flag() == std::optional<bool>(true));
}

TEST_CASE("invariants round trip") {
    dsb::criteria::CurveInvariants c{10, 6, 4, false};
    dsb::criteria::SeriesInvariants s;
    s.d = 12;
    s.h0 = 5;
    s.h1 = 2;
    s.dimV = 5;
    s.flags.complete = true;
    s.flags.computes_clifford = true;
    auto [c2, s2] = invariants_from_json(to_json(c, s));
    CHECK(to_json(c2, s2) == to_json(c, s));
}

TEST_CASE("malformed documents are named errors") {
    auto msg = [](auto&& fn) {
        try {
            fn();
        } catch (const dsb::InvalidInput& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(msg([] { form_from_json(Json::parse(R"({"degree":2,"coeffs":["1"]})")); }) ==
          "malformed json: coefficient count must be degree + 1");
    CHECK(msg([] { series_from_json(Json::parse(R"({"basis":[]})")); }) == "malformed json: missing \"d\"");
    CHECK(msg([] { plane_map_from_json(Json::parse(R"({"d":1,"forms":[]})")); }) == "plane map needs exactly three forms");
    CHECK(msg([] { rational_from_json(Json("1/0")); }) == "zero denominator");
}
