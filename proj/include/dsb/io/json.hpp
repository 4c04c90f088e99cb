#pragma once

#include "dsb/criteria/engine.hpp"
#include "dsb/linstab/criteria.hpp"
#include "dsb/p1/splitting.hpp"
#include "dsb/repro/reproductions.hpp"

#include <json.hpp>

namespace dsb::io {

using Json = nlohmann::ordered_json;

/// Parsing failures throw InvalidInput("malformed json: ...").
Json to_json(const exact::Rational& q);
exact::Rational rational_from_json(const Json& j);

Json to_json(const exact::BinaryForm& f);
exact::BinaryForm form_from_json(const Json& j);

Json to_json(const p1::LinearSeriesP1& v);
p1::LinearSeriesP1 series_from_json(const Json& j);

Json to_json(const linstab::PlaneMap& phi);
linstab::PlaneMap plane_map_from_json(const Json& j);

/// Twists, slope, split verdicts and the kernel profile of V.
Json splitting_json(const p1::LinearSeriesP1& v);

Json to_json(const linstab::Witness& w);
Json to_json(const linstab::LinStabVerdict& v);
Json to_json(const linstab::ChordalForm& c, const linstab::MultiplicityReport& m);
Json to_json(const linstab::MultiplicityReport& m);

Json to_json(const criteria::CurveInvariants& c, const criteria::SeriesInvariants& s);
std::pair<criteria::CurveInvariants, criteria::SeriesInvariants> invariants_from_json(const Json& j);
Json to_json(const criteria::VerdictSet& v);

Json to_json(const repro::CounterexampleReport& r);
Json to_json(const repro::FamilyReport& f);
Json to_json(const repro::Fixture& f);

} // namespace dsb::io
