#include "dsb/io/json.hpp"

#include "dsb/error.hpp"

namespace dsb::io {

using exact::BinaryForm;
using exact::Rational;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw InvalidInput("malformed json: " + what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) malformed(std::string("missing \"") + key + "\"");
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) malformed(std::string("\"") + key + "\" must be an integer");
    return v.get<int>();
}

bool bool_field(const Json& j, const char* key, bool fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_boolean()) malformed(std::string("\"") + key + "\" must be a boolean");
    return j.at(key).get<bool>();
}

Json upoly_json(const exact::UPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

Json point_json(const linstab::Point& p) { return Json::array({to_json(p[0]), to_json(p[1]), to_json(p[2])}); }

Json check_json(const criteria::Check& c) { return {{"relation", c.relation}, {"values", c.values}, {"holds", c.holds}}; }

} // namespace

Json to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) malformed("rational must be a string or integer");
    return Rational::parse(j.get<std::string>());
}

Json to_json(const BinaryForm& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(to_json(c));
    return {{"degree", f.degree()}, {"coeffs", coeffs}};
}

BinaryForm form_from_json(const Json& j) {
    const int d = int_field(j, "degree");
    const Json& cs = field(j, "coeffs");
    if (!cs.is_array()) malformed("\"coeffs\" must be an array");
    if (d < 0 || cs.size() != static_cast<std::size_t>(d) + 1) malformed("coefficient count must be degree + 1");
    std::vector<Rational> c;
    for (const auto& x : cs) c.push_back(rational_from_json(x));
    return BinaryForm(d, c);
}

Json to_json(const p1::LinearSeriesP1& v) {
    Json basis = Json::array();
    for (const auto& f : v.basis()) basis.push_back(to_json(f));
    return {{"d", v.degree()}, {"basis", basis}};
}

p1::LinearSeriesP1 series_from_json(const Json& j) {
    const int d = int_field(j, "d");
    const Json& b = field(j, "basis");
    if (!b.is_array()) malformed("\"basis\" must be an array");
    std::vector<BinaryForm> basis;
    for (const auto& f : b) basis.push_back(form_from_json(f));
    return p1::LinearSeriesP1(d, basis);
}

Json to_json(const linstab::PlaneMap& phi) {
    Json forms = Json::array();
    for (const auto& f : phi.forms()) forms.push_back(to_json(f));
    Json out = {{"d", phi.degree()}, {"forms", forms}};
    if (phi.birational_flag()) out["birational"] = *phi.birational_flag();
    return out;
}

linstab::PlaneMap plane_map_from_json(const Json& j) {
    const int d = int_field(j, "d");
    const Json& fs = field(j, "forms");
    if (!fs.is_array() || fs.size() != 3) throw InvalidInput("plane map needs exactly three forms");
    std::array<BinaryForm, 3> forms{form_from_json(fs[0]), form_from_json(fs[1]), form_from_json(fs[2])};
    std::optional<bool> bir;
    if (j.contains("birational")) bir = bool_field(j, "birational", false);
    return linstab::PlaneMap(d, forms, bir);
}

Json splitting_json(const p1::LinearSeriesP1& v) {
    const p1::SplittingType st = p1::splitting_type(v);
    return {{"series", to_json(v)},
            {"twists", st.twists()},
            {"slope", to_json(p1::slope(st))},
            {"verdicts",
             {{"slope", p1::to_string(p1::split_slope_verdict(st))},
              {"cohomological", p1::to_string(p1::cohomological_verdict(st))}}},
            {"profile", p1::graded_kernel_profile(v).kernel_dims}};
}

Json to_json(const linstab::Witness& w) {
    Json sub = Json::array();
    for (const auto& f : w.subseries) sub.push_back(to_json(f));
    Json out = {{"kind", w.kind}, {"base", to_json(w.base)}, {"subseries", sub},
                {"d_prime", w.d_prime}, {"r_prime", w.r_prime}, {"ratio", to_json(w.ratio)}};
    if (w.point) out["point"] = point_json(*w.point);
    return out;
}

Json to_json(const linstab::LinStabVerdict& v) {
    Json out = {{"status", linstab::to_string(v.status)}};
    out["ratio"] = v.ratio ? to_json(*v.ratio) : Json(nullptr);
    out["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
    out["complete"] = v.complete;
    Json rec = {{"method", v.record.method}, {"candidates_examined", v.record.candidates_examined}};
    rec["best_ratio"] = v.record.best_ratio ? to_json(*v.record.best_ratio) : Json(nullptr);
    rec["lower_bound"] = v.record.lower_bound ? to_json(*v.record.lower_bound) : Json(nullptr);
    rec["notes"] = v.record.notes;
    out["record"] = rec;
    return out;
}

Json to_json(const linstab::MultiplicityReport& m) {
    Json pts = Json::array();
    for (const auto& e : m.points)
        pts.push_back({{"point", point_json(e.point)}, {"fiber", to_json(e.fiber)}, {"multiplicity", e.multiplicity}});
    Json cl = Json::array();
    for (const auto& c : m.clusters) cl.push_back({{"factor", upoly_json(c.factor)}, {"lower", c.lower}, {"upper", c.upper}});
    return {{"points", pts}, {"clusters", cl}, {"max_multiplicity", m.max_multiplicity},
            {"max_upper", m.max_upper}, {"completeness", m.exact ? "exact" : "lower_bound"}};
}

Json to_json(const linstab::ChordalForm& c, const linstab::MultiplicityReport& m) {
    Json out = {{"birational", c.birational}, {"G_total_degree", c.G.total_degree()}};
    if (c.birational) {
        out["delta"] = c.delta;
        out["eliminant"] = upoly_json(c.eliminant);
        out["infinity_special"] = c.infinity_special;
        Json fs = Json::array();
        for (const auto& f : c.factors) fs.push_back({{"factor", upoly_json(f.poly)}, {"multiplicity", f.multiplicity}});
        out["factors"] = fs;
        out["factored"] = c.factored;
        out["special_parameters"] = c.special_parameters;
        out["nodes_only"] = c.nodes_only;
        out["identified_pairs"] = c.identified_pairs ? Json(*c.identified_pairs) : Json(nullptr);
        out["multiplicity"] = to_json(m);
    }
    return out;
}

Json to_json(const criteria::CurveInvariants& c, const criteria::SeriesInvariants& s) {
    const auto& f = s.flags;
    return {{"curve", {{"g", c.g}, {"gamma", c.gamma}, {"cliff", c.cliff}, {"hyperelliptic", c.hyperelliptic}}},
            {"series",
             {{"d", s.d}, {"h0", s.h0}, {"h1", s.h1}, {"dimV", s.dimV},
              {"flags",
               {{"complete", f.complete}, {"globally_generated", f.globally_generated}, {"birational", f.birational},
                {"computes_clifford", f.computes_clifford}, {"is_canonical_twist_deg2", f.is_canonical_twist_deg2},
                {"general_subspace", f.general_subspace}}}}}};
}

std::pair<criteria::CurveInvariants, criteria::SeriesInvariants> invariants_from_json(const Json& j) {
    const Json& cj = field(j, "curve");
    const Json& sj = field(j, "series");
    criteria::CurveInvariants c;
    c.g = int_field(cj, "g");
    c.gamma = int_field(cj, "gamma");
    c.cliff = int_field(cj, "cliff");
    c.hyperelliptic = bool_field(cj, "hyperelliptic", false);
    criteria::SeriesInvariants s;
    s.d = int_field(sj, "d");
    s.h0 = int_field(sj, "h0");
    s.h1 = int_field(sj, "h1");
    s.dimV = int_field(sj, "dimV");
    const Json flags = sj.contains("flags") ? sj.at("flags") : Json::object();
    s.flags.complete = bool_field(flags, "complete", false);
    s.flags.globally_generated = bool_field(flags, "globally_generated", false);
    s.flags.birational = bool_field(flags, "birational", false);
    s.flags.computes_clifford = bool_field(flags, "computes_clifford", false);
    s.flags.is_canonical_twist_deg2 = bool_field(flags, "is_canonical_twist_deg2", false);
    s.flags.general_subspace = bool_field(flags, "general_subspace", false);
    return {c, s};
}

Json to_json(const criteria::VerdictSet& v) {
    using criteria::Notion;
    Json status;
    for (Notion n : {Notion::linear, Notion::slope, Notion::cohomological}) status[criteria::to_string(n)] = criteria::to_string(v.get(n));
    Json certs = Json::array();
    for (const auto& c : v.certificates) {
        Json contrib = Json::array();
        for (const auto& x : c.contributions)
            contrib.push_back({{"notion", criteria::to_string(x.notion)}, {"status", criteria::to_string(x.status)}});
        Json checks = Json::array();
        for (const auto& k : c.checklist) checks.push_back(check_json(k));
        certs.push_back({{"rule", c.rule.id}, {"cite", c.rule.cite}, {"quote", c.rule.quote}, {"contributions", contrib},
                         {"linear_slope_equivalence", c.linear_slope_equivalence}, {"checklist", checks}});
    }
    Json unfired = Json::array();
    for (const auto& u : v.unfired) unfired.push_back({{"rule", u.rule}, {"first_failing", check_json(u.first_failing)}});
    Json flags = Json::array();
    for (const auto& f : v.flags) flags.push_back({{"rule", f.rule}, {"kind", f.kind}, {"detail", f.detail}});
    Json out = {{"status", status}};
    out["slope"] = v.slope ? to_json(*v.slope) : Json(nullptr);
    out["linear_slope_equivalence"] = v.linear_slope_equivalence;
    out["certificates"] = certs;
    out["unfired"] = unfired;
    out["flags"] = flags;
    return out;
}

Json to_json(const repro::CounterexampleReport& r) {
    const p1::SplittingType& st = r.splitting;
    return {{"seed", r.seed},
            {"attempts", r.attempts},
            {"series", to_json(r.series)},
            {"splitting",
             {{"twists", st.twists()},
              {"slope", to_json(p1::slope(st))},
              {"verdicts",
               {{"slope", p1::to_string(r.slope)}, {"cohomological", p1::to_string(p1::cohomological_verdict(st))}}}}},
            {"multiplicity", to_json(r.multiplicity)},
            {"linear", to_json(r.linear)}};
}

Json to_json(const repro::FamilyReport& f) {
    return {{"k", f.k}, {"invariants", to_json(f.curve, f.series)}, {"verdicts", to_json(f.verdicts)}};
}

Json to_json(const repro::Fixture& f) {
    Json out = {{"name", f.name}, {"description", f.description}};
    if (f.series) out["series"] = to_json(*f.series);
    if (f.invariants) out["invariants"] = to_json(f.invariants->first, f.invariants->second);
    Json e = Json::object();
    const auto& x = f.expected;
    if (x.twists) e["twists"] = *x.twists;
    if (x.linear) e["linear"] = linstab::to_string(*x.linear);
    if (x.max_multiplicity) e["max_multiplicity"] = *x.max_multiplicity;
    if (x.slope) e["slope"] = to_json(*x.slope);
    if (x.slope_status) e["slope_status"] = criteria::to_string(*x.slope_status);
    if (x.discrepancy_flag) e["discrepancy_flag"] = true;
    out["expected"] = e;
    return out;
}

} // namespace dsb::io
