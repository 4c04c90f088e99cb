#include "dsb/criteria/engine.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace dsb::criteria {

using exact::Rational;

std::string to_string(Notion n) {
    switch (n) {
    case Notion::linear: return "linear";
    case Notion::slope: return "slope";
    case Notion::cohomological: return "cohomological";
    }
    return "";
}

std::string to_string(Status s) {
    switch (s) {
    case Status::stable: return "stable";
    case Status::strictly_semistable: return "strictly_semistable";
    case Status::semistable: return "semistable";
    case Status::unstable: return "unstable";
    case Status::unknown: return "unknown";
    }
    return "";
}

Status status_from_string(const std::string& s) {
    for (Status x : {Status::stable, Status::strictly_semistable, Status::semistable, Status::unstable, Status::unknown})
        if (to_string(x) == s) return x;
    throw InvalidInput("unknown status");
}

const std::vector<RuleInfo>& rule_catalog() {
    static const std::vector<RuleInfo> catalog = {
        {"R1", "Prop 3.4", "Then L is linearly semistable"},
        {"R2", "Thm 5.1", "linearly (semi)stable if and only if M_L is (semi)stable"},
        {"R3", "Thm 5.2", "it is strictly semistable only in one of the following cases"},
        {"R4", "Cor 5.3", "deg L ⩾ 2g − Cliff(C)"},
        {"R5", "Cor 5.4", "computes the Clifford index"},
        {"R6", "Thm 6.2", "codim < h^1(L)+g/(dim V−2)"},
        {"R7", "Prop 6.6", "general subspace of codimension smaller than or equal to 2"},
        {"R8", "Thm 7.2", "cohomologically semistable. It is strictly stable unless d=2r"},
        {"R9", "chain (1)", "cohomological semistability is equivalent to vector bundle semistability"},
    };
    return catalog;
}

const RuleInfo& rule_info(const std::string& id) {
    for (const auto& r : rule_catalog())
        if (r.id == id) return r;
    throw InvalidInput("unknown rule");
}

namespace {

std::string s_of(const Rational& q) { return q.str(); }
std::string s_of(int v) { return std::to_string(v); }
std::string s_of(bool b) { return b ? "true" : "false"; }

Check leq(const std::string& rel, const Rational& a, const Rational& b) { return {rel, s_of(a) + " <= " + s_of(b), a <= b}; }
Check lt(const std::string& rel, const Rational& a, const Rational& b) { return {rel, s_of(a) + " < " + s_of(b), a < b}; }
Check geq(const std::string& rel, const Rational& a, const Rational& b) { return {rel, s_of(a) + " >= " + s_of(b), a >= b}; }
Check flag(const std::string& name, bool v) { return {name, s_of(v), v}; }

bool all_hold(const std::vector<Check>& cs) {
    return std::all_of(cs.begin(), cs.end(), [](const Check& c) { return c.holds; });
}

Rational R(int v) { return Rational(v); }

bool exception_case(const CurveInvariants& c, const SeriesInvariants& s) {
    return s.flags.is_canonical_twist_deg2 || (c.hyperelliptic && s.d == 2 * (s.h0 - 1));
}

Check clifford_bound(const CurveInvariants& c, const SeriesInvariants& s) {
    return leq("d - 2(h0-1) <= cliff", R(s.d - 2 * (s.h0 - 1)), R(c.cliff));
}

Check case3(const CurveInvariants& c, const SeriesInvariants& s) {
    if (s.dimV <= 2) return {"codim < h1 + g/(dimV-2)", "dimV - 2 = " + s_of(s.dimV - 2), false};
    return lt("codim < h1 + g/(dimV-2)", R(s.codim()), R(s.h1) + R(c.g) / R(s.dimV - 2));
}

Status semistable_unless(bool strict) { return strict ? Status::strictly_semistable : Status::stable; }

Certificate evaluate(const std::string& id, const CurveInvariants& c, const SeriesInvariants& s) {
    Certificate cert;
    cert.rule = rule_info(id);
    auto& ck = cert.checklist;
    if (id == "R1") {
        ck = {flag("complete", s.flags.complete), flag("globally_generated", s.flags.globally_generated), clifford_bound(c, s)};
        cert.contributions = {{Notion::linear, semistable_unless(exception_case(c, s))}};
    } else if (id == "R2") {
        ck = {flag("complete", s.flags.complete), flag("globally_generated", s.flags.globally_generated), clifford_bound(c, s)};
        cert.linear_slope_equivalence = true;
    } else if (id == "R3") {
        ck = {flag("complete", s.flags.complete), flag("globally_generated", s.flags.globally_generated), clifford_bound(c, s)};
        cert.contributions = {{Notion::slope, semistable_unless(exception_case(c, s))}};
    } else if (id == "R4") {
        ck = {flag("complete", s.flags.complete), flag("globally_generated", s.flags.globally_generated),
              geq("d >= 2g - cliff", R(s.d), R(2 * c.g - c.cliff))};
        cert.contributions = {{Notion::slope, semistable_unless(exception_case(c, s))}};
    } else if (id == "R5") {
        ck = {flag("complete", s.flags.complete), flag("computes_clifford", s.flags.computes_clifford)};
        cert.contributions = {{Notion::slope, semistable_unless(c.hyperelliptic)}};
    } else if (id == "R6") {
        ck = {flag("globally_generated", s.flags.globally_generated),
              leq("d - 2(dimV-1) <= cliff", R(s.d - 2 * (s.dimV - 1)), R(c.cliff))};
        std::vector<Check> cases = {
            flag("case 1: complete", s.flags.complete),
            leq("case 2: d <= 2g - cliff + 1", R(s.d), R(2 * c.g - c.cliff + 1)),
            case3(c, s),
        };
        Check c4a = geq("d >= 2g", R(s.d), R(2 * c.g));
        Check c4b = leq("codim <= (d - 2g)/2", R(s.codim()), R(s.d - 2 * c.g) / R(2));
        cases.push_back({"case 4: d >= 2g and codim <= (d - 2g)/2", c4a.values + ", " + c4b.values, c4a.holds && c4b.holds});
        auto hit = std::find_if(cases.begin(), cases.end(), [](const Check& x) { return x.holds; });
        if (hit != cases.end()) {
            ck.push_back(*hit);
        } else {
            std::string vals;
            for (const auto& x : cases) vals += (vals.empty() ? "" : "; ") + x.relation + ": " + x.values;
            ck.push_back({"one of cases 1-4", vals, false});
        }
        cert.linear_slope_equivalence = true;
    } else if (id == "R7") {
        ck = {geq("cliff >= 4", R(c.cliff), R(4)),
              {"canonical series: d = 2g-2 and h0 = g", s_of(s.d) + " = " + s_of(2 * c.g - 2) + ", " + s_of(s.h0) + " = " + s_of(c.g),
               s.d == 2 * c.g - 2 && s.h0 == c.g},
              flag("general_subspace", s.flags.general_subspace), leq("codim <= 2", R(s.codim()), R(2))};
        cert.contributions = {{Notion::slope, Status::semistable}};
    } else if (id == "R8") {
        const int r = s.r();
        ck = {flag("birational", s.flags.birational), leq("d <= 2r + cliff", R(s.d), R(2 * r + c.cliff)),
              leq("codim <= h1", R(s.codim()), R(s.h1))};
        cert.contributions = {{Notion::cohomological, semistable_unless(s.d == 2 * r)}};
    } else {
        throw InvalidInput("unknown rule");
    }
    return cert;
}

// Tri-state knowledge: -1 unknown, 0 false, 1 true.
struct Knowledge {
    std::array<int, 3> ss{-1, -1, -1};
    std::array<int, 3> st{-1, -1, -1};
    bool bridge = false;
    std::vector<std::string> sources;

    bool put(std::array<int, 3>& a, Notion n, int v, const char* what) {
        int& slot = a[static_cast<int>(n)];
        if (slot == v) return false;
        if (slot != -1) {
            std::string detail = to_string(n) + " " + what + " both asserted and refuted";
            if (!sources.empty()) {
                detail += "; certificates:";
                for (const auto& s : sources) detail += " " + s;
            }
            throw ContradictoryVerdicts(detail);
        }
        slot = v;
        return true;
    }
    bool put_ss(Notion n, int v) { return put(ss, n, v, "semistability"); }
    bool put_st(Notion n, int v) { return put(st, n, v, "stability"); }

    void assert_status(Notion n, Status s) {
        switch (s) {
        case Status::stable: put_ss(n, 1); put_st(n, 1); break;
        case Status::strictly_semistable: put_ss(n, 1); put_st(n, 0); break;
        case Status::semistable: put_ss(n, 1); break;
        case Status::unstable: put_ss(n, 0); put_st(n, 0); break;
        case Status::unknown: break;
        }
    }

    Status status(Notion n) const {
        const int i = static_cast<int>(n);
        if (ss[i] == 0) return Status::unstable;
        if (ss[i] == 1) return st[i] == 1 ? Status::stable : (st[i] == 0 ? Status::strictly_semistable : Status::semistable);
        return Status::unknown;
    }

    int get(const std::array<int, 3>& a, Notion n) const { return a[static_cast<int>(n)]; }

    // a => b, together with not b => not a
    bool implies(std::array<int, 3>& a, Notion na, std::array<int, 3>& b, Notion nb, const char* what) {
        bool changed = false;
        if (get(a, na) == 1) changed |= put(b, nb, 1, what);
        if (get(b, nb) == 0) changed |= put(a, na, 0, what);
        return changed;
    }

    void close() {
        using N = Notion;
        bool changed = true;
        while (changed) {
            changed = false;
            for (N n : {N::linear, N::slope, N::cohomological}) changed |= implies(st, n, ss, n, "semistability");
            changed |= implies(st, N::cohomological, st, N::slope, "stability");
            changed |= implies(st, N::slope, st, N::linear, "stability");
            changed |= implies(ss, N::cohomological, ss, N::slope, "semistability");
            changed |= implies(ss, N::slope, ss, N::cohomological, "semistability");
            changed |= implies(ss, N::slope, ss, N::linear, "semistability");
            if (bridge) {
                changed |= implies(ss, N::linear, ss, N::slope, "semistability");
                changed |= implies(st, N::linear, st, N::slope, "stability");
            }
        }
    }
};

Knowledge knowledge_of(const VerdictSet& v) {
    Knowledge k;
    k.bridge = v.linear_slope_equivalence;
    for (const auto& c : v.certificates) k.sources.push_back(c.rule.id);
    for (Notion n : {Notion::linear, Notion::slope, Notion::cohomological}) k.assert_status(n, v.get(n));
    return k;
}

const std::vector<std::string> kFiringOrder = {"R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8"};

} // namespace

Certificate evaluate_rule(const std::string& id, const CurveInvariants& c, const SeriesInvariants& s) { return evaluate(id, c, s); }

bool replay(const Certificate& cert, const CurveInvariants& c, const SeriesInvariants& s) {
    if (cert.rule.id == "R9") return true;
    Certificate again = evaluate(cert.rule.id, c, s);
    if (!all_hold(again.checklist) || again.checklist.size() != cert.checklist.size()) return false;
    for (std::size_t i = 0; i < again.checklist.size(); ++i)
        if (again.checklist[i].relation != cert.checklist[i].relation || again.checklist[i].values != cert.checklist[i].values)
            return false;
    return true;
}

VerdictSet close_chain(VerdictSet v) {
    Knowledge k = knowledge_of(v);
    k.close();
    for (Notion n : {Notion::linear, Notion::slope, Notion::cohomological}) v.set(n, k.status(n));
    return v;
}

VerdictSet apply_rules(const CurveInvariants& c, const SeriesInvariants& s) {
    validate(c, s);
    VerdictSet out;
    out.slope = s.slope();
    Knowledge k;
    for (const auto& id : kFiringOrder) {
        Certificate cert = evaluate(id, c, s);
        auto failing = std::find_if(cert.checklist.begin(), cert.checklist.end(), [](const Check& x) { return !x.holds; });
        if (failing != cert.checklist.end()) {
            out.unfired.push_back({id, *failing});
            continue;
        }
        k.sources.push_back(id);
        for (const auto& contrib : cert.contributions) k.assert_status(contrib.notion, contrib.status);
        if (cert.linear_slope_equivalence) {
            k.bridge = true;
            out.linear_slope_equivalence = true;
        }
        out.certificates.push_back(std::move(cert));
    }

    // The literal strict inequality of case 3 against the reading with g/(dimV-3).
    if (s.dimV > 3) {
        Check literal = case3(c, s);
        Check alternative = lt("codim < h1 + g/(dimV-3)", R(s.codim()), R(s.h1) + R(c.g) / R(s.dimV - 3));
        if (!literal.holds && alternative.holds) {
            std::string detail = "case 3 evaluates " + literal.values + " (false); with g/(dimV-3) it reads " + alternative.values;
            Check standing = leq("d - 2(dimV-1) <= cliff", R(s.d - 2 * (s.dimV - 1)), R(c.cliff));
            if (!standing.holds) detail += "; standing hypothesis d - 2(dimV-1) <= cliff evaluates " + standing.values + " (false)";
            out.flags.push_back({"R6", "paper-example discrepancy", detail});
        }
    }

    k.close();
    for (Notion n : {Notion::linear, Notion::slope, Notion::cohomological}) out.set(n, k.status(n));
    if (!out.certificates.empty()) {
        Certificate chain;
        chain.rule = rule_info("R9");
        for (Notion n : {Notion::linear, Notion::slope, Notion::cohomological})
            if (out.get(n) != Status::unknown) chain.contributions.push_back({n, out.get(n)});
        out.certificates.push_back(std::move(chain));
    }
    return out;
}

PulledBack pullback_invariants(int b, const SeriesInvariants& s, const VerdictSet& v, int genus_up, int h0_up) {
    if (b < 2) throw InvalidInput("pullback degree must be at least 2");
    PulledBack out;
    SeriesInvariants& u = out.series;
    u.d = b * s.d;
    u.dimV = s.dimV;
    u.h0 = h0_up;
    u.h1 = h0_up - (u.d - genus_up + 1);
    if (u.h1 < 0 || h0_up < s.dimV) throw InvalidInput("Riemann–Roch violated");
    u.flags.complete = u.dimV == u.h0;
    u.flags.globally_generated = s.flags.globally_generated;

    VerdictSet& w = out.verdicts;
    w.slope = u.slope();
    w.set(Notion::linear, v.get(Notion::linear));
    const Status slope = v.get(Notion::slope);
    if (slope == Status::unstable) {
        w.set(Notion::slope, Status::unstable);
    } else if (v.get(Notion::cohomological) == Status::stable) {
        w.set(Notion::slope, Status::semistable);
    }
    return {u, close_chain(w)};
}

} // namespace dsb::criteria
