#pragma once

#include "dsb/criteria/invariants.hpp"
#include "dsb/error.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace dsb::criteria {

enum class Notion { linear, slope, cohomological };
enum class Status { stable, strictly_semistable, semistable, unstable, unknown };

std::string to_string(Notion n);
std::string to_string(Status s);
Status status_from_string(const std::string& s);

/// One evaluated hypothesis of a rule.
struct Check {
    std::string relation;   // e.g. "d - 2(h0-1) <= cliff"
    std::string values;     // e.g. "0 <= 1"
    bool holds = false;
};

struct Contribution {
    Notion notion;
    Status status;
};

struct RuleInfo {
    std::string id;
    std::string cite;
    std::string quote;
};

const std::vector<RuleInfo>& rule_catalog();
const RuleInfo& rule_info(const std::string& id);

struct Certificate {
    RuleInfo rule;
    std::vector<Contribution> contributions;
    bool linear_slope_equivalence = false;
    std::vector<Check> checklist;
};

struct UnfiredRule {
    std::string rule;
    Check first_failing;
};

struct Flag {
    std::string rule;
    std::string kind;
    std::string detail;
};

struct VerdictSet {
    std::array<Status, 3> status{Status::unknown, Status::unknown, Status::unknown};
    bool linear_slope_equivalence = false;
    std::vector<Certificate> certificates;
    std::vector<UnfiredRule> unfired;
    std::vector<Flag> flags;
    std::optional<exact::Rational> slope;

    Status get(Notion n) const { return status[static_cast<int>(n)]; }
    void set(Notion n, Status s) { status[static_cast<int>(n)] = s; }
};

/// Raised by close_chain; `what()` is "contradictory verdicts".
class ContradictoryVerdicts : public InvalidInput {
public:
    explicit ContradictoryVerdicts(std::string detail)
        : InvalidInput("contradictory verdicts"), detail_(std::move(detail)) {}
    const std::string& detail() const { return detail_; }

private:
    std::string detail_;
};

/// Re-evaluates the hypotheses of one rule against the inputs.
Certificate evaluate_rule(const std::string& id, const CurveInvariants& c, const SeriesInvariants& s);

/// True when the certificate's checklist re-evaluates identically and all true.
bool replay(const Certificate& cert, const CurveInvariants& c, const SeriesInvariants& s);

/// Validates, fires every applicable rule R1..R8, then closes under R9.
VerdictSet apply_rules(const CurveInvariants& c, const SeriesInvariants& s);

/// Implication closure; idempotent. Throws ContradictoryVerdicts.
VerdictSet close_chain(VerdictSet v);

/// Series data after composing with a finite map of degree b, with the
/// genus and h0 of the cover supplied by the caller.
struct PulledBack {
    SeriesInvariants series;
    VerdictSet verdicts;
};
PulledBack pullback_invariants(int b, const SeriesInvariants& s, const VerdictSet& v, int genus_up, int h0_up);

} // namespace dsb::criteria
