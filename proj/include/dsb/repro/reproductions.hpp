#pragma once

#include "dsb/criteria/engine.hpp"
#include "dsb/linstab/criteria.hpp"
#include "dsb/p1/splitting.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dsb::repro {

/// A plane series that is linearly stable while its dual span bundle is unstable.
struct CounterexampleReport {
    std::uint64_t seed = 0;
    int attempts = 0;
    p1::LinearSeriesP1 series;
    p1::SplittingType splitting;
    linstab::MultiplicityReport multiplicity;
    linstab::LinStabVerdict linear;
    p1::SlopeVerdict slope;
};

inline constexpr int kCounterexampleBudget = 1000;
inline constexpr std::uint64_t kStoredSeed = 5;

/// Samples plane series of odd degree d >= 5 with coefficients in [-5, 5]
/// from mt19937_64(seed) until one is certified. Throws InvalidInput for
/// bad degrees and CeilingExceeded when the budget runs out.
CounterexampleReport plane_counterexample(int d, std::uint64_t seed, int budget = kCounterexampleBudget);

struct FamilyReport {
    int k = 0;
    criteria::CurveInvariants curve;
    criteria::SeriesInvariants series;
    criteria::VerdictSet verdicts;
};

/// Invariants of the degree 3k-3 family with slope -3. Throws for k < 2.
FamilyReport slope3_family(int k);

struct Expected {
    std::optional<std::vector<int>> twists;
    std::optional<linstab::LinStatus> linear;
    std::optional<int> max_multiplicity;
    std::optional<exact::Rational> slope;
    std::optional<criteria::Status> slope_status;
    bool discrepancy_flag = false;
};

struct Fixture {
    std::string name;
    std::string description;
    std::optional<p1::LinearSeriesP1> series;   // plane maps are series with three forms
    std::optional<std::pair<criteria::CurveInvariants, criteria::SeriesInvariants>> invariants;
    Expected expected;
};

const std::vector<Fixture>& fixtures();
const Fixture& fixture(const std::string& name);

} // namespace dsb::repro
