#include "dsb/p1/splitting.hpp"

#include "dsb/error.hpp"

#include <algorithm>
#include <numeric>

namespace dsb::p1 {

SplittingType::SplittingType(std::vector<int> twists) : twists_(std::move(twists)) {
    if (twists_.empty()) throw InvalidInput("empty splitting type");
    std::sort(twists_.begin(), twists_.end());
    if (twists_.front() < 1) throw InvalidInput("twists must be positive");
}

int SplittingType::degree() const { return std::accumulate(twists_.begin(), twists_.end(), 0); }

int SplittingType::kernel_dim(int m) const {
    int h = 0;
    for (int b : twists_)
        if (b <= m) h += m - b + 1;
    return h;
}

SplittingType splitting_from_profile(const GradedProfile& profile, int d, int r) {
    const auto& h = profile.kernel_dims;
    auto H = [&](int k) { return k < 0 ? 0 : h.at(k); };
    std::vector<int> twists;
    for (int k = 0; k < static_cast<int>(h.size()); ++k) {
        const int count = H(k) - 2 * H(k - 1) + H(k - 2);
        if (count < 0) throw InvalidInput("profile not realizable");
        twists.insert(twists.end(), count, k);
    }
    if (static_cast<int>(twists.size()) != r || twists.empty()) throw InvalidInput("profile not realizable");
    SplittingType st(twists);
    if (st.degree() != d) throw InvalidInput("profile not realizable");
    for (int m = 0; m < static_cast<int>(h.size()); ++m)
        if (st.kernel_dim(m) != h[m]) throw InvalidInput("profile not realizable");
    return st;
}

SplittingType splitting_type(const LinearSeriesP1& v) {
    return splitting_from_profile(graded_kernel_profile(v), v.degree(), v.rank());
}

exact::Rational slope(const SplittingType& s) { return exact::Rational(-s.degree()) / exact::Rational(s.rank()); }

SlopeVerdict split_slope_verdict(const SplittingType& s) {
    if (s.rank() == 1) return SlopeVerdict::stable;
    if (s.twists().front() == s.twists().back()) return SlopeVerdict::strictly_semistable;
    return SlopeVerdict::unstable;
}

CohomologicalVerdict cohomological_verdict(const SplittingType& s) {
    // Lambda^t M (-a) is the sum over t-subsets S of O(-b_S - a); it has a
    // section iff a <= -min b_S, and min b_S is the sum of the t smallest twists.
    const int r = s.rank();
    const exact::Rational mu = slope(s);
    bool stable = true, semistable = true;
    int smallest = 0;
    for (int t = 1; t < r; ++t) {
        smallest += s.twists()[t - 1];
        const exact::Rational tmu = exact::Rational(t) * mu;
        const mpz_class first_stable_a = tmu.ceil();
        const mpz_class first_semistable_a = tmu.floor() + 1;
        if (first_stable_a <= -smallest) stable = false;
        if (first_semistable_a <= -smallest) semistable = false;
    }
    if (stable) return CohomologicalVerdict::stable;
    return semistable ? CohomologicalVerdict::semistable_only : CohomologicalVerdict::not_semistable;
}

std::string to_string(SlopeVerdict v) {
    switch (v) {
    case SlopeVerdict::stable: return "stable";
    case SlopeVerdict::strictly_semistable: return "strictly_semistable";
    case SlopeVerdict::unstable: return "unstable";
    }
    return "unknown";
}

std::string to_string(CohomologicalVerdict v) {
    switch (v) {
    case CohomologicalVerdict::stable: return "cohomologically_stable";
    case CohomologicalVerdict::semistable_only: return "cohomologically_semistable_only";
    case CohomologicalVerdict::not_semistable: return "not_cohomologically_semistable";
    }
    return "unknown";
}

} // namespace dsb::p1
