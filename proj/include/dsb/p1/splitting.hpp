#pragma once

#include "dsb/exact/rational.hpp"
#include "dsb/p1/series.hpp"

#include <string>
#include <vector>

namespace dsb::p1 {

/// Multiset of positive twists (b_1 <= ... <= b_r): the kernel bundle is
/// the direct sum of O(-b_i).
class SplittingType {
public:
    explicit SplittingType(std::vector<int> twists);
    const std::vector<int>& twists() const { return twists_; }
    int rank() const { return static_cast<int>(twists_.size()); }
    int degree() const;   // sum of twists
    bool balanced() const { return twists_.back() - twists_.front() <= 1; }
    /// dim H^0 of the kernel bundle twisted by m: sum over b_i <= m of m - b_i + 1.
    int kernel_dim(int m) const;
    friend bool operator==(const SplittingType& a, const SplittingType& b) { return a.twists_ == b.twists_; }

private:
    std::vector<int> twists_;
};

SplittingType splitting_type(const LinearSeriesP1& v);
/// Recovers the twists from a kernel profile; throws InvalidInput("profile not realizable").
SplittingType splitting_from_profile(const GradedProfile& profile, int d, int r);

/// Slope of the kernel bundle, -d/r.
exact::Rational slope(const SplittingType& s);

enum class SlopeVerdict { stable, strictly_semistable, unstable };
enum class CohomologicalVerdict { stable, semistable_only, not_semistable };

SlopeVerdict split_slope_verdict(const SplittingType& s);
CohomologicalVerdict cohomological_verdict(const SplittingType& s);

std::string to_string(SlopeVerdict v);
std::string to_string(CohomologicalVerdict v);

} // namespace dsb::p1
