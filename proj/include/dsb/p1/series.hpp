#pragma once

#include "dsb/exact/binary_form.hpp"
#include "dsb/exact/matrix.hpp"

#include <vector>

namespace dsb::p1 {

using exact::BinaryForm;
using exact::Rational;

/// A base-point-free linear series on P^1: r + 1 independent binary forms of
/// degree d without common factor, with 1 <= r <= d.
class LinearSeriesP1 {
public:
    /// Throws InvalidInput("dependent basis") or
    /// InvalidInput("not a generating subspace") on bad input.
    LinearSeriesP1(int d, std::vector<BinaryForm> basis);

    /// H^0(O(d)) with the monomial basis.
    static LinearSeriesP1 complete(int d);

    int degree() const { return d_; }
    int rank() const { return static_cast<int>(basis_.size()) - 1; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<BinaryForm>& basis() const { return basis_; }

    /// Forms of V vanishing on D (coordinates with respect to the basis).
    std::vector<exact::Vector> coordinates_divisible_by(const BinaryForm& D) const;
    BinaryForm combine(const exact::Vector& coords) const;

private:
    int d_;
    std::vector<BinaryForm> basis_;
};

/// Matrix of V (x) S_m -> S_(d+m); column i*(m+1)+j holds f_i x^(m-j) y^j.
exact::ExactMatrix multiplication_matrix(const LinearSeriesP1& v, int m);

struct GradedProfile {
    std::vector<int> kernel_dims;   // index m = 0..d
};

GradedProfile graded_kernel_profile(const LinearSeriesP1& v);

/// A relation sum_i components[i] * f_i = 0 with components of one degree.
struct Syzygy {
    int degree;
    std::vector<BinaryForm> components;
};

/// Generators of the syzygy module of V, one per twist, in ascending degree.
std::vector<Syzygy> syzygy_module_basis(const LinearSeriesP1& v);

} // namespace dsb::p1
