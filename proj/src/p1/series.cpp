#include "dsb/p1/series.hpp"

#include "dsb/error.hpp"
#include "dsb/p1/splitting.hpp"

namespace dsb::p1 {

using exact::ExactMatrix;
using exact::Vector;

LinearSeriesP1::LinearSeriesP1(int d, std::vector<BinaryForm> basis) : d_(d), basis_(std::move(basis)) {
    if (d < 1) throw InvalidInput("series degree must be positive");
    if (basis_.size() < 2) throw InvalidInput("series needs at least two sections");
    for (const auto& f : basis_)
        if (f.degree() != d) throw InvalidInput("basis degree mismatch");
    if (static_cast<int>(basis_.size()) > d + 1) throw InvalidInput("dependent basis");
    std::vector<Vector> rows;
    for (const auto& f : basis_) rows.push_back(f.coeffs());
    if (exact::rank_of(rows) != basis_.size()) throw InvalidInput("dependent basis");
    if (exact::form_gcd(basis_).degree() != 0) throw InvalidInput("not a generating subspace");
}

LinearSeriesP1 LinearSeriesP1::complete(int d) {
    std::vector<BinaryForm> b;
    for (int i = 0; i <= d; ++i) b.push_back(BinaryForm::monomial(d, i));
    return LinearSeriesP1(d, std::move(b));
}

BinaryForm LinearSeriesP1::combine(const Vector& coords) const {
    BinaryForm f = BinaryForm::zero(d_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (!coords[i].is_zero()) f += basis_[i].scaled(coords[i]);
    return f;
}

std::vector<Vector> LinearSeriesP1::coordinates_divisible_by(const BinaryForm& D) const {
    const int e = D.y_valuation();
    if (e > D.degree()) throw InvalidInput("zero divisor form");
    const exact::UPoly rest = D.dehomogenize();
    // Condition rows: leading e coefficients vanish and f(s,1) = 0 mod rest(s).
    const int nconds = e + std::max(0, rest.degree());
    std::vector<Vector> rows(nconds, Vector(basis_.size()));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        for (int k = 0; k < e; ++k) rows[k][i] = basis_[i].coeff(k);
        if (rest.degree() > 0) {
            exact::UPoly r = basis_[i].dehomogenize() % rest;
            for (int k = 0; k < rest.degree(); ++k) rows[e + k][i] = r.coeff(k);
        }
    }
    return exact::kernel_of_rows(rows, basis_.size());
}

ExactMatrix multiplication_matrix(const LinearSeriesP1& v, int m) {
    const int d = v.degree();
    ExactMatrix M(d + m + 1, v.basis().size() * (m + 1));
    for (std::size_t i = 0; i < v.basis().size(); ++i)
        for (int j = 0; j <= m; ++j)
            for (int k = 0; k <= d; ++k) M.at(k + j, i * (m + 1) + j) = v.basis()[i].coeff(k);
    return M;
}

GradedProfile graded_kernel_profile(const LinearSeriesP1& v) {
    GradedProfile p;
    for (int m = 0; m <= v.degree(); ++m) {
        ExactMatrix M = multiplication_matrix(v, m);
        p.kernel_dims.push_back(static_cast<int>(M.cols() - exact::rank(M)));
    }
    return p;
}

namespace {

Vector syzygy_vector(const Syzygy& s, int m) {
    // Components times monomials to degree m, flattened like the matrix columns.
    Vector v(s.components.size() * (m + 1));
    for (std::size_t i = 0; i < s.components.size(); ++i)
        for (int k = 0; k <= s.degree; ++k) v[i * (m + 1) + k] = s.components[i].coeff(k);
    return v;
}

Syzygy times_monomial(const Syzygy& s, int e, int j) {
    Syzygy out{s.degree + e, {}};
    for (const auto& c : s.components) out.components.push_back(c * BinaryForm::monomial(e, j));
    return out;
}

Syzygy from_vector(const Vector& v, std::size_t n, int m) {
    Syzygy s{m, {}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> c(v.begin() + i * (m + 1), v.begin() + (i + 1) * (m + 1));
        s.components.emplace_back(m, c);
    }
    return s;
}

} // namespace

std::vector<Syzygy> syzygy_module_basis(const LinearSeriesP1& v) {
    const SplittingType st = splitting_type(v);
    const std::size_t n = v.basis().size();
    std::vector<Syzygy> gens;
    std::size_t idx = 0;
    while (idx < st.twists().size()) {
        const int m = st.twists()[idx];
        std::size_t need = 0;
        while (idx + need < st.twists().size() && st.twists()[idx + need] == m) ++need;
        std::vector<Vector> span;
        for (const auto& g : gens)
            for (int j = 0; j <= m - g.degree; ++j) span.push_back(syzygy_vector(times_monomial(g, m - g.degree, j), m));
        std::size_t base_rank = exact::rank_of(span);
        for (const auto& k : exact::kernel_basis(multiplication_matrix(v, m))) {
            if (need == 0) break;
            span.push_back(k);
            std::size_t rk = exact::rank_of(span);
            if (rk > base_rank) {
                base_rank = rk;
                gens.push_back(from_vector(k, n, m));
                --need;
            } else {
                span.pop_back();
            }
        }
        if (need != 0) throw InternalError("syzygy generators inconsistent with splitting type");
        while (idx < st.twists().size() && st.twists()[idx] == m) ++idx;
    }
    return gens;
}

} // namespace dsb::p1
