#include "dsb/exact/matrix.hpp"

#include "dsb/error.hpp"

#include <gmpxx.h>

namespace dsb::exact {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) throw InvalidInput("matrix dimensions must be positive");
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) throw InvalidInput("matrix dimensions must be positive");
    ExactMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw InvalidInput("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vector ExactMatrix::row(std::size_t i) const {
    return Vector(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
}

Vector ExactMatrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw InvalidInput("vector length mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

namespace {

struct Echelon {
    std::vector<std::vector<mpz_class>> a;   // integer rows after elimination
    std::vector<std::size_t> pivot_cols;     // pivot column of row k
    int swaps = 0;
    mpz_class scale = 1;                     // product of row scalings
};

// Fraction-free (Bareiss) forward elimination on integer-scaled rows.
Echelon eliminate(const ExactMatrix& m) {
    Echelon e;
    const std::size_t R = m.rows(), C = m.cols();
    e.a.assign(R, std::vector<mpz_class>(C));
    for (std::size_t i = 0; i < R; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < C; ++j) {
            mpz_class dn = m.at(i, j).den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), dn.get_mpz_t());
        }
        e.scale *= l;
        for (std::size_t j = 0; j < C; ++j) e.a[i][j] = m.at(i, j).num() * (l / m.at(i, j).den());
    }
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && e.a[p][c] == 0) ++p;
        if (p == R) continue;
        if (p != r) {
            std::swap(e.a[p], e.a[r]);
            ++e.swaps;
        }
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j) {
                e.a[i][j] = e.a[r][c] * e.a[i][j] - e.a[i][c] * e.a[r][j];
                mpz_divexact(e.a[i][j].get_mpz_t(), e.a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            e.a[i][c] = 0;
        }
        prev = e.a[r][c];
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

} // namespace

std::size_t rank(const ExactMatrix& m) { return eliminate(m).pivot_cols.size(); }

std::vector<Vector> kernel_basis(const ExactMatrix& m) {
    Echelon e = eliminate(m);
    const std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        Vector x(C);
        x[f] = 1;
        for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
            const std::size_t pc = e.pivot_cols[k];
            Rational acc;
            for (std::size_t j = pc + 1; j < C; ++j)
                if (e.a[k][j] != 0 && !x[j].is_zero()) acc += Rational(e.a[k][j]) * x[j];
            x[pc] = -acc / Rational(e.a[k][pc]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

Rational determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidInput("determinant of non-square matrix");
    Echelon e = eliminate(m);
    if (e.pivot_cols.size() < m.rows()) return 0;
    Rational d = Rational(e.a[m.rows() - 1][m.cols() - 1]) / Rational(e.scale);
    return (e.swaps % 2) ? -d : d;
}

std::vector<Vector> kernel_of_rows(const std::vector<Vector>& rows, std::size_t cols) {
    if (rows.empty()) {
        std::vector<Vector> id;
        for (std::size_t i = 0; i < cols; ++i) {
            Vector v(cols);
            v[i] = 1;
            id.push_back(std::move(v));
        }
        return id;
    }
    return kernel_basis(ExactMatrix::from_rows(rows));
}

std::size_t rank_of(const std::vector<Vector>& vectors) {
    if (vectors.empty() || vectors.front().empty()) return 0;
    return rank(ExactMatrix::from_rows(vectors));
}

} // namespace dsb::exact
