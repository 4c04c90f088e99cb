#pragma once

#include "dsb/exact/rational.hpp"
#include "dsb/exact/upoly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dsb::exact {

/// Sparse polynomial in s, t over Q. Keys are exponent pairs (i, j) for
/// s^i t^j; zero coefficients are never stored.
class BivariatePoly {
public:
    using Key = std::pair<int, int>;

    BivariatePoly() = default;
    BivariatePoly(const Rational& c);
    static BivariatePoly term(const Rational& c, int i, int j);
    static BivariatePoly s() { return term(1, 1, 0); }
    static BivariatePoly t() { return term(1, 0, 1); }
    /// u(s), respectively u(t).
    static BivariatePoly in_s(const UPoly& u);
    static BivariatePoly in_t(const UPoly& u);
    /// sum_j coeffs[j](s) t^j
    static BivariatePoly from_t_coeffs(const std::vector<UPoly>& coeffs);

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int deg_s() const;
    int deg_t() const;
    int total_degree() const;
    Rational coeff(int i, int j) const;

    /// Coefficients in Q[s] of t^0 .. t^deg_t.
    std::vector<UPoly> t_coeffs() const;
    UPoly at_s(const Rational& s0) const;   // polynomial in t
    UPoly at_t(const Rational& t0) const;   // polynomial in s
    BivariatePoly swapped() const;
    BivariatePoly scaled(const Rational& k) const;
    /// Scaled so the coefficient of the largest key (lex in (j, i)) is 1.
    BivariatePoly normalized() const;

    BivariatePoly& operator+=(const BivariatePoly& o);
    BivariatePoly& operator-=(const BivariatePoly& o);
    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BivariatePoly& a, const BivariatePoly& b) { return !(a == b); }

    std::string str() const;

private:
    void add_term(const Rational& c, int i, int j);
    std::map<Key, Rational> terms_;
};

/// True iff b divides a; on success q receives a / b.
bool divides(const BivariatePoly& b, const BivariatePoly& a, BivariatePoly* q = nullptr);
BivariatePoly exact_quotient(const BivariatePoly& a, const BivariatePoly& b);

/// gcd up to a constant, normalized. Both zero throws InvalidInput("undefined gcd").
BivariatePoly bivariate_gcd(const BivariatePoly& a, const BivariatePoly& b);

} // namespace dsb::exact
