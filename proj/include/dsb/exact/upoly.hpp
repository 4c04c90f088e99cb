#pragma once

#include "dsb/exact/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dsb::exact {

/// Dense univariate polynomial over Q. Coefficient i multiplies s^i; the
/// vector never carries trailing zeros, so the zero polynomial is empty.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    UPoly(const Rational& c);
    static UPoly monomial(const Rational& c, int k);
    static UPoly x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    const Rational& lead() const;

    Rational eval(const Rational& at) const;
    UPoly derivative() const;
    UPoly monic() const;
    UPoly scaled(const Rational& k) const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly operator-() const { return scaled(-1); }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    std::string str(const std::string& var = "s") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder; throws InvalidInput on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);
/// Exact quotient; throws InternalError if b does not divide a.
UPoly exact_quotient(const UPoly& a, const UPoly& b);

/// Monic gcd. gcd(0, 0) is 0.
UPoly gcd(const UPoly& a, const UPoly& b);
/// Returns (g, u, v) with u a + v b = g monic.
struct ExtGcd { UPoly g, u, v; };
ExtGcd ext_gcd(const UPoly& a, const UPoly& b);

/// Inverse of a modulo m; throws InvalidInput if not invertible.
UPoly inverse_mod(const UPoly& a, const UPoly& m);

/// Yun decomposition: monic squarefree pairwise coprime parts with
/// multiplicities, so that a = lc(a) * prod part^mult.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& a);
UPoly squarefree_part(const UPoly& a);
bool is_squarefree(const UPoly& a);

/// Integer primitive form: a = content * prim with prim in Z[s], positive lead.
std::pair<Rational, std::vector<mpz_class>> primitive_integer(const UPoly& a);
UPoly from_integer(const std::vector<mpz_class>& z);

/// Newton interpolation through (xs[i], ys[i]) with distinct xs.
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

} // namespace dsb::exact
