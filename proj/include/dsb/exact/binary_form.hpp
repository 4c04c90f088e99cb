#pragma once

#include "dsb/exact/rational.hpp"
#include "dsb/exact/upoly.hpp"

#include <string>
#include <vector>

namespace dsb::exact {

/// Homogeneous polynomial of degree d in x, y. Coefficient i multiplies
/// x^(d-i) y^i, so the vector always has d + 1 entries.
class BinaryForm {
public:
    BinaryForm() : BinaryForm(0, {Rational(0)}) {}
    BinaryForm(int degree, std::vector<Rational> coeffs);
    static BinaryForm zero(int degree);
    /// c * x^(d-i) y^i
    static BinaryForm monomial(int degree, int i, const Rational& c = 1);
    /// The linear form b x - a y, vanishing at (a : b).
    static BinaryForm vanishing_at(const Rational& a, const Rational& b);
    /// Inverse of dehomogenize: y^(degree - deg u) * u(x/y) y^deg u.
    static BinaryForm homogenize(const UPoly& u, int degree);

    int degree() const { return degree_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(int i) const { return coeffs_.at(i); }
    bool is_zero() const;
    /// Largest v with y^v dividing the form (degree + 1 for zero).
    int y_valuation() const;
    /// f(s, 1) as a polynomial in s.
    UPoly dehomogenize() const;

    Rational eval(const Rational& x, const Rational& y) const;
    /// Scaled so that the first nonzero coefficient is 1.
    BinaryForm normalized() const;
    BinaryForm scaled(const Rational& k) const;
    /// f(a(x, y), c(x, y)) for forms a, c of a common degree.
    BinaryForm compose(const BinaryForm& a, const BinaryForm& c) const;

    BinaryForm& operator+=(const BinaryForm& o);
    BinaryForm& operator-=(const BinaryForm& o);
    friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
    friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }
    /// Lexicographic order on (degree, coefficients), used for canonical sorting.
    friend bool operator<(const BinaryForm& a, const BinaryForm& b);

    std::string str() const;

private:
    int degree_;
    std::vector<Rational> coeffs_;
};

/// True iff g divides f; on success q receives f / g.
bool divides(const BinaryForm& g, const BinaryForm& f, BinaryForm* q = nullptr);
/// Exact quotient; throws InternalError when g does not divide f.
BinaryForm exact_quotient(const BinaryForm& f, const BinaryForm& g);

/// gcd normalized so its first nonzero coefficient is 1.
/// Throws InvalidInput("undefined gcd") when both inputs are zero.
BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g);
BinaryForm form_gcd(const std::vector<BinaryForm>& forms);

struct FormFactor {
    BinaryForm form;   // normalized, irreducible over Q
    int multiplicity;
    friend bool operator==(const FormFactor& a, const FormFactor& b) {
        return a.form == b.form && a.multiplicity == b.multiplicity;
    }
};

/// Irreducible factorization up to a constant, sorted canonically.
/// Throws InvalidInput for the zero form.
std::vector<FormFactor> squarefree_and_factor(const BinaryForm& f);
/// Product of distinct irreducible factors, normalized.
BinaryForm radical(const BinaryForm& f);

} // namespace dsb::exact
