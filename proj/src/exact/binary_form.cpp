#include "dsb/exact/binary_form.hpp"

#include "dsb/error.hpp"
#include "dsb/exact/factor.hpp"

#include <algorithm>
#include <sstream>

namespace dsb::exact {

BinaryForm::BinaryForm(int degree, std::vector<Rational> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 0) throw InvalidInput("negative form degree");
    if (static_cast<int>(coeffs_.size()) != degree + 1) throw InvalidInput("form coefficient count mismatch");
}

BinaryForm BinaryForm::zero(int degree) { return BinaryForm(degree, std::vector<Rational>(degree + 1)); }

BinaryForm BinaryForm::monomial(int degree, int i, const Rational& c) {
    BinaryForm f = zero(degree);
    f.coeffs_.at(i) = c;
    return f;
}

BinaryForm BinaryForm::vanishing_at(const Rational& a, const Rational& b) {
    if (a.is_zero() && b.is_zero()) throw InvalidInput("invalid projective point");
    return BinaryForm(1, {b, -a});
}

BinaryForm BinaryForm::homogenize(const UPoly& u, int degree) {
    if (u.degree() > degree) throw InternalError("homogenize: degree too small");
    BinaryForm f = zero(degree);
    for (int i = 0; i <= degree; ++i) f.coeffs_[i] = u.coeff(degree - i);
    return f;
}

bool BinaryForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

int BinaryForm::y_valuation() const {
    int v = 0;
    while (v <= degree_ && coeffs_[v].is_zero()) ++v;
    return v;
}

UPoly BinaryForm::dehomogenize() const {
    std::vector<Rational> v(degree_ + 1);
    for (int i = 0; i <= degree_; ++i) v[degree_ - i] = coeffs_[i];
    return UPoly(std::move(v));
}

Rational BinaryForm::eval(const Rational& x, const Rational& y) const {
    // Horner in the ratio, carried homogeneously.
    Rational r;
    Rational ypow = 1;
    std::vector<Rational> xpow(degree_ + 1, Rational(1));
    for (int i = 1; i <= degree_; ++i) xpow[i] = xpow[i - 1] * x;
    for (int i = 0; i <= degree_; ++i) {
        r += coeffs_[i] * xpow[degree_ - i] * ypow;
        ypow *= y;
    }
    return r;
}

BinaryForm BinaryForm::normalized() const {
    const int v = y_valuation();
    if (v > degree_) return *this;
    return scaled(coeffs_[v].inverse());
}

BinaryForm BinaryForm::scaled(const Rational& k) const {
    BinaryForm f = *this;
    for (auto& c : f.coeffs_) c *= k;
    return f;
}

BinaryForm BinaryForm::compose(const BinaryForm& a, const BinaryForm& c) const {
    if (a.degree() != c.degree()) throw InvalidInput("compose: component degree mismatch");
    const int b = a.degree();
    std::vector<BinaryForm> apow{BinaryForm(0, {1})}, cpow{BinaryForm(0, {1})};
    for (int i = 1; i <= degree_; ++i) {
        apow.push_back(apow.back() * a);
        cpow.push_back(cpow.back() * c);
    }
    BinaryForm out = zero(degree_ * b);
    for (int i = 0; i <= degree_; ++i)
        if (!coeffs_[i].is_zero()) out += (apow[degree_ - i] * cpow[i]).scaled(coeffs_[i]);
    return out;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
    if (o.degree_ != degree_) throw InvalidInput("form degree mismatch");
    for (int i = 0; i <= degree_; ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& o) {
    if (o.degree_ != degree_) throw InvalidInput("form degree mismatch");
    for (int i = 0; i <= degree_; ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm r = BinaryForm::zero(a.degree_ + b.degree_);
    for (int i = 0; i <= a.degree_; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (int j = 0; j <= b.degree_; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
}

bool operator<(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end());
}

std::string BinaryForm::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree_; ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const int ex = degree_ - i, ey = i;
        Rational a = c.abs();
        os << (c.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        const bool constant = ex == 0 && ey == 0;
        if (constant || a != 1) os << a.str() << (constant ? "" : "*");
        if (ex > 0) os << "x" << (ex > 1 ? "^" + std::to_string(ex) : "");
        if (ex > 0 && ey > 0) os << "*";
        if (ey > 0) os << "y" << (ey > 1 ? "^" + std::to_string(ey) : "");
        first = false;
    }
    return os.str();
}

bool divides(const BinaryForm& g, const BinaryForm& f, BinaryForm* q) {
    if (g.is_zero()) return false;
    if (f.is_zero()) {
        if (q) *q = BinaryForm::zero(std::max(0, f.degree() - g.degree()));
        return f.degree() >= g.degree();
    }
    if (g.degree() > f.degree()) return false;
    const int vg = g.y_valuation(), vf = f.y_valuation();
    if (vg > vf) return false;
    auto [quo, rem] = divmod(f.dehomogenize(), g.dehomogenize());
    if (!rem.is_zero()) return false;
    if (q) *q = BinaryForm::homogenize(quo, f.degree() - g.degree());
    return true;
}

BinaryForm exact_quotient(const BinaryForm& f, const BinaryForm& g) {
    BinaryForm q;
    if (!divides(g, f, &q)) throw InternalError("inexact form division");
    return q;
}

BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g) {
    const bool fz = f.is_zero(), gz = g.is_zero();
    if (fz && gz) throw InvalidInput("undefined gcd");
    if (fz) return g.normalized();
    if (gz) return f.normalized();
    const int v = std::min(f.y_valuation(), g.y_valuation());
    UPoly u = gcd(f.dehomogenize(), g.dehomogenize());
    return BinaryForm::homogenize(u, u.degree() + v).normalized();
}

BinaryForm form_gcd(const std::vector<BinaryForm>& forms) {
    if (forms.empty()) throw InvalidInput("undefined gcd");
    BinaryForm g = forms.front();
    bool seen_nonzero = !g.is_zero();
    for (std::size_t i = 1; i < forms.size(); ++i) {
        if (forms[i].is_zero()) continue;
        g = seen_nonzero ? form_gcd(g, forms[i]) : forms[i].normalized();
        seen_nonzero = true;
        if (g.degree() == 0) break;
    }
    if (!seen_nonzero) throw InvalidInput("undefined gcd");
    return g.normalized();
}

std::vector<FormFactor> squarefree_and_factor(const BinaryForm& f) {
    if (f.is_zero()) throw InvalidInput("factorization of zero form");
    std::vector<FormFactor> out;
    const int v = f.y_valuation();
    if (v > 0) out.push_back({BinaryForm(1, {0, 1}), v});
    UPoly u = f.dehomogenize();
    if (!u.is_constant())
        for (auto& fac : factor(u)) out.push_back({BinaryForm::homogenize(fac.poly, fac.poly.degree()), fac.multiplicity});
    std::sort(out.begin(), out.end(), [](const FormFactor& a, const FormFactor& b) {
        if (a.form != b.form) return a.form < b.form;
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

BinaryForm radical(const BinaryForm& f) {
    BinaryForm r(0, {1});
    for (auto& fac : squarefree_and_factor(f)) r = r * fac.form;
    return r.normalized();
}

} // namespace dsb::exact
