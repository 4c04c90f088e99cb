#include "dsb/exact/upoly.hpp"

#include "dsb/error.hpp"
#include "zpoly.hpp"

#include <sstream>

namespace dsb::exact {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

UPoly UPoly::monomial(const Rational& c, int k) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[i];
}

const Rational& UPoly::lead() const {
    if (c_.empty()) throw InternalError("leading coefficient of zero polynomial");
    return c_.back();
}

Rational UPoly::eval(const Rational& at) const {
    Rational r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * at + *it;
    return r;
}

UPoly UPoly::derivative() const {
    std::vector<Rational> v;
    for (int i = 1; i <= degree(); ++i) v.push_back(c_[i] * Rational(i));
    return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inverse());
}

UPoly UPoly::scaled(const Rational& k) const {
    if (k.is_zero()) return {};
    UPoly r = *this;
    for (auto& c : r.c_) c *= k;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        os << (c.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (i == 0 || a != 1) os << a.str() << (i > 0 ? "*" : "");
        if (i > 0) os << var << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw InvalidInput("division by zero");
    std::vector<Rational> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<Rational> q(a.degree() - db + 1);
    const Rational il = b.lead().inverse();
    for (int k = a.degree(); k >= db; --k) {
        if (r[k].is_zero()) continue;
        Rational c = r[k] * il;
        q[k - db] = c;
        for (int i = 0; i <= db; ++i) r[k - db + i] -= c * b.coeffs()[i];
    }
    r.resize(db);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

UPoly exact_quotient(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InternalError("inexact polynomial division");
    return q;
}

std::pair<Rational, std::vector<mpz_class>> primitive_integer(const UPoly& a) {
    if (a.is_zero()) return {Rational(0), {}};
    mpz_class l = 1;
    for (const auto& c : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    detail::ZPoly z;
    for (const auto& c : a.coeffs()) z.push_back(c.num() * (l / c.den()));
    detail::ZPoly p = detail::primitive(z);
    // a = (z / l) and z = g * p
    Rational content = Rational(z.back()) / Rational(p.back()) / Rational(l);
    return {content, p};
}

UPoly from_integer(const std::vector<mpz_class>& z) {
    std::vector<Rational> v;
    v.reserve(z.size());
    for (const auto& c : z) v.emplace_back(c);
    return UPoly(std::move(v));
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return UPoly(1);
    auto za = primitive_integer(a).second;
    auto zb = primitive_integer(b).second;
    return from_integer(detail::primitive_gcd(za, zb)).monic();
}

ExtGcd ext_gcd(const UPoly& a, const UPoly& b) {
    UPoly r0 = a, r1 = b, s0(1), s1, t0, t1(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UPoly s2 = s0 - q * s1;
        UPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {UPoly(), UPoly(), UPoly()};
    Rational il = r0.lead().inverse();
    return {r0.scaled(il), s0.scaled(il), t0.scaled(il)};
}

UPoly inverse_mod(const UPoly& a, const UPoly& m) {
    ExtGcd e = ext_gcd(a % m, m);
    if (e.g.degree() != 0) throw InvalidInput("polynomial not invertible modulo");
    return e.u % m;
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& a) {
    if (a.is_zero()) throw InvalidInput("squarefree decomposition of zero");
    std::vector<std::pair<UPoly, int>> out;
    if (a.is_constant()) return out;
    UPoly f = a.monic();
    UPoly fp = f.derivative();
    UPoly g = gcd(f, fp);
    UPoly b = exact_quotient(f, g);
    UPoly c = exact_quotient(fp.scaled(1), g);
    UPoly dd = c - b.derivative();
    for (int i = 1; !b.is_constant(); ++i) {
        UPoly h = gcd(b, dd);
        b = exact_quotient(b, h);
        c = exact_quotient(dd, h);
        dd = c - b.derivative();
        if (!h.is_constant()) out.emplace_back(h.monic(), i);
    }
    return out;
}

UPoly squarefree_part(const UPoly& a) {
    if (a.is_zero()) throw InvalidInput("squarefree part of zero");
    if (a.is_constant()) return UPoly(1);
    return exact_quotient(a, gcd(a, a.derivative())).monic();
}

bool is_squarefree(const UPoly& a) {
    if (a.is_zero()) return false;
    if (a.degree() <= 1) return true;
    auto z = primitive_integer(a).second;
    // A separable reduction of the same degree proves separability over Q.
    for (std::size_t k = 0; k < 3; ++k) {
        detail::Field F{detail::prime_table()[k]};
        auto m = detail::reduce(z, F);
        if (detail::deg(m) != detail::deg(z)) continue;
        if (detail::deg(detail::gcd(m, detail::derivative(m, F), F)) == 0) return true;
    }
    return gcd(a, a.derivative()).is_constant();
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const std::size_t n = xs.size();
    std::vector<Rational> dd = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    UPoly p;
    for (std::size_t k = n; k-- > 0;) p = p * UPoly(std::vector<Rational>{-xs[k], 1}) + UPoly(dd[k]);
    return p;
}

} // namespace dsb::exact
