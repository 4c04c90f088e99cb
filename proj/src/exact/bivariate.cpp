#include "dsb/exact/bivariate.hpp"

#include "dsb/error.hpp"

#include <algorithm>
#include <sstream>

namespace dsb::exact {

BivariatePoly::BivariatePoly(const Rational& c) { add_term(c, 0, 0); }

BivariatePoly BivariatePoly::term(const Rational& c, int i, int j) {
    BivariatePoly p;
    p.add_term(c, i, j);
    return p;
}

BivariatePoly BivariatePoly::in_s(const UPoly& u) {
    BivariatePoly p;
    for (int i = 0; i <= u.degree(); ++i) p.add_term(u.coeff(i), i, 0);
    return p;
}

BivariatePoly BivariatePoly::in_t(const UPoly& u) { return in_s(u).swapped(); }

BivariatePoly BivariatePoly::from_t_coeffs(const std::vector<UPoly>& coeffs) {
    BivariatePoly p;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        for (int i = 0; i <= coeffs[j].degree(); ++i) p.add_term(coeffs[j].coeff(i), i, static_cast<int>(j));
    return p;
}

void BivariatePoly::add_term(const Rational& c, int i, int j) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(Key{i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool BivariatePoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

int BivariatePoly::deg_s() const {
    int d = -1;
    for (auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int BivariatePoly::deg_t() const {
    int d = -1;
    for (auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

int BivariatePoly::total_degree() const {
    int d = -1;
    for (auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

Rational BivariatePoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<UPoly> BivariatePoly::t_coeffs() const {
    const int dt = deg_t();
    std::vector<std::vector<Rational>> raw(std::max(0, dt + 1));
    for (auto& [k, c] : terms_) {
        auto& v = raw[k.second];
        if (static_cast<int>(v.size()) <= k.first) v.resize(k.first + 1);
        v[k.first] = c;
    }
    std::vector<UPoly> out;
    for (auto& v : raw) out.emplace_back(std::move(v));
    return out;
}

UPoly BivariatePoly::at_s(const Rational& s0) const {
    std::vector<UPoly> tc = t_coeffs();
    std::vector<Rational> v;
    for (auto& c : tc) v.push_back(c.eval(s0));
    return UPoly(std::move(v));
}

UPoly BivariatePoly::at_t(const Rational& t0) const { return swapped().at_s(t0); }

BivariatePoly BivariatePoly::swapped() const {
    BivariatePoly p;
    for (auto& [k, c] : terms_) p.terms_.emplace(Key{k.second, k.first}, c);
    return p;
}

BivariatePoly BivariatePoly::scaled(const Rational& k) const {
    if (k.is_zero()) return {};
    BivariatePoly p = *this;
    for (auto& [key, c] : p.terms_) c *= k;
    return p;
}

BivariatePoly BivariatePoly::normalized() const {
    if (is_zero()) return *this;
    auto lead = std::max_element(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.first.second, a.first.first) < std::make_pair(b.first.second, b.first.first);
    });
    return scaled(lead->second.inverse());
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
    for (auto& [k, c] : o.terms_) add_term(c, k.first, k.second);
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
    for (auto& [k, c] : o.terms_) add_term(-c, k.first, k.second);
    return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly p;
    for (auto& [ka, ca] : a.terms_)
        for (auto& [kb, cb] : b.terms_) p.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
    return p;
}

std::string BivariatePoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [i, j] = it->first;
        const Rational& c = it->second;
        Rational a = c.abs();
        os << (c.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        const bool constant = i == 0 && j == 0;
        if (constant || a != 1) os << a.str() << (constant ? "" : "*");
        if (i > 0) os << "s" << (i > 1 ? "^" + std::to_string(i) : "");
        if (i > 0 && j > 0) os << "*";
        if (j > 0) os << "t" << (j > 1 ? "^" + std::to_string(j) : "");
        first = false;
    }
    return os.str();
}

namespace {

using TPoly = std::vector<UPoly>;   // coefficients in Q[s] of t^0..t^n

void trim(TPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int deg(const TPoly& a) { return static_cast<int>(a.size()) - 1; }

// Long division in Q[s][t]; false if some leading division is inexact.
bool tdiv(TPoly r, const TPoly& b, TPoly& q) {
    trim(r);
    const int db = deg(b);
    q.assign(std::max(0, deg(r) - db + 1), UPoly());
    while (!r.empty() && deg(r) >= db) {
        const int shift = deg(r) - db;
        auto [c, rem] = divmod(r.back(), b.back());
        if (!rem.is_zero()) return false;
        q[shift] = c;
        for (int i = 0; i <= db; ++i) r[i + shift] -= c * b[i];
        trim(r);
    }
    trim(q);
    return r.empty();
}

TPoly prem(const TPoly& a, const TPoly& b) {
    TPoly r = a;
    trim(r);
    const int db = deg(b);
    while (!r.empty() && deg(r) >= db) {
        const int shift = deg(r) - db;
        UPoly lr = r.back();
        for (auto& c : r) c = c * b.back();
        for (int i = 0; i <= db; ++i) r[i + shift] -= lr * b[i];
        trim(r);
    }
    return r;
}

UPoly content(const TPoly& a) {
    UPoly g;
    for (auto& c : a) {
        g = gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g;
}

TPoly divide_coeffs(const TPoly& a, const UPoly& c) {
    TPoly r;
    for (auto& x : a) r.push_back(exact_quotient(x, c));
    return r;
}

UPoly upow(const UPoly& a, int e) {
    UPoly r(1);
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

// Subresultant PRS over Q[s]; returns the last nonzero remainder.
TPoly subresultant_last(TPoly a, TPoly b) {
    if (deg(a) < deg(b)) std::swap(a, b);
    UPoly g(1), h(1);
    for (;;) {
        const int delta = deg(a) - deg(b);
        TPoly r = prem(a, b);
        if (r.empty()) return b;
        if (deg(r) == 0) return r;
        UPoly div = g * upow(h, delta);
        a = std::move(b);
        b = divide_coeffs(r, div);
        g = a.back();
        if (delta > 0) h = exact_quotient(upow(g, delta), upow(h, delta - 1));
    }
}

} // namespace

bool divides(const BivariatePoly& b, const BivariatePoly& a, BivariatePoly* q) {
    if (b.is_zero()) return false;
    TPoly tq;
    if (!tdiv(a.t_coeffs(), b.t_coeffs(), tq)) return false;
    if (q) *q = BivariatePoly::from_t_coeffs(tq);
    return true;
}

BivariatePoly exact_quotient(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly q;
    if (!divides(b, a, &q)) throw InternalError("inexact bivariate division");
    return q;
}

BivariatePoly bivariate_gcd(const BivariatePoly& a, const BivariatePoly& b) {
    if (a.is_zero() && b.is_zero()) throw InvalidInput("undefined gcd");
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    TPoly ta = a.t_coeffs(), tb = b.t_coeffs();
    UPoly ca = content(ta), cb = content(tb);
    UPoly c = gcd(ca, cb);
    TPoly pa = divide_coeffs(ta, ca), pb = divide_coeffs(tb, cb);
    BivariatePoly g = BivariatePoly::in_s(c);
    if (deg(pa) == 0 || deg(pb) == 0) return g.normalized();
    TPoly last = subresultant_last(pa, pb);
    if (deg(last) == 0) return g.normalized();
    TPoly prim = divide_coeffs(last, content(last));
    return (g * BivariatePoly::from_t_coeffs(prim)).normalized();
}

} // namespace dsb::exact
