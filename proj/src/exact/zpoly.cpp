#include "zpoly.hpp"

#include "dsb/error.hpp"

#include <algorithm>

namespace dsb::exact::detail {

void trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

mpz_class content(const ZPoly& a) {
    mpz_class g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly primitive(const ZPoly& a) {
    ZPoly r = a;
    trim(r);
    if (r.empty()) return r;
    mpz_class g = content(r);
    if (r.back() < 0) g = -g;
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

ZPoly derivative(const ZPoly& a) {
    ZPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<unsigned long>(i));
    trim(r);
    return r;
}

ZPoly prem(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    trim(r);
    const int db = deg(b);
    const mpz_class& lb = b.back();
    while (deg(r) >= db) {
        const int shift = deg(r) - db;
        mpz_class lr = r.back();
        for (auto& c : r) c *= lb;
        for (int i = 0; i <= db; ++i) r[i + shift] -= lr * b[i];
        trim(r);
    }
    return r;
}

bool exact_div(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    ZPoly r = a;
    trim(r);
    const int db = deg(b);
    if (db < 0) throw InternalError("division by zero polynomial");
    if (deg(r) < db) {
        q.clear();
        return r.empty();
    }
    q.assign(deg(r) - db + 1, 0);
    const mpz_class& lb = b.back();
    while (!r.empty() && deg(r) >= db) {
        const int shift = deg(r) - db;
        if (!mpz_divisible_p(r.back().get_mpz_t(), lb.get_mpz_t())) return false;
        mpz_class c = r.back() / lb;
        q[shift] = c;
        for (int i = 0; i <= db; ++i) r[i + shift] -= c * b[i];
        trim(r);
    }
    trim(q);
    return r.empty();
}

ZPoly primitive_gcd(ZPoly a, ZPoly b) {
    a = primitive(a);
    b = primitive(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty()) {
        if (deg(b) == 0) return ZPoly{1};
        ZPoly r = primitive(prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

ModPoly reduce(const ZPoly& a, const Field& F) {
    ModPoly r(a.size());
    mpz_class t;
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_fdiv_r_ui(t.get_mpz_t(), a[i].get_mpz_t(), F.p);
        r[i] = t.get_ui();
    }
    trim(r);
    return r;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, const Field& F) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % F.p;
    }
    trim(r);
    return r;
}

ModPoly sub(const ModPoly& a, const ModPoly& b, const Field& F) {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    trim(r);
    return r;
}

namespace {

void divide(const ModPoly& a, const ModPoly& b, const Field& F, ModPoly* q, ModPoly& r) {
    if (b.empty()) throw InternalError("modular division by zero");
    r = a;
    trim(r);
    const int db = deg(b);
    const std::uint64_t il = F.inv(b.back());
    if (q) q->assign(std::max(0, deg(r) - db + 1), 0);
    while (!r.empty() && deg(r) >= db) {
        const int shift = deg(r) - db;
        const std::uint64_t c = F.mul(r.back(), il);
        if (q) (*q)[shift] = c;
        for (int i = 0; i <= db; ++i) r[i + shift] = F.sub(r[i + shift], F.mul(c, b[i]));
        trim(r);
    }
    if (q) trim(*q);
}

} // namespace

ModPoly rem(const ModPoly& a, const ModPoly& b, const Field& F) {
    ModPoly r;
    divide(a, b, F, nullptr, r);
    return r;
}

ModPoly quot(const ModPoly& a, const ModPoly& b, const Field& F) {
    ModPoly q, r;
    divide(a, b, F, &q, r);
    return q;
}

ModPoly make_monic(const ModPoly& a, const Field& F) {
    if (a.empty()) return a;
    const std::uint64_t il = F.inv(a.back());
    ModPoly r = a;
    for (auto& c : r) c = F.mul(c, il);
    return r;
}

ModPoly gcd(ModPoly a, ModPoly b, const Field& F) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        ModPoly r = rem(a, b, F);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, F);
}

ModPoly derivative(const ModPoly& a, const Field& F) {
    ModPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(F.mul(a[i], i % F.p));
    trim(r);
    return r;
}

ModPoly powmod(const ModPoly& base, const mpz_class& e, const ModPoly& m, const Field& F) {
    ModPoly r{1};
    r = rem(r, m, F);
    ModPoly b = rem(base, m, F);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = rem(mul(r, r, F), m, F);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, b, F), m, F);
    }
    return r;
}

void ext_gcd(const ModPoly& a, const ModPoly& b, const Field& F, ModPoly& s, ModPoly& t) {
    ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        ModPoly q, r;
        divide(r0, r1, F, &q, r);
        ModPoly s2 = sub(s0, mul(q, s1, F), F);
        ModPoly t2 = sub(t0, mul(q, t1, F), F);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (deg(r0) != 0) throw InternalError("ext_gcd on non-coprime inputs");
    const std::uint64_t il = F.inv(r0[0]);
    for (auto& c : s0) c = F.mul(c, il);
    for (auto& c : t0) c = F.mul(c, il);
    s = s0;
    t = t0;
}

const std::vector<std::uint64_t>& prime_table() {
    static const std::vector<std::uint64_t> table = [] {
        std::vector<std::uint64_t> ps;
        for (std::uint64_t n = 1000003; ps.size() < 40; n += 2) {
            bool prime = true;
            for (std::uint64_t d = 3; d * d <= n; d += 2)
                if (n % d == 0) { prime = false; break; }
            if (prime) ps.push_back(n);
        }
        return ps;
    }();
    return table;
}

} // namespace dsb::exact::detail
