#include "dsb/exact/factor.hpp"

#include "dsb/error.hpp"
#include "zpoly.hpp"

#include <algorithm>
#include <random>

namespace dsb::exact {

using detail::Field;
using detail::ModPoly;
using detail::ZPoly;

namespace {

// ---------- factorization over F_p ----------

std::vector<std::pair<ModPoly, int>> distinct_degree(ModPoly f, const Field& F) {
    std::vector<std::pair<ModPoly, int>> out;
    const ModPoly x{0, 1};
    ModPoly h = detail::rem(x, f, F);
    for (int i = 1; 2 * i <= detail::deg(f); ++i) {
        h = detail::powmod(h, mpz_class(static_cast<unsigned long>(F.p)), f, F);
        ModPoly g = detail::gcd(detail::sub(h, x, F), f, F);
        if (detail::deg(g) > 0) {
            out.emplace_back(g, i);
            f = detail::quot(f, g, F);
            h = detail::rem(h, f, F);
        }
    }
    if (detail::deg(f) > 0) out.emplace_back(f, detail::deg(f));
    return out;
}

void equal_degree(const ModPoly& f, int d, const Field& F, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    if (detail::deg(f) == d) {
        out.push_back(f);
        return;
    }
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), F.p, d);
    e = (e - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> coef(0, F.p - 1);
    for (;;) {
        ModPoly a(detail::deg(f));
        for (auto& c : a) c = coef(rng);
        detail::trim(a);
        if (detail::deg(a) < 1) continue;
        ModPoly b = detail::powmod(a, e, f, F);
        b = detail::sub(b, ModPoly{1}, F);
        ModPoly g = detail::gcd(b, f, F);
        if (detail::deg(g) > 0 && detail::deg(g) < detail::deg(f)) {
            equal_degree(g, d, F, rng, out);
            equal_degree(detail::quot(f, g, F), d, F, rng, out);
            return;
        }
    }
}

std::vector<ModPoly> factor_mod(const ModPoly& monic, const Field& F) {
    std::mt19937_64 rng(0x5eed ^ F.p);
    std::vector<ModPoly> out;
    for (auto& [g, d] : distinct_degree(monic, F)) equal_degree(g, d, F, rng, out);
    return out;
}

int count_mod_factors(const ModPoly& monic, const Field& F) {
    int n = 0;
    for (auto& [g, d] : distinct_degree(monic, F)) n += detail::deg(g) / d;
    return n;
}

// ---------- arithmetic modulo m = p^k ----------

void reduce_sym(ZPoly& a, const mpz_class& m) {
    for (auto& c : a) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    detail::trim(a);
}

ZPoly mul_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r = detail::mul(a, b);
    reduce_sym(r, m);
    return r;
}

ZPoly add_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    reduce_sym(r, m);
    return r;
}

ZPoly sub_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    reduce_sym(r, m);
    return r;
}

// Division by a monic divisor modulo m.
void divmod_monic(const ZPoly& a, const ZPoly& b, const mpz_class& m, ZPoly& q, ZPoly& r) {
    r = a;
    reduce_sym(r, m);
    const int db = detail::deg(b);
    q.assign(std::max(0, detail::deg(r) - db + 1), 0);
    while (!r.empty() && detail::deg(r) >= db) {
        const int shift = detail::deg(r) - db;
        mpz_class c = r.back();
        q[shift] = c;
        for (int i = 0; i <= db; ++i) r[i + shift] -= c * b[i];
        reduce_sym(r, m);
    }
    detail::trim(q);
}

ZPoly lift_from(const ModPoly& a) {
    ZPoly z;
    for (auto c : a) z.emplace_back(static_cast<unsigned long>(c));
    return z;
}

// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const mpz_class& m2) {
    ZPoly e = sub_mod(f, mul_mod(g, h, m2), m2);
    ZPoly q, r;
    divmod_monic(mul_mod(s, e, m2), h, m2, q, r);
    ZPoly g2 = add_mod(add_mod(g, mul_mod(t, e, m2), m2), mul_mod(q, g, m2), m2);
    ZPoly h2 = add_mod(h, r, m2);
    ZPoly b = sub_mod(add_mod(mul_mod(s, g2, m2), mul_mod(t, h2, m2), m2), ZPoly{1}, m2);
    ZPoly c, dd;
    divmod_monic(mul_mod(s, b, m2), h2, m2, c, dd);
    ZPoly s2 = sub_mod(s, dd, m2);
    ZPoly t2 = sub_mod(sub_mod(t, mul_mod(t, b, m2), m2), mul_mod(c, g2, m2), m2);
    g = std::move(g2);
    h = std::move(h2);
    s = std::move(s2);
    t = std::move(t2);
}

// Lifts f = lc * prod(us) mod p to modulus p^(2^k) >= target. Returns monic lifts.
void multifactor_lift(const ZPoly& f, const std::vector<ModPoly>& us, const Field& F, const mpz_class& modulus,
                      int steps, std::vector<ZPoly>& out) {
    if (us.size() == 1) {
        // f = lc * u mod modulus; make monic
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
        ZPoly u = f;
        for (auto& c : u) c *= inv;
        reduce_sym(u, modulus);
        out.push_back(u);
        return;
    }
    const std::size_t half = us.size() / 2;
    std::vector<ModPoly> left(us.begin(), us.begin() + half), right(us.begin() + half, us.end());
    ModPoly gl{1}, hr{1};
    for (auto& u : left) gl = detail::mul(gl, u, F);
    for (auto& u : right) hr = detail::mul(hr, u, F);
    ModPoly lcm = detail::reduce(ZPoly{f.back()}, F);
    gl = detail::mul(gl, lcm, F);
    ModPoly sm, tm;
    detail::ext_gcd(gl, hr, F, sm, tm);
    ZPoly g = lift_from(gl), h = lift_from(hr), s = lift_from(sm), t = lift_from(tm);
    mpz_class m = F.p;
    for (int i = 0; i < steps; ++i) {
        m *= m;
        hensel_step(f, g, h, s, t, m);
    }
    // g carries the leading coefficient of f; h is monic
    multifactor_lift(g, left, F, modulus, steps, out);
    ZPoly hm = h;
    hm.back() = 1;
    multifactor_lift(hm, right, F, modulus, steps, out);
}

mpz_class coefficient_bound(const ZPoly& f) {
    mpz_class norm2 = 0;
    for (auto& c : f) norm2 += c * c;
    mpz_class n = sqrt(norm2) + 1;
    mpz_class b = n << static_cast<unsigned long>(detail::deg(f));
    return b * abs(f.back()) * 2 + 1;
}

ZPoly symmetric(ZPoly a, const mpz_class& m) {
    mpz_class half = m / 2;
    for (auto& c : a) {
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    detail::trim(a);
    return a;
}

bool next_subset(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Factors a primitive squarefree integer polynomial with positive lead.
std::vector<ZPoly> factor_squarefree(ZPoly f) {
    const int n = detail::deg(f);
    if (n <= 1) return {f};
    if (n > kMaxFactorDegree) throw CeilingExceeded("factorization degree ceiling exceeded");
    const auto& primes = detail::prime_table();
    std::uint64_t best_p = 0;
    int best_count = 0;
    int tried = 0;
    for (std::uint64_t p : primes) {
        Field F{p};
        ModPoly fm = detail::reduce(f, F);
        if (detail::deg(fm) != n) continue;
        if (detail::deg(detail::gcd(fm, detail::derivative(fm, F), F)) != 0) continue;
        int c = count_mod_factors(detail::make_monic(fm, F), F);
        if (best_p == 0 || c < best_count) {
            best_p = p;
            best_count = c;
        }
        if (c == 1 || ++tried >= 5) break;
    }
    if (best_p == 0) throw InternalError("no separable reduction found");
    if (best_count == 1) return {f};
    if (best_count > kMaxModularFactors) throw CeilingExceeded("modular factor count ceiling exceeded");
    Field F{best_p};
    std::vector<ModPoly> us = factor_mod(detail::make_monic(detail::reduce(f, F), F), F);

    const mpz_class target = coefficient_bound(f);
    mpz_class modulus = F.p;
    int steps = 0;
    while (modulus < target) {
        modulus *= modulus;
        ++steps;
    }
    std::vector<ZPoly> lifted;
    multifactor_lift(f, us, F, modulus, steps, lifted);

    std::vector<ZPoly> found;
    std::vector<ZPoly> pool = lifted;
    for (int k = 1; 2 * k <= static_cast<int>(pool.size()); ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        bool restart = false;
        do {
            ZPoly g{f.back()};
            for (int i : idx) g = mul_mod(g, pool[i], modulus);
            g = detail::primitive(symmetric(g, modulus));
            ZPoly q;
            if (detail::exact_div(f, g, q)) {
                found.push_back(g);
                f = detail::primitive(q);
                std::vector<ZPoly> rest;
                for (int i = 0; i < static_cast<int>(pool.size()); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(pool[i]);
                pool = std::move(rest);
                restart = true;
                break;
            }
        } while (next_subset(idx, static_cast<int>(pool.size())));
        if (restart) --k;
    }
    if (detail::deg(f) > 0) found.push_back(f);
    return found;
}

bool factor_less(const UFactor& a, const UFactor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    for (int i = a.poly.degree(); i >= 0; --i)
        if (a.poly.coeff(i) != b.poly.coeff(i)) return a.poly.coeff(i) < b.poly.coeff(i);
    return a.multiplicity < b.multiplicity;
}

} // namespace

std::vector<UFactor> factor(const UPoly& a) {
    if (a.is_zero()) throw InvalidInput("factorization of zero");
    std::vector<UFactor> out;
    for (auto& [part, mult] : squarefree_decomposition(a)) {
        auto z = primitive_integer(part).second;
        for (auto& g : factor_squarefree(z)) out.push_back({from_integer(g).monic(), mult});
    }
    std::sort(out.begin(), out.end(), factor_less);
    return out;
}

std::vector<Rational> rational_roots(const UPoly& a) {
    std::vector<Rational> roots;
    for (auto& f : factor(a))
        if (f.poly.degree() == 1) roots.push_back(-f.poly.coeff(0));
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace dsb::exact
