#pragma once

// Internal integer and modular polynomial helpers shared by the gcd and
// factorization code. Coefficient i multiplies s^i.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace dsb::exact::detail {

using ZPoly = std::vector<mpz_class>;
using ModPoly = std::vector<std::uint64_t>;

void trim(ZPoly& a);
int deg(const ZPoly& a);
mpz_class content(const ZPoly& a);
ZPoly primitive(const ZPoly& a);          // positive leading coefficient
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly derivative(const ZPoly& a);
ZPoly prem(const ZPoly& a, const ZPoly& b);
bool exact_div(const ZPoly& a, const ZPoly& b, ZPoly& q);   // false if b does not divide a
ZPoly primitive_gcd(ZPoly a, ZPoly b);

// Arithmetic in F_p[s] for odd primes p < 2^31.
struct Field {
    std::uint64_t p;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
};

void trim(ModPoly& a);
int deg(const ModPoly& a);
ModPoly reduce(const ZPoly& a, const Field& F);
ModPoly mul(const ModPoly& a, const ModPoly& b, const Field& F);
ModPoly sub(const ModPoly& a, const ModPoly& b, const Field& F);
ModPoly rem(const ModPoly& a, const ModPoly& b, const Field& F);
ModPoly quot(const ModPoly& a, const ModPoly& b, const Field& F);
ModPoly make_monic(const ModPoly& a, const Field& F);
ModPoly gcd(ModPoly a, ModPoly b, const Field& F);
ModPoly derivative(const ModPoly& a, const Field& F);
ModPoly powmod(const ModPoly& base, const mpz_class& e, const ModPoly& m, const Field& F);
// s*a + t*b = 1 for coprime a, b.
void ext_gcd(const ModPoly& a, const ModPoly& b, const Field& F, ModPoly& s, ModPoly& t);

const std::vector<std::uint64_t>& prime_table();

} // namespace dsb::exact::detail
