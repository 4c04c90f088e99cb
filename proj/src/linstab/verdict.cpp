#include "dsb/linstab/verdict.hpp"

#include "dsb/error.hpp"
#include "dsb/exact/matrix.hpp"

namespace dsb::linstab {

std::string to_string(LinStatus s) {
    switch (s) {
    case LinStatus::stable: return "stable";
    case LinStatus::strictly_semistable: return "strictly_semistable";
    case LinStatus::unstable: return "unstable";
    case LinStatus::unknown: return "unknown";
    }
    return "unknown";
}

Rational replay_witness(const p1::LinearSeriesP1& v, const Witness& w) {
    if (w.subseries.size() < 2) throw InternalError("witness sub-series too small");
    std::vector<exact::Vector> rows, sub;
    for (const auto& f : v.basis()) rows.push_back(f.coeffs());
    for (const auto& f : w.subseries) {
        if (f.degree() != v.degree()) throw InternalError("witness form has wrong degree");
        sub.push_back(f.coeffs());
    }
    if (exact::rank_of(sub) != sub.size()) throw InternalError("witness sub-series is dependent");
    auto both = rows;
    both.insert(both.end(), sub.begin(), sub.end());
    if (exact::rank_of(both) != rows.size()) throw InternalError("witness sub-series not contained in V");
    const BinaryForm base = exact::form_gcd(w.subseries);
    if (base != w.base.normalized()) throw InternalError("witness base divisor mismatch");
    const int d_prime = v.degree() - base.degree();
    const int r_prime = static_cast<int>(sub.size()) - 1;
    if (d_prime != w.d_prime || r_prime != w.r_prime) throw InternalError("witness degree bookkeeping mismatch");
    const Rational ratio = Rational(d_prime) / Rational(r_prime);
    if (ratio != w.ratio) throw InternalError("witness ratio mismatch");
    return ratio;
}

} // namespace dsb::linstab
