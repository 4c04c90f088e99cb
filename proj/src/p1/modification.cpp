#include "dsb/p1/modification.hpp"

#include "dsb/error.hpp"

namespace dsb::p1 {

ModificationReport elementary_modification_check(const LinearSeriesP1& v, const std::vector<ProjPoint>& points) {
    const int k = static_cast<int>(points.size());
    const int r = v.rank();
    if (k >= r) throw InvalidInput("modification needs fewer points than the rank");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].a.is_zero() && points[i].b.is_zero()) throw InvalidInput("invalid projective point");
        for (std::size_t j = 0; j < i; ++j)
            if (points[i].a * points[j].b == points[i].b * points[j].a) throw InvalidInput("points must be distinct");
    }

    const SplittingType original = splitting_type(v);
    BinaryForm D(0, {1});
    std::size_t expected_dim = v.basis().size();
    std::vector<exact::Vector> coords;
    for (const auto& p : points) {
        D = D * BinaryForm::vanishing_at(p.a, p.b);
        coords = v.coordinates_divisible_by(D);
        if (coords.size() + 1 != expected_dim) throw InvalidInput("special divisor");
        --expected_dim;
    }
    if (k == 0) return {0, original, v, original, true, true, true};

    std::vector<BinaryForm> quotients;
    for (const auto& c : coords) quotients.push_back(exact::exact_quotient(v.combine(c), D));
    if (exact::form_gcd(quotients).degree() != 0) throw InvalidInput("base point in modified series");
    LinearSeriesP1 modified(v.degree() - k, quotients);
    SplittingType st = splitting_type(modified);

    ModificationReport rep{k, original, modified, st, false, false, true};
    rep.rank_ok = st.rank() == r - k;
    rep.degree_ok = st.degree() + k == v.degree();
    if (k == r - 1) rep.last_twist_ok = st.rank() == 1 && st.twists()[0] == v.degree() - r + 1;
    return rep;
}

} // namespace dsb::p1
