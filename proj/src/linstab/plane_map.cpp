#include "dsb/linstab/plane_map.hpp"

#include "dsb/error.hpp"

namespace dsb::linstab {

namespace {

p1::LinearSeriesP1 make_series(int d, const std::array<BinaryForm, 3>& forms) {
    return p1::LinearSeriesP1(d, std::vector<BinaryForm>(forms.begin(), forms.end()));
}

} // namespace

PlaneMap::PlaneMap(int d, std::array<BinaryForm, 3> forms, std::optional<bool> birational)
    : series_(make_series(d, forms)), birational_(birational) {}

PlaneMap::PlaneMap(const p1::LinearSeriesP1& v, std::optional<bool> birational) : series_(v), birational_(birational) {
    if (v.dim() != 3) throw InvalidInput("plane map needs exactly three forms");
}

Point PlaneMap::image(const Rational& x, const Rational& y) const {
    return {forms()[0].eval(x, y), forms()[1].eval(x, y), forms()[2].eval(x, y)};
}

Point normalize_point(const Point& p) {
    for (const auto& c : p)
        if (!c.is_zero()) {
            const Rational k = c.inverse();
            return {p[0] * k, p[1] * k, p[2] * k};
        }
    throw InvalidInput("invalid projective point");
}

std::array<BinaryForm, 2> pencil_through(const PlaneMap& phi, const Point& p) {
    normalize_point(p);
    auto lines = exact::kernel_basis(exact::ExactMatrix::from_rows({{p[0], p[1], p[2]}}));
    return {phi.series().combine(lines[0]), phi.series().combine(lines[1])};
}

BinaryForm fiber_form(const PlaneMap& phi, const Point& p) {
    auto pencil = pencil_through(phi, p);
    return exact::form_gcd(pencil[0], pencil[1]);
}

int multiplicity_at_point(const PlaneMap& phi, const Point& p) {
    const int m = fiber_form(phi, p).degree();
    if (m == 0) throw InvalidInput("point off curve");
    return m;
}

p1::LinearSeriesP1 pullback(const p1::LinearSeriesP1& v, const BinaryForm& a, const BinaryForm& c) {
    if (a.degree() != c.degree() || a.degree() < 1) throw InvalidInput("pullback needs two forms of one positive degree");
    if (exact::form_gcd(a, c).degree() != 0) throw InvalidInput("pullback forms must be coprime");
    std::vector<BinaryForm> basis;
    for (const auto& f : v.basis()) basis.push_back(f.compose(a, c));
    return p1::LinearSeriesP1(v.degree() * a.degree(), basis);
}

} // namespace dsb::linstab
