#pragma once

#include "dsb/exact/binary_form.hpp"
#include "dsb/p1/series.hpp"

#include <array>
#include <optional>

namespace dsb::linstab {

using exact::BinaryForm;
using exact::Rational;
using Point = std::array<Rational, 3>;

/// Morphism P^1 -> P^2 given by three independent forms without common factor.
class PlaneMap {
public:
    PlaneMap(int d, std::array<BinaryForm, 3> forms, std::optional<bool> birational = std::nullopt);
    explicit PlaneMap(const p1::LinearSeriesP1& v, std::optional<bool> birational = std::nullopt);

    int degree() const { return series_.degree(); }
    const std::vector<BinaryForm>& forms() const { return series_.basis(); }
    const p1::LinearSeriesP1& series() const { return series_; }
    /// Caller-asserted birationality, if any.
    std::optional<bool> birational_flag() const { return birational_; }

    Point image(const Rational& x, const Rational& y) const;

private:
    p1::LinearSeriesP1 series_;
    std::optional<bool> birational_;
};

/// Scales a nonzero point so its first nonzero coordinate is 1.
Point normalize_point(const Point& p);

/// Pullbacks of two independent lines through p; their gcd is the fiber.
std::array<BinaryForm, 2> pencil_through(const PlaneMap& phi, const Point& p);
/// Fiber divisor over p as a normalized form of degree m_p.
BinaryForm fiber_form(const PlaneMap& phi, const Point& p);
/// Length of the fiber over p. Throws InvalidInput("point off curve").
int multiplicity_at_point(const PlaneMap& phi, const Point& p);

/// Composition with the self-map (x : y) -> (a : c) of P^1.
p1::LinearSeriesP1 pullback(const p1::LinearSeriesP1& v, const BinaryForm& a, const BinaryForm& c);

} // namespace dsb::linstab
