#pragma once

#include "dsb/exact/binary_form.hpp"
#include "dsb/linstab/plane_map.hpp"
#include "dsb/p1/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dsb::linstab {

enum class LinStatus { stable, strictly_semistable, unstable, unknown };
std::string to_string(LinStatus s);

/// A sub-series W of V together with its base divisor; the ratio d'/r'
/// uses d' = d - deg(base) and r' = dim W - 1.
struct Witness {
    std::string kind;                       // "base_divisor" or "fiber"
    BinaryForm base;
    std::vector<BinaryForm> subseries;
    int d_prime = 0;
    int r_prime = 0;
    Rational ratio;
    std::optional<Point> point;
};

struct SearchRecord {
    std::string method;
    int candidates_examined = 0;
    std::optional<Rational> best_ratio;
    std::optional<Rational> lower_bound;    // certified lower bound on every sub-series ratio
    std::vector<std::string> notes;
};

struct LinStabVerdict {
    LinStatus status = LinStatus::unknown;
    std::optional<Rational> ratio;          // least ratio exhibited
    std::optional<Witness> witness;
    bool complete = false;                  // ratio equals the certified minimum
    SearchRecord record;
};

/// Recomputes the ratio of a witness from V alone; throws InternalError if
/// the witness is not a sub-series with the stated base divisor.
Rational replay_witness(const p1::LinearSeriesP1& v, const Witness& w);

} // namespace dsb::linstab
