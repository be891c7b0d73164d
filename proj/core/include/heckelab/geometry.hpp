#pragma once

#include "heckelab/intmat2.hpp"

#include <string>
#include <string_view>

namespace heckelab {

/// Boundary tolerance of the fundamental-domain reduction and its tie rules.
inline constexpr double kReduceEps = 1e-12;

/// Point x + iy of the upper half-plane, y > 0.
struct UHPoint {
    double x = 0.0;
    double y = 1.0;
    friend bool operator==(const UHPoint&, const UHPoint&) = default;
};

/// Point lying in the canonical fundamental domain of SL(2,Z):
/// |x| <= 1/2 + eps, x^2 + y^2 >= 1 - eps, tie-broken to the x = -1/2 edge
/// and to the x <= 0 half of the unit circle.
struct ReducedPoint {
    UHPoint point;
};

/// (a z + b)/(c z + d) for det(m) > 0. Internally divides out the content of
/// m, so scalar multiples of m act identically bit for bit, and evaluates in
/// extended precision so that reduction witnesses with huge entries do not
/// overflow.
UHPoint mobius(const IntMat2& m, UHPoint z);

struct Reduction {
    ReducedPoint point;
    IntMat2 gamma;  // point = gamma * z
};

/// Canonical fundamental-domain representative together with the SL(2,Z)
/// witness. Throws after 10^4 iterations (y underflow; unreachable for
/// y >= 1e-300).
Reduction reduce(UHPoint z);

/// Same reduction without witness tracking; no big-integer arithmetic, used
/// in hot loops.
ReducedPoint reduce_point(UHPoint z);

/// arccosh(1 + |z1-z2|^2 / (2 y1 y2)).
double hyp_dist(UHPoint z1, UHPoint z2);

/// Parses "x,y" with y > 0.
UHPoint parse_point(std::string_view text);

/// "x,y" with shortest round-trip decimal formatting.
std::string to_string(UHPoint z);

}  // namespace heckelab
