#include "heckelab/geometry.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <ostream>

namespace heckelab {

namespace {

constexpr int kReduceIterCap = 10'000;

long double to_ld(const Int& v) { return v.convert_to<long double>(); }

// Core Moebius evaluation on primitive entries. Extended precision keeps
// witness matrices with ~1e300 entries from overflowing intermediates.
UHPoint mobius_primitive(const Int& a, const Int& b, const Int& c, const Int& d,
                         const Int& determinant, UHPoint z) {
    long double la = to_ld(a), lb = to_ld(b), lc = to_ld(c), ld_ = to_ld(d);
    long double x = z.x, y = z.y;
    long double re_den = lc * x + ld_;
    long double im_den = lc * y;
    long double den = re_den * re_den + im_den * im_den;
    long double nx = (la * x + lb) * re_den + (la * y) * im_den;
    long double ny = to_ld(determinant) * y;
    return {static_cast<double>(nx / den), static_cast<double>(ny / den)};
}

struct ReduceState {
    double x, y;
    IntMat2 gamma;
    bool track;

    void translate(double n) {
        x -= n;
        if (track) {
            // prepend T^-n
            Int ni(n);
            gamma.a -= ni * gamma.c;
            gamma.b -= ni * gamma.d;
        }
    }

    void invert() {
        double r2 = x * x + y * y;
        x = -x / r2;
        y = y / r2;
        if (track) {
            // prepend S = [[0,-1],[1,0]]
            gamma = IntMat2{-gamma.c, -gamma.d, gamma.a, gamma.b};
        }
    }
};

ReduceState run_reduction(UHPoint z, bool track_witness) {
    if (!(z.y > 0.0) || !std::isfinite(z.x) || !std::isfinite(z.y))
        throw error("reduce: point not in the upper half-plane");

    ReduceState st{z.x, z.y, IntMat2::identity(), track_witness};
    int iter = 0;
    for (;; ++iter) {
        if (iter >= kReduceIterCap)
            throw error("reduce: iteration cap exceeded (y underflow?)");
        double n = std::floor(st.x + 0.5);
        if (n != 0.0) st.translate(n);
        double r2 = st.x * st.x + st.y * st.y;
        if (r2 < 1.0 - kReduceEps)
            st.invert();
        else
            break;
    }
    // Tie rules: the x = +1/2 edge goes to x = -1/2, the x > 0 half of the
    // unit circle goes to the x <= 0 half.
    if (std::fabs(st.x - 0.5) <= kReduceEps) st.translate(1.0);
    double r2 = st.x * st.x + st.y * st.y;
    if (r2 <= 1.0 + kReduceEps && st.x > 0.0) st.invert();
    return st;
}

}  // namespace

UHPoint mobius(const IntMat2& m, UHPoint z) {
    Int dm = det(m);
    if (dm <= 0) throw error("mobius: determinant must be positive");
    Int g = content(m);
    if (g == 1) return mobius_primitive(m.a, m.b, m.c, m.d, dm, z);
    return mobius_primitive(m.a / g, m.b / g, m.c / g, m.d / g, dm / (g * g), z);
}

Reduction reduce(UHPoint z) {
    ReduceState st = run_reduction(z, true);
    // Re-evaluating through the witness ties the returned point to the
    // returned gamma at machine precision.
    UHPoint w = mobius_primitive(st.gamma.a, st.gamma.b, st.gamma.c, st.gamma.d, Int(1), z);
    return {ReducedPoint{w}, st.gamma};
}

ReducedPoint reduce_point(UHPoint z) {
    ReduceState st = run_reduction(z, false);
    return ReducedPoint{UHPoint{st.x, st.y}};
}

double hyp_dist(UHPoint z1, UHPoint z2) {
    if (!(z1.y > 0.0) || !(z2.y > 0.0))
        throw error("hyp_dist: points must lie in the upper half-plane");
    double dx = z1.x - z2.x;
    double dy = z1.y - z2.y;
    return std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * z1.y * z2.y));
}

UHPoint parse_point(std::string_view text) {
    auto comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos)
        throw error("point spec must be \"x,y\"");
    auto parse_num = [](std::string_view s) {
        std::string buf(s);
        char* end = nullptr;
        double v = std::strtod(buf.c_str(), &end);
        if (end != buf.c_str() + buf.size() || buf.empty() || !std::isfinite(v))
            throw error("point spec entry is not a finite number: \"" + buf + "\"");
        return v;
    };
    UHPoint z{parse_num(text.substr(0, comma)), parse_num(text.substr(comma + 1))};
    if (!(z.y > 0.0)) throw error("point must satisfy y > 0");
    return z;
}

std::string to_string(UHPoint z) {
    char buf[64];
    auto r1 = std::to_chars(buf, buf + sizeof(buf), z.x);
    *r1.ptr = ',';
    auto r2 = std::to_chars(r1.ptr + 1, buf + sizeof(buf), z.y);
    return std::string(buf, r2.ptr);
}

}  // namespace heckelab
