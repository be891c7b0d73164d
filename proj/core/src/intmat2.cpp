#include "heckelab/intmat2.hpp"

#include <boost/multiprecision/integer.hpp>

#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace heckelab {

bool operator<(const IntMat2& lhs, const IntMat2& rhs) {
    if (lhs.a != rhs.a) return lhs.a < rhs.a;
    if (lhs.b != rhs.b) return lhs.b < rhs.b;
    if (lhs.c != rhs.c) return lhs.c < rhs.c;
    return lhs.d < rhs.d;
}

Int det(const IntMat2& m) { return m.a * m.d - m.b * m.c; }

Int content(const IntMat2& m) {
    using boost::multiprecision::gcd;
    Int g = gcd(gcd(abs(m.a), abs(m.b)), gcd(abs(m.c), abs(m.d)));
    if (g == 0) throw error("content: zero matrix");
    return g;
}

IntMat2 operator*(const IntMat2& lhs, const IntMat2& rhs) {
    return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
            lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

Int xgcd(const Int& a, const Int& b, Int& u, Int& v) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
        old_t -= q * t;
        std::swap(old_t, t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    u = old_s;
    v = old_t;
    return old_r;
}

IntMat2 hnf(const IntMat2& m) {
    Int dm = det(m);
    if (dm == 0) throw error("hnf: singular matrix");
    if (dm < 0) throw error("hnf: negative determinant has no canonical form");

    // Clear the first column with gamma1 = [[u,v],[-c/g, a/g]] in SL(2,Z),
    // where u*a + v*c = g = gcd(a,c) > 0.
    Int u, v;
    Int g = xgcd(m.a, m.c, u, v);
    Int t = dm / g;
    Int s = u * m.b + v * m.d;
    s %= t;
    if (s < 0) s += t;
    return {g, s, 0, t};
}

DivisorType snf(const IntMat2& m) {
    Int dm = det(m);
    if (dm == 0) throw error("snf: singular matrix");
    Int d1 = content(m);
    return {d1, abs(dm) / d1};
}

bool is_unimodular_quotient(const IntMat2& m1, const IntMat2& m2) {
    Int d1 = det(m1), d2 = det(m2);
    if (d1 != d2 || d1 <= 0)
        throw error("is_unimodular_quotient: determinants must be equal and positive");
    // gamma = m1 * adj(m2) / det(m2); integral entries imply det(gamma) = 1
    // automatically since det(m1*adj(m2)) = det^2.
    IntMat2 adj{m2.d, -m2.b, -m2.c, m2.a};
    IntMat2 q = m1 * adj;
    return q.a % d2 == 0 && q.b % d2 == 0 && q.c % d2 == 0 && q.d % d2 == 0;
}

IntMat2 parse_mat(std::string_view text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4) throw error("matrix spec must be \"a,b,c,d\"");
    Int vals[4];
    for (int i = 0; i < 4; ++i) {
        try {
            vals[i] = Int(parts[i]);
        } catch (const std::exception&) {
            throw error("matrix spec entry is not an integer: \"" + parts[i] + "\"");
        }
    }
    return {vals[0], vals[1], vals[2], vals[3]};
}

std::string to_string(const IntMat2& m) {
    std::ostringstream os;
    os << m.a << ',' << m.b << ',' << m.c << ',' << m.d;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMat2& m) {
    return os << to_string(m);
}

}  // namespace heckelab
