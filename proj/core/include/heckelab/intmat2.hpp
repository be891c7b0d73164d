#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace heckelab {

/// Arbitrary-precision integer. Determinants and reduction witnesses grow
/// under coset products, so fixed-width arithmetic is not an option here.
using Int = boost::multiprecision::cpp_int;

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 2x2 integer matrix, row-major [[a,b],[c,d]].
struct IntMat2 {
    Int a, b, c, d;

    static IntMat2 identity() { return {1, 0, 0, 1}; }
    /// S = [[0,-1],[1,0]], order 4 in SL(2,Z).
    static IntMat2 gen_s() { return {0, -1, 1, 0}; }
    /// T = [[1,1],[0,1]].
    static IntMat2 gen_t() { return {1, 1, 0, 1}; }
    static IntMat2 gen_t_inv() { return {1, -1, 0, 1}; }
    static IntMat2 diag(Int top, Int bottom) { return {std::move(top), 0, 0, std::move(bottom)}; }

    friend bool operator==(const IntMat2&, const IntMat2&) = default;
};

/// Lexicographic order on (a,b,c,d); used for set/map keys.
bool operator<(const IntMat2& lhs, const IntMat2& rhs);

/// ad - bc, exact.
Int det(const IntMat2& m);

/// gcd of the four entries, always positive. Throws on the zero matrix.
Int content(const IntMat2& m);

IntMat2 operator*(const IntMat2& lhs, const IntMat2& rhs);

/// Smith normal form data (d1, d2) with d1 | d2, d1 >= 1.
struct DivisorType {
    Int d1, d2;
    friend bool operator==(const DivisorType&, const DivisorType&) = default;
};

/// Hermite normal form: the unique [[r,s],[0,t]] with r,t > 0, 0 <= s < t
/// equal to gamma*m for some gamma in SL(2,Z). Requires det(m) > 0.
IntMat2 hnf(const IntMat2& m);

/// (content, |det|/content). The shortcut is valid for 2x2 only: content^2
/// always divides the determinant there. Requires det(m) != 0.
DivisorType snf(const IntMat2& m);

/// True iff m1 = gamma*m2 for some gamma in SL(2,Z), decided exactly via the
/// adjugate. Requires det(m1) = det(m2) > 0.
bool is_unimodular_quotient(const IntMat2& m1, const IntMat2& m2);

/// Extended gcd: returns g = gcd(a,b) >= 0 with u*a + v*b = g.
Int xgcd(const Int& a, const Int& b, Int& u, Int& v);

/// Parses "a,b,c,d" (row-major, comma-separated decimal integers).
IntMat2 parse_mat(std::string_view text);

/// "a,b,c,d" formatting, inverse of parse_mat.
std::string to_string(const IntMat2& m);

std::ostream& operator<<(std::ostream& os, const IntMat2& m);

}  // namespace heckelab
