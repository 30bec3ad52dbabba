#ifndef OBSTRUCTOR_CECH_P1_HPP
#define OBSTRUCTOR_CECH_P1_HPP

#include <string>
#include <utility>
#include <vector>

#include "obstructor/laurent.hpp"

namespace obstructor {

// Exact two-chart Cech cohomology of O(d) on the projective line.
//
// Conventions, fixed bit-exactly and shared with the atlas machinery:
//   chart U0 has coordinate z, chart U1 has coordinate w = 1/z;
//   frames e0 on U0 and e1 on U1 are glued by e0 = z^(-d) * e1, so a
//   chart-0 section f(z)*e0 reads f(1/w)*w^d * e1 on chart 1; for d >= 0
//   the global sections are spanned by {1, z, ..., z^d};
//   vector fields transform by d/dz = -w^2 d/dw.
//
// All overlap data is written in the chart-0 coordinate and frame. The
// canonical basis of H1(O(d)) is the monomials z^(-1), z^(-2), ..., z^(d+1)
// (empty when d >= -1).

inline constexpr int kDefaultWindow = 64;

struct CechDims {
    int h0;
    int h1;
    friend bool operator==(const CechDims& a, const CechDims& b) {
        return a.h0 == b.h0 && a.h1 == b.h1;
    }
};

// Dimensions as rank/corank of the truncated coboundary matrix
//   C0 = Gamma(U0) + Gamma(U1) -> C1 = Gamma(U01), (s0, s1) -> s0 - g*s1,
// assembled over monomial bases and eliminated exactly over Q. Requires
// window >= |d| + 2; smaller windows throw rather than truncate silently.
CechDims cech_dims(int d, int window = kDefaultWindow);

// Reduced representative of an overlap section of O(d): coordinates in the
// canonical H1 basis together with the strictly mixed part they span.
struct CechClass {
    int bundle_degree = 0;
    LaurentPoly representative;          // canonical: only basis exponents
    std::vector<Rational> coordinates;   // parallel to h1_basis_exponents()

    bool is_zero() const;
    friend bool operator==(const CechClass& a, const CechClass& b) {
        return a.bundle_degree == b.bundle_degree &&
               a.coordinates == b.coordinates;
    }
    friend bool operator!=(const CechClass& a, const CechClass& b) {
        return !(a == b);
    }
};

// Exponents of the canonical H1(O(d)) basis, -1 down to d+1.
std::vector<int> h1_basis_exponents(int d);

// Splits a cocycle into chart-0 part (exponents >= 0), chart-1 part
// (exponents <= d) and the strictly mixed remainder, whose coefficients are
// the H1 coordinates. Exponents outside [-window, window] throw.
CechClass reduce_class(int d, const LaurentPoly& cocycle,
                       int window = kDefaultWindow);

// Human-readable statement of the chart/frame conventions for O(d).
std::string transition_convention(int d);

} // namespace obstructor

#endif
