#include "obstructor/cech_p1.hpp"

#include <cstdlib>
#include <stdexcept>

#include "obstructor/linalg.hpp"

namespace obstructor {

namespace {

void require_window(int d, int window) {
    if (window < std::abs(d) + 2)
        throw std::domain_error("cech_p1: window " + std::to_string(window) +
                                " too small for degree " + std::to_string(d) +
                                " (need >= |d| + 2)");
}

} // namespace

CechDims cech_dims(int d, int window) {
    require_window(d, window);
    const int w = window;

    // Domain basis: chart-0 monomials z^e, e in [0, w], then chart-1
    // monomials w^j, j in [0, w]. Overlap basis: z^m with m in [d - w, w],
    // which contains the images of both charts and the gap between them.
    const int dom = 2 * (w + 1);
    const int m_lo = d - w;
    const int m_hi = w;
    const int codom = m_hi - m_lo + 1;

    RationalMatrix mat(static_cast<std::size_t>(codom),
                       std::vector<Rational>(static_cast<std::size_t>(dom)));
    for (int e = 0; e <= w; ++e)
        mat[static_cast<std::size_t>(e - m_lo)][static_cast<std::size_t>(e)] =
            Rational(1);
    for (int j = 0; j <= w; ++j) {
        // w^j * e1 restricted to the overlap in the chart-0 frame is
        // z^(d-j); the coboundary subtracts it.
        const int m = d - j;
        mat[static_cast<std::size_t>(m - m_lo)]
           [static_cast<std::size_t>(w + 1 + j)] = Rational(-1);
    }

    const std::size_t rank = matrix_rank(std::move(mat));
    return CechDims{dom - static_cast<int>(rank),
                    codom - static_cast<int>(rank)};
}

bool CechClass::is_zero() const {
    for (const auto& c : coordinates)
        if (!c.is_zero())
            return false;
    return true;
}

std::vector<int> h1_basis_exponents(int d) {
    std::vector<int> out;
    for (int e = -1; e >= d + 1; --e)
        out.push_back(e);
    return out;
}

CechClass reduce_class(int d, const LaurentPoly& cocycle, int window) {
    require_window(d, window);
    if (!cocycle.is_zero() &&
        (cocycle.min_exponent() < -window || cocycle.max_exponent() > window))
        throw std::domain_error(
            "cech_p1: cocycle exponents exceed window " + std::to_string(window));

    CechClass out;
    out.bundle_degree = d;
    for (int e : h1_basis_exponents(d)) {
        const Rational c = cocycle.coeff(e);
        out.coordinates.push_back(c);
        if (!c.is_zero())
            out.representative += LaurentPoly::monomial(e, c);
    }
    return out;
}

std::string transition_convention(int d) {
    const std::string ds = std::to_string(d);
    return "line bundle O(" + ds + ") on the projective line; charts U0 (coordinate z) "
           "and U1 (coordinate w = 1/z); frames glued by e0 = z^(-" + ds + ") * e1; "
           "chart-0 sections are polynomials in z (degree <= " + ds + " when d >= 0); "
           "vector fields satisfy d/dz = -w^2 d/dw; overlap data is written in the "
           "chart-0 coordinate and frame; H1 basis: z^-1 down to z^(" +
           std::to_string(d + 1) + ")";
}

} // namespace obstructor
