#include "obstructor/curve_cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace obstructor {

CohomologyDims::CohomologyDims(int lo, int hi, int chi)
    : h0_lo_(lo), h0_hi_(hi), chi_(chi) {
    if (lo > hi)
        throw std::domain_error("CohomologyDims: empty interval");
    if (lo < 0 || lo - chi < 0)
        throw std::domain_error("CohomologyDims: negative dimension");
}

CohomologyDims CohomologyDims::exact(int h0, int h1) {
    return CohomologyDims(h0, h0, h0 - h1);
}

CohomologyDims CohomologyDims::interval(int h0_lo, int h0_hi, int chi) {
    return CohomologyDims(h0_lo, h0_hi, chi);
}

int CohomologyDims::h0() const {
    if (!is_exact())
        throw std::domain_error("CohomologyDims: h0 of an interval result");
    return h0_lo_;
}

int CohomologyDims::h1() const {
    if (!is_exact())
        throw std::domain_error("CohomologyDims: h1 of an interval result");
    return h0_lo_ - chi_;
}

std::string CohomologyDims::str() const {
    if (is_exact())
        return "h0=" + std::to_string(h0()) + " h1=" + std::to_string(h1());
    return "h0 in [" + std::to_string(h0_lo_) + "," + std::to_string(h0_hi_) +
           "] h1 in [" + std::to_string(h1_lo()) + "," + std::to_string(h1_hi()) +
           "] (chi=" + std::to_string(chi_) + ")";
}

CohomologyDims line_cohomology(const LineBundleClass& raw, const Curve& c) {
    const LineBundleClass l = raw.normalized_for(c);
    const int d = l.degree();
    const int g = c.genus;
    const int chi = d - g + 1;

    if (g == 0)
        return CohomologyDims::exact(std::max(0, d + 1), std::max(0, -d - 1));

    if (g == 1) {
        if (d > 0)
            return CohomologyDims::exact(d, 0);
        if (d < 0)
            return CohomologyDims::exact(0, -d);
        switch (l.triviality()) {
        case Triviality::Trivial: return CohomologyDims::exact(1, 1);
        case Triviality::NonTrivial: return CohomologyDims::exact(0, 0);
        case Triviality::Unknown: return CohomologyDims::interval(0, 1, 0);
        }
    }

    // genus >= 2
    if (d < 0)
        return CohomologyDims::exact(0, g - 1 - d);
    if (d > 2 * g - 2)
        return CohomologyDims::exact(d - g + 1, 0);
    if (d == 0 && l.triviality() == Triviality::Trivial)
        return CohomologyDims::exact(1, g);
    // Special range: Clifford bound above, chi below.
    return CohomologyDims::interval(std::max(0, chi), d / 2 + 1, chi);
}

CohomologyDims bundle_cohomology(const SplitBundle& e, const Curve& c) {
    CohomologyDims acc = CohomologyDims::exact(0, 0);
    for (const auto& l : e.components())
        acc = acc + line_cohomology(l, c);
    return acc;
}

LineBundleClass serre_dual(const LineBundleClass& l, const Curve& c) {
    return tensor_line(c, canonical_bundle(c), l.dual()).normalized_for(c);
}

} // namespace obstructor
