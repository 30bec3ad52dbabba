#ifndef OBSTRUCTOR_CURVE_COHOMOLOGY_HPP
#define OBSTRUCTOR_CURVE_COHOMOLOGY_HPP

#include <string>

#include "obstructor/bundle_algebra.hpp"

namespace obstructor {

// Dimensions (h0, h1) of a sheaf on a curve, either exact or as an interval
// constrained by the Euler characteristic: every admissible pair satisfies
// h0 - h1 = chi, so h1 is always pinned to h0 - chi and only the h0 bounds
// are stored.
class CohomologyDims {
public:
    static CohomologyDims exact(int h0, int h1);
    static CohomologyDims interval(int h0_lo, int h0_hi, int chi);

    bool is_exact() const { return h0_lo_ == h0_hi_; }
    int h0() const;  // throws unless exact
    int h1() const;  // throws unless exact
    int h0_lo() const { return h0_lo_; }
    int h0_hi() const { return h0_hi_; }
    int h1_lo() const { return h0_lo_ - chi_; }
    int h1_hi() const { return h0_hi_ - chi_; }
    int chi() const { return chi_; }

    friend CohomologyDims operator+(const CohomologyDims& a, const CohomologyDims& b) {
        return CohomologyDims(a.h0_lo_ + b.h0_lo_, a.h0_hi_ + b.h0_hi_,
                              a.chi_ + b.chi_);
    }

    friend bool operator==(const CohomologyDims& a, const CohomologyDims& b) {
        return a.h0_lo_ == b.h0_lo_ && a.h0_hi_ == b.h0_hi_ && a.chi_ == b.chi_;
    }
    friend bool operator!=(const CohomologyDims& a, const CohomologyDims& b) {
        return !(a == b);
    }

    std::string str() const;

private:
    CohomologyDims(int lo, int hi, int chi);
    int h0_lo_;
    int h0_hi_;
    int chi_;
};

// Exact dimensions where the genus and degree force them, intervals where
// they do not:
//   genus 0          always exact (h0 = max(0, d+1), h1 = max(0, -d-1))
//   genus 1          exact except degree 0 of unknown triviality
//   genus >= 2       exact outside [0, 2g-2]; inside, h0 is bounded below
//                    by chi and above by the Clifford bound floor(d/2)+1,
//                    with only the trivial bundle pinned exactly
CohomologyDims line_cohomology(const LineBundleClass& l, const Curve& c);

// Componentwise sum; exact iff every summand is.
CohomologyDims bundle_cohomology(const SplitBundle& e, const Curve& c);

// K otimes L^{-1}; swaps (h0, h1) wherever both sides are exact.
LineBundleClass serre_dual(const LineBundleClass& l, const Curve& c);

} // namespace obstructor

#endif
