#ifndef OBSTRUCTOR_EXOTIC_BUILDER_HPP
#define OBSTRUCTOR_EXOTIC_BUILDER_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "obstructor/bundle_algebra.hpp"
#include "obstructor/cech_p1.hpp"
#include "obstructor/laurent.hpp"
#include "obstructor/linalg.hpp"

namespace obstructor {

// Constructive atlas machinery for rank-3 split bundles on the projective
// line. Chart and frame conventions are those of cech_p1, extended to the
// odd generators by theta_a^(0) = z^(-d_a) * theta_a^(1).
//
// Generators are indexed 0..2 in the canonical (sorted) summand order of
// the bundle. Pairs a < b are addressed through slots: slot 0 = (0,1),
// slot 1 = (0,2), slot 2 = (1,2); the slot complementary to generator c is
// 2 - c.

enum class Chart : std::uint8_t { Zero = 0, One = 1 };

constexpr int pair_slot(int a, int b) { return a + b - 1; }  // a < b
constexpr std::array<int, 2> slot_pair(int slot) {
    return slot == 0 ? std::array<int, 2>{0, 1}
         : slot == 1 ? std::array<int, 2>{0, 2}
                     : std::array<int, 2>{1, 2};
}
constexpr int complementary_generator(int slot) { return 2 - slot; }
// Sign from reordering theta_a theta_b theta_c (pair complementary to c,
// then c) into theta_0 theta_1 theta_2.
constexpr int complement_sign(int c) { return c == 1 ? -1 : 1; }

// Element of the exterior algebra on three odd generators over Laurent
// coefficients in the active chart coordinate. Component index is the
// generator bitmask (bit a = theta_a present), coefficients multiply the
// ascending monomial theta_{i1}...theta_{ik}.
class SuperElement {
public:
    SuperElement() = default;

    static SuperElement scalar(const LaurentPoly& c);
    static SuperElement coordinate();         // z (or w), mask 0
    static SuperElement generator(int a);     // theta_a
    static SuperElement monomial(unsigned mask, const LaurentPoly& c);

    const LaurentPoly& component(unsigned mask) const { return comp_[mask]; }
    bool is_zero() const;

    friend SuperElement operator+(const SuperElement& x, const SuperElement& y);
    friend SuperElement operator-(const SuperElement& x, const SuperElement& y);
    friend SuperElement operator*(const SuperElement& x, const SuperElement& y);
    friend bool operator==(const SuperElement& x, const SuperElement& y);
    friend bool operator!=(const SuperElement& x, const SuperElement& y) {
        return !(x == y);
    }

private:
    std::array<LaurentPoly, 8> comp_;
};

// Chart-local automorphism of the exterior algebra in the truncated family
//   z       -> z + sum_{a<b} deg2[slot(a,b)](z) theta_a theta_b
//   theta_c -> diag[c] theta_c + deg3[c](z) theta_0 theta_1 theta_2
// With identity diag this is exp(D) for the derivation D encoded by
// (deg2, deg3); at rank 3 the exponential truncates to 1 + D on the whole
// algebra, which apply() realizes exactly.
class TruncatedAutomorphism {
public:
    explicit TruncatedAutomorphism(Chart chart);

    static TruncatedAutomorphism identity(Chart chart);
    static TruncatedAutomorphism from_deg2(Chart chart,
                                           std::array<LaurentPoly, 3> deg2);
    static TruncatedAutomorphism from_deg3(Chart chart,
                                           std::array<LaurentPoly, 3> deg3);
    static TruncatedAutomorphism diagonal(Chart chart,
                                          std::array<Rational, 3> entries);

    Chart chart() const { return chart_; }
    const std::array<Rational, 3>& diag() const { return diag_; }
    const std::array<LaurentPoly, 3>& deg2() const { return deg2_; }
    const std::array<LaurentPoly, 3>& deg3() const { return deg3_; }

    bool is_identity() const;
    // Moves every element by terms of exterior degree >= k (k in 2..4).
    bool in_level(int k) const;

    // Action as an algebra automorphism.
    SuperElement apply(const SuperElement& u) const;
    // Action of the encoded derivation; requires identity diag.
    SuperElement derivation_apply(const SuperElement& u) const;

    SuperElement image_of_coordinate() const;
    SuperElement image_of_generator(int a) const;

    // Reconstructs an automorphism of the truncated family from generator
    // images; throws if the images do not fit the family.
    static TruncatedAutomorphism from_generator_images(
        Chart chart, const SuperElement& im_z,
        const std::array<SuperElement, 3>& im_theta);

    friend bool operator==(const TruncatedAutomorphism& f,
                           const TruncatedAutomorphism& g);
    friend bool operator!=(const TruncatedAutomorphism& f,
                           const TruncatedAutomorphism& g) {
        return !(f == g);
    }

private:
    Chart chart_;
    std::array<Rational, 3> diag_;
    std::array<LaurentPoly, 3> deg2_;
    std::array<LaurentPoly, 3> deg3_;
};

// f after g, computed by expanding on generators. Throws on chart mismatch.
TruncatedAutomorphism compose(const TruncatedAutomorphism& f,
                              const TruncatedAutomorphism& g);

TruncatedAutomorphism invert(const TruncatedAutomorphism& f);

// Re-expresses a chart-local automorphism in the other chart's coordinate
// and frame over the overlap, for the bundle with the given summand
// degrees. Conjugation by the split transition; this is where deg2 data
// picks up deg3 terms.
TruncatedAutomorphism express_in(const TruncatedAutomorphism& f, Chart target,
                                 const std::array<int, 3>& degrees);

// Global or local section of the even obstruction sheaf at level 2
// (pairwise wedge tensor tangent): per pair slot, a coefficient of
// theta_a theta_b d/dz on chart 0 and of theta_a theta_b d/dw on chart 1.
// The chart-1 coefficient of a global section is
//   v(w) = -u(1/w) * w^(d_a + d_b + 2).
struct SectionQ2 {
    std::array<LaurentPoly, 3> chart0;
    std::array<LaurentPoly, 3> chart1;

    static SectionQ2 from_chart0(const std::array<LaurentPoly, 3>& u,
                                 const std::array<int, 3>& degrees);
    std::array<LaurentPoly, 3> transition_residual(
        const std::array<int, 3>& degrees) const;
    bool is_global(const std::array<int, 3>& degrees) const;
    bool is_zero() const;
};

// Section of the odd obstruction sheaf at level 3 (dual tensor top wedge):
// per generator a, a coefficient of theta_0 theta_1 theta_2 d/dtheta_a. The
// chart-1 coefficient of a global section is v(w) = u(1/w) * w^(sum_d - d_a).
struct SectionQ3 {
    std::array<LaurentPoly, 3> chart0;
    std::array<LaurentPoly, 3> chart1;

    static SectionQ3 from_chart0(const std::array<LaurentPoly, 3>& u,
                                 const std::array<int, 3>& degrees);
    bool is_global(const std::array<int, 3>& degrees) const;
};

// Canonical summand degrees of a rank-3 genus-0 model; throws otherwise.
std::array<int, 3> rank3_degrees(const Model& m);

// Monomial basis of the global sections of the level-2 obstruction sheaf:
// per pair slot with d_a + d_b + 2 >= 0, the sections z^j, 0 <= j <= d_a+d_b+2.
std::vector<SectionQ2> q2_basis(const Model& m);

// Connecting-map image of a global phi: lift chart-wise to automorphisms
// acting by the vector field on the coordinate and trivially on the frame,
// glue over the overlap in the chart-0 frame, check that the level-2 part
// cancels exactly, and reduce the three level-3 overlap sections (component
// a has bundle degree sum_d - d_a). Non-global phi throws with the residual.
std::array<CechClass, 3> boundary_alpha(const Model& m, const SectionQ2& phi,
                                        int window = kDefaultWindow);

// Same map with the lifts perturbed by local level-3 data (chart-i
// polynomial coefficients); the reduced classes must not depend on this.
std::array<CechClass, 3> boundary_alpha_with_lifts(
    const Model& m, const SectionQ2& phi, const std::array<LaurentPoly, 3>& pert0,
    const std::array<LaurentPoly, 3>& pert1, int window = kDefaultWindow);

// Empirical summary of the connecting map over the monomial basis.
struct AlphaSweep {
    int dim_q2_sections = 0;   // dim H0 of the level-2 sheaf
    int dim_q3_space = 0;      // dim H1 of the level-3 sheaf
    int rank = 0;              // rank of the class matrix over Q
    bool nonzero = false;      // some basis section has a nonzero class
    RationalMatrix matrix;     // one row per basis section
};
AlphaSweep alpha_sweep(const Model& m, int window = kDefaultWindow);

// Scaling action of lambda * identity on the bundle (theta_a -> lambda
// theta_a, coordinates fixed): on an automorphism cocycle it conjugates by
// the canonical global lift; on a reduced class at level k it multiplies by
// lambda^k. Throws on lambda = 0.
TruncatedAutomorphism scale_star(const Rational& lambda,
                                 const TruncatedAutomorphism& f);
CechClass scale_star(const Rational& lambda, const CechClass& cls, int k);

// Boundary image of a diagonal bundle automorphism: glues the canonical
// chart lifts and reduces the level-2 part of the resulting cocycle. The
// three classes vanish identically (the lifts are global). Throws on a
// singular diagonal.
std::array<CechClass, 3> split_image_obstruction(
    const Model& m, const std::array<Rational, 3>& entries,
    int window = kDefaultWindow);

} // namespace obstructor

#endif
