#ifndef OBSTRUCTOR_OBSTRUCTION_ENGINE_HPP
#define OBSTRUCTOR_OBSTRUCTION_ENGINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "obstructor/bundle_algebra.hpp"
#include "obstructor/cech_p1.hpp"
#include "obstructor/curve_cohomology.hpp"
#include "obstructor/exotic_builder.hpp"

namespace obstructor {

// Obstruction sheaf of the model at level k (2 <= k <= rank): the k-th
// wedge tensored with the tangent line for even k, the dual tensored with
// the k-th wedge for odd k.
SplitBundle obstruction_sheaf(const Model& m, int k);

struct ObstructionLevel {
    int k;
    SplitBundle sheaf;
    CohomologyDims dims;  // h0 row: global sections; h1 row: obstruction space
    std::string note;     // summand-count caveat for balanced odd levels
};

struct ObstructionReport {
    std::vector<ObstructionLevel> levels;  // k = 2 .. rank, in order
};

// Requires rank >= 2 (no levels otherwise).
ObstructionReport obstruction_report(const Model& m);

// Levels whose global sections must vanish for the section-vanishing rule:
// 2 <= k <= rank - 1 (empty at rank 2, where no higher atlases exist).
std::vector<int> sufficient_vanishing_range(int rank);

enum class Goodness { Good, SupportsExotic, Inconclusive };

std::string to_string(Goodness g);

// Which decision rule produced the verdict.
enum class ClassifyRule {
    Rank3GenusZero,       // exact degree criterion at rank 3 on the line
    BalancedGenusZero,    // balanced bundles of negative degree on the line
    NonnegativeLowDegree, // non-negative summands with deg E < 3g - 3, rank 3
    SectionVanishing,     // h0 of every mid-level obstruction sheaf is 0
    GenusOneRankThree,    // degree matches h0 (or -h1) of the level-2 sheaf
    None,
};

std::string to_string(ClassifyRule r);

struct ExoticWitness {
    int pair_slot;              // which theta_a theta_b carries the section
    LaurentPoly coefficient;    // chart-0 coefficient of the section
    std::array<CechClass, 3> classes;  // its boundary image, componentwise
};

struct GoodnessVerdict {
    Goodness status = Goodness::Inconclusive;
    ClassifyRule rule = ClassifyRule::None;
    std::string detail;
    std::optional<ExoticWitness> witness;
    std::vector<std::string> failed_rules;  // populated when inconclusive
};

// Decision procedure, first match wins:
//   (a) genus 0, rank 3:   good iff some degree differs from -1, otherwise
//                          supports-exotic with a verified witness;
//   (b) genus 0, balanced, rank >= 3:  d = -1 supports exotic, d < -1 good;
//   (d) all degrees >= 0, deg E < 3g-3, rank 3:  good;
//   (c) exact h0 = 0 across the vanishing range:  good;
//   (e) genus 1, rank 3, deg Q2 = h0(Q2) or deg Q2 = -h1(Q2) exactly:  good;
//   otherwise inconclusive, listing what failed or was indeterminate.
// Rules never fire on interval-valued cohomology.
GoodnessVerdict classify(const Model& m, int window = kDefaultWindow);

} // namespace obstructor

#endif
