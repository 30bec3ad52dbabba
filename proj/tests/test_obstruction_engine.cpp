#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "obstructor/obstruction_engine.hpp"

using namespace obstructor;

namespace {

Model make(int genus, std::vector<int> degrees) {
    return Model(Curve(genus), SplitBundle::from_degrees(std::move(degrees)));
}

std::vector<int> degrees_of(const SplitBundle& e) {
    std::vector<int> out;
    for (const auto& l : e.components())
        out.push_back(l.degree());
    return out;
}

} // namespace

TEST_CASE("obstruction sheaves at rank 3 on the line") {
    const Model m = make(0, {-1, -1, -1});
    CHECK(degrees_of(obstruction_sheaf(m, 2)) == std::vector<int>{0, 0, 0});
    CHECK(degrees_of(obstruction_sheaf(m, 3)) == std::vector<int>{-2, -2, -2});
    CHECK_THROWS_AS(obstruction_sheaf(m, 1), std::domain_error);
    CHECK_THROWS_AS(obstruction_sheaf(m, 4), std::domain_error);
}

TEST_CASE("odd levels of balanced bundles carry the full summand count") {
    const Model m = make(0, {-2, -2, -2, -2});
    const SplitBundle q3 = obstruction_sheaf(m, 3);
    CHECK(q3.rank() == 16);  // q * C(q, k) = 4 * 4
    for (const auto& l : q3.components())
        CHECK(l.degree() == -4);
    // rank 3 is the degenerate case where the two counts coincide
    CHECK(obstruction_sheaf(make(0, {-2, -2, -2}), 3).rank() == 3);
}

TEST_CASE("report spans levels 2..rank") {
    const Model m = make(0, {-1, -1, -1});
    const auto report = obstruction_report(m);
    REQUIRE(report.levels.size() == 2);
    CHECK(report.levels[0].k == 2);
    CHECK(report.levels[0].dims == CohomologyDims::exact(3, 0));
    CHECK(report.levels[1].k == 3);
    CHECK(report.levels[1].dims == CohomologyDims::exact(0, 3));
    // Serre duality ties the two levels together on this model
    CHECK(report.levels[0].dims.h0() == report.levels[1].dims.h1());

    CHECK_THROWS_AS(obstruction_report(make(0, {5})), std::domain_error);

    const auto negative = obstruction_report(make(0, {-2, -2, -2}));
    for (const auto& level : negative.levels)
        CHECK(level.dims.h0() == 0);
}

TEST_CASE("balanced odd-level note records the count discrepancy") {
    const auto report = obstruction_report(make(0, {-2, -2, -2, -2}));
    REQUIRE(report.levels.size() == 3);
    CHECK(report.levels[1].k == 3);
    CHECK(report.levels[1].note.find("16 summands") != std::string::npos);
    CHECK(report.levels[1].note.find("the count 12") != std::string::npos);
    CHECK(report.levels[1].note.find("O(-4)") != std::string::npos);
    // the count only matters below the top level
    CHECK(report.levels[2].note.empty());
    CHECK(obstruction_report(make(0, {1, 2, 3})).levels[1].note.empty());
}

TEST_CASE("vanishing range") {
    CHECK(sufficient_vanishing_range(2).empty());
    CHECK(sufficient_vanishing_range(3) == std::vector<int>{2});
    CHECK(sufficient_vanishing_range(5) == std::vector<int>{2, 3, 4});
    CHECK_THROWS_AS(sufficient_vanishing_range(1), std::domain_error);
}

TEST_CASE("classification fixtures") {
    const auto exotic = classify(make(0, {-1, -1, -1}));
    CHECK(exotic.status == Goodness::SupportsExotic);
    CHECK(exotic.rule == ClassifyRule::Rank3GenusZero);
    REQUIRE(exotic.witness.has_value());
    bool nonzero = false;
    for (const auto& c : exotic.witness->classes)
        if (!c.is_zero())
            nonzero = true;
    CHECK(nonzero);

    const auto good = classify(make(0, {0, -1, -1}));
    CHECK(good.status == Goodness::Good);
    CHECK(good.rule == ClassifyRule::Rank3GenusZero);
    CHECK(!good.witness.has_value());

    const auto genus1 = classify(make(1, {1, 1, 1}));
    CHECK(genus1.status == Goodness::Good);
    CHECK(genus1.rule == ClassifyRule::GenusOneRankThree);
    CHECK(genus1.detail.find("6") != std::string::npos);

    std::vector<LineBundleClass> comps{LineBundleClass(0, Triviality::Trivial),
                                       LineBundleClass(0, Triviality::Trivial),
                                       LineBundleClass(1)};
    const auto genus2 = classify(Model(Curve(2), SplitBundle(comps)));
    CHECK(genus2.status == Goodness::Good);
    CHECK(genus2.rule == ClassifyRule::NonnegativeLowDegree);
}

TEST_CASE("balanced rules on the line") {
    CHECK(classify(make(0, {-1, -1, -1, -1})).status == Goodness::SupportsExotic);
    CHECK(classify(make(0, {-1, -1, -1, -1})).rule == ClassifyRule::BalancedGenusZero);
    CHECK(classify(make(0, {-2, -2, -2, -2})).status == Goodness::Good);
    CHECK(classify(make(0, {-3, -3, -3, -3, -3})).status == Goodness::Good);
    // rank 2 has no higher atlases at all: vacuously good, not exotic
    const auto rank2 = classify(make(0, {-1, -1}));
    CHECK(rank2.status == Goodness::Good);
    CHECK(rank2.rule == ClassifyRule::SectionVanishing);
}

TEST_CASE("vanishing rule fires above rank 3") {
    const auto v = classify(make(0, {-3, -2, -4, -5}));
    CHECK(v.status == Goodness::Good);
    CHECK(v.rule == ClassifyRule::SectionVanishing);
}

TEST_CASE("unknown picard data stays inconclusive") {
    const auto v = classify(make(1, {0, 0, 0}));
    CHECK(v.status == Goodness::Inconclusive);
    CHECK(v.rule == ClassifyRule::None);
    CHECK(!v.failed_rules.empty());

    // pinned trivial flags stay inconclusive too: no rule covers them
    std::vector<LineBundleClass> comps(3, LineBundleClass(0, Triviality::Trivial));
    const auto t = classify(Model(Curve(1), SplitBundle(comps)));
    CHECK(t.status == Goodness::Inconclusive);
}

TEST_CASE("rank-3 sweep matches the degree rule on [-5,5]^3") {
    for (int d1 = -5; d1 <= 5; ++d1)
        for (int d2 = -5; d2 <= 5; ++d2)
            for (int d3 = -5; d3 <= 5; ++d3) {
                const auto v = classify(make(0, {d1, d2, d3}));
                const bool all_minus_one = d1 == -1 && d2 == -1 && d3 == -1;
                CHECK(v.status == (all_minus_one ? Goodness::SupportsExotic
                                                 : Goodness::Good));
            }
}

TEST_CASE("balanced sweeps reproduce the section counts") {
    for (int q = 2; q <= 6; ++q) {
        for (int d = -6; d <= -2; ++d) {
            const Model m = make(0, std::vector<int>(q, d));
            for (int k = 2; k <= q; ++k) {
                const auto dims = bundle_cohomology(obstruction_sheaf(m, k), m.curve);
                CHECK(dims.h0() == 0);
            }
        }
        // d = -1: the level-2 sections count the pairs
        const Model m = make(0, std::vector<int>(q, -1));
        const auto dims = bundle_cohomology(obstruction_sheaf(m, 2), m.curve);
        CHECK(dims.h0() == q * (q - 1) / 2);
    }
}

TEST_CASE("interval hypotheses never fire the vanishing rule") {
    // genus 1, degree-0 summands of unknown triviality produce intervals
    const auto v = classify(make(1, {0, 0, 0, 0}));
    CHECK(v.status == Goodness::Inconclusive);
    bool mentions_interval = false;
    for (const auto& f : v.failed_rules)
        if (f.find("indeterminate") != std::string::npos)
            mentions_interval = true;
    CHECK(mentions_interval);
}
