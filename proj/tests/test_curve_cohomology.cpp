#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "obstructor/curve_cohomology.hpp"

using namespace obstructor;

TEST_CASE("genus 0 closed form") {
    const Curve p1(0);
    CHECK(line_cohomology(LineBundleClass(-2), p1) == CohomologyDims::exact(0, 1));
    CHECK(line_cohomology(LineBundleClass(-1), p1) == CohomologyDims::exact(0, 0));
    CHECK(line_cohomology(LineBundleClass(0), p1) == CohomologyDims::exact(1, 0));
    CHECK(line_cohomology(LineBundleClass(3), p1) == CohomologyDims::exact(4, 0));
    CHECK(line_cohomology(LineBundleClass(-5), p1) == CohomologyDims::exact(0, 4));
}

TEST_CASE("genus 1 rules") {
    const Curve c(1);
    CHECK(line_cohomology(LineBundleClass(2), c) == CohomologyDims::exact(2, 0));
    CHECK(line_cohomology(LineBundleClass(-3), c) == CohomologyDims::exact(0, 3));
    CHECK(line_cohomology(LineBundleClass(0, Triviality::Trivial), c) ==
          CohomologyDims::exact(1, 1));
    CHECK(line_cohomology(LineBundleClass(0, Triviality::NonTrivial), c) ==
          CohomologyDims::exact(0, 0));
    const auto unknown = line_cohomology(LineBundleClass(0), c);
    CHECK(!unknown.is_exact());
    CHECK(unknown.h0_lo() == 0);
    CHECK(unknown.h0_hi() == 1);
    CHECK(unknown.h1_lo() == 0);
    CHECK(unknown.h1_hi() == 1);
    CHECK(unknown.chi() == 0);
}

TEST_CASE("genus >= 2 rules") {
    const Curve c(2);
    CHECK(line_cohomology(LineBundleClass(-1), c) == CohomologyDims::exact(0, 2));
    CHECK(line_cohomology(LineBundleClass(3), c) == CohomologyDims::exact(2, 0));
    CHECK(line_cohomology(LineBundleClass(0, Triviality::Trivial), c) ==
          CohomologyDims::exact(1, 2));
    // special range carries the Clifford bound
    const auto mid = line_cohomology(LineBundleClass(2), c);
    CHECK(!mid.is_exact());
    CHECK(mid.h0_lo() == 1);  // chi = 2 - 2 + 1
    CHECK(mid.h0_hi() == 2);  // floor(2/2) + 1
    CHECK(mid.chi() == 1);
    const auto zero_nt = line_cohomology(LineBundleClass(0, Triviality::NonTrivial), c);
    CHECK(!zero_nt.is_exact());
    CHECK(zero_nt.h0_lo() == 0);
    CHECK(zero_nt.h0_hi() == 1);

    const Curve g5(5);
    const auto k = line_cohomology(canonical_bundle(g5), g5);
    CHECK(!k.is_exact());
    CHECK(k.h0_lo() == 4);  // chi = 8 - 5 + 1
    CHECK(k.h0_hi() == 5);  // Clifford admits the canonical bundle itself
}

TEST_CASE("bundle cohomology aggregates") {
    const Curve p1(0);
    CHECK(bundle_cohomology(SplitBundle::from_degrees({1, 1, 0}), p1) ==
          CohomologyDims::exact(5, 0));
    CHECK(bundle_cohomology(SplitBundle::from_degrees({0, 0, 0}), p1) ==
          CohomologyDims::exact(3, 0));
    CHECK(bundle_cohomology(SplitBundle::from_degrees({-2, -2, -2}), p1) ==
          CohomologyDims::exact(0, 3));

    // intervals add endpoint-wise and poison exactness
    const Curve g1(1);
    const SplitBundle mixed(std::vector<LineBundleClass>{
        LineBundleClass(0, Triviality::Unknown), LineBundleClass(2)});
    const auto dims = bundle_cohomology(mixed, g1);
    CHECK(!dims.is_exact());
    CHECK(dims.h0_lo() == 2);
    CHECK(dims.h0_hi() == 3);
    CHECK(dims.chi() == 2);
}

TEST_CASE("serre dual examples") {
    CHECK(serre_dual(LineBundleClass(-2), Curve(0)) ==
          LineBundleClass(0, Triviality::Trivial));
    CHECK(serre_dual(LineBundleClass(0, Triviality::Trivial), Curve(1)) ==
          LineBundleClass(0, Triviality::Trivial));
    CHECK(serre_dual(LineBundleClass(3), Curve(2)).degree() == -1);
}

TEST_CASE("serre duality swaps dimensions across sweeps") {
    for (int g : {0, 1}) {
        const Curve c(g);
        for (int d = -8; d <= 8; ++d) {
            std::vector<LineBundleClass> cases;
            if (d == 0 && g >= 1) {
                cases.emplace_back(0, Triviality::Trivial);
                cases.emplace_back(0, Triviality::NonTrivial);
            } else {
                cases.emplace_back(d);
            }
            for (const auto& l : cases) {
                const auto lhs = line_cohomology(l, c);
                const auto rhs = line_cohomology(serre_dual(l, c), c);
                REQUIRE(lhs.is_exact());
                REQUIRE(rhs.is_exact());
                CHECK(lhs.h0() == rhs.h1());
                CHECK(lhs.h1() == rhs.h0());
            }
        }
    }
    // genus >= 2, wherever both sides are exact
    for (int g : {2, 3}) {
        const Curve c(g);
        for (int d = -8; d <= 8; ++d) {
            const LineBundleClass l(d);
            const auto lhs = line_cohomology(l, c);
            const auto rhs = line_cohomology(serre_dual(l, c), c);
            if (lhs.is_exact() && rhs.is_exact()) {
                CHECK(lhs.h0() == rhs.h1());
                CHECK(lhs.h1() == rhs.h0());
            }
        }
    }
}

TEST_CASE("riemann-roch holds in every result") {
    for (int g = 0; g <= 4; ++g) {
        const Curve c(g);
        for (int d = -9; d <= 9; ++d) {
            for (Triviality t : {Triviality::Trivial, Triviality::NonTrivial,
                                 Triviality::Unknown}) {
                if (d != 0 && t != Triviality::NonTrivial)
                    continue;
                const auto dims = line_cohomology(LineBundleClass(d, t), c);
                CHECK(dims.chi() == d - g + 1);
                if (dims.is_exact())
                    CHECK(dims.h0() - dims.h1() == d - g + 1);
                CHECK(dims.h0_lo() >= 0);
                CHECK(dims.h1_lo() >= 0);
                CHECK(dims.h0_lo() <= dims.h0_hi());
            }
        }
    }
}

TEST_CASE("interval accessors guard exactness") {
    const auto dims = line_cohomology(LineBundleClass(0), Curve(1));
    CHECK_THROWS_AS(dims.h0(), std::domain_error);
    CHECK_THROWS_AS(dims.h1(), std::domain_error);
}
