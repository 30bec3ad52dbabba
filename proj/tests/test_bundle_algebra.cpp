#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "obstructor/bundle_algebra.hpp"

using namespace obstructor;

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

std::vector<int> degrees_of(const SplitBundle& e) {
    std::vector<int> out;
    for (const auto& l : e.components())
        out.push_back(l.degree());
    return out;
}

} // namespace

TEST_CASE("curve and line bundle invariants") {
    CHECK_THROWS_AS(Curve(-1), std::domain_error);
    // nonzero degree forces nontriviality at construction
    CHECK(LineBundleClass(3, Triviality::Trivial).triviality() ==
          Triviality::NonTrivial);
    CHECK(LineBundleClass(0, Triviality::Trivial).triviality() ==
          Triviality::Trivial);
    // genus 0 pins degree zero to the structure sheaf
    CHECK(LineBundleClass(0).normalized_for(Curve(0)).triviality() ==
          Triviality::Trivial);
    CHECK(LineBundleClass(0).normalized_for(Curve(2)).triviality() ==
          Triviality::Unknown);
}

TEST_CASE("split bundle basics") {
    const SplitBundle e = SplitBundle::from_degrees({-1, 3, 2});
    CHECK(e.rank() == 3);
    CHECK(e.degree() == 4);
    CHECK(degrees_of(e) == std::vector<int>{-1, 2, 3});  // canonical order
    CHECK(!e.balanced());
    CHECK(SplitBundle::from_degrees({-2, -2}).balanced());
    CHECK_THROWS_AS(SplitBundle(std::vector<LineBundleClass>{}), std::domain_error);
}

TEST_CASE("exterior power on the rank-3 example") {
    const Curve p1(0);
    const SplitBundle e = SplitBundle::from_degrees({-1, -1, -1});
    CHECK(degrees_of(exterior_power(p1, e, 2)) == std::vector<int>{-2, -2, -2});
    CHECK(exterior_power(p1, e, 1) == e);
    CHECK(degrees_of(exterior_power(p1, e, 0)) == std::vector<int>{0});
    CHECK(degrees_of(exterior_power(p1, e, 3)) == std::vector<int>{-3});
    CHECK_THROWS_AS(exterior_power(p1, e, 4), std::domain_error);
    CHECK_THROWS_AS(exterior_power(p1, e, -1), std::domain_error);
}

TEST_CASE("exterior power of a balanced rank-5 bundle") {
    const Curve p1(0);
    const SplitBundle e = SplitBundle::from_degrees({-2, -2, -2, -2, -2});
    const SplitBundle w3 = exterior_power(p1, e, 3);
    CHECK(w3.rank() == 10);
    for (const auto& l : w3.components())
        CHECK(l.degree() == -6);
}

TEST_CASE("exterior power counting and degree identities") {
    const Curve c(1);
    for (const auto& degs : {std::vector<int>{0, 1}, std::vector<int>{2, -1, 3},
                             std::vector<int>{1, 1, 0, -2}, std::vector<int>{2, 2, 2, 2, 2}}) {
        const SplitBundle e = SplitBundle::from_degrees(degs);
        const int q = e.rank();
        for (int k = 0; k <= q; ++k) {
            const SplitBundle p = exterior_power(c, e, k);
            CHECK(p.rank() == binom(q, k));
            if (k >= 1)
                CHECK(p.degree() == binom(q - 1, k - 1) * e.degree());
        }
        CHECK(exterior_power(c, e, q).rank() == 1);
        CHECK(exterior_power(c, e, q).degree() == e.degree());
        if (q >= 2)
            CHECK(exterior_power(c, e, 2).degree() == (q - 1) * e.degree());
    }
}

TEST_CASE("exterior power triviality propagation") {
    const Curve g1(1);
    std::vector<LineBundleClass> comps = {LineBundleClass(0, Triviality::Trivial),
                                          LineBundleClass(0, Triviality::Trivial),
                                          LineBundleClass(1)};
    const SplitBundle e(comps);
    const SplitBundle w2 = exterior_power(g1, e, 2);
    // pairs: (0T,0T) -> 0 trivial; (0T,1) twice -> degree 1
    int trivial = 0, deg1 = 0;
    for (const auto& l : w2.components()) {
        if (l.degree() == 0) {
            CHECK(l.triviality() == Triviality::Trivial);
            ++trivial;
        } else {
            CHECK(l.degree() == 1);
            ++deg1;
        }
    }
    CHECK(trivial == 1);
    CHECK(deg1 == 2);

    // unknown factors stay unknown at degree zero
    const SplitBundle f(std::vector<LineBundleClass>{
        LineBundleClass(0, Triviality::Unknown), LineBundleClass(0, Triviality::Unknown)});
    CHECK(exterior_power(g1, f, 2).components()[0].triviality() ==
          Triviality::Unknown);
}

TEST_CASE("tensor examples") {
    const Curve p1(0);
    CHECK(degrees_of(tensor(p1, SplitBundle::from_degrees({-2, -2, -2}),
                            SplitBundle::from_degrees({2}))) ==
          std::vector<int>{0, 0, 0});
    const SplitBundle f = SplitBundle::from_degrees({1, -1});
    const SplitBundle unit(std::vector<LineBundleClass>{
        LineBundleClass(0, Triviality::Trivial)});
    CHECK(tensor(p1, unit, f) == f);

    const Curve g1(1);
    const SplitBundle prod = tensor(g1, SplitBundle::from_degrees({1}), f);
    CHECK(degrees_of(prod) == std::vector<int>{0, 2});
    CHECK(prod.components()[0].triviality() == Triviality::Unknown);

    // commutative on degree multisets
    const SplitBundle a = SplitBundle::from_degrees({1, 2});
    const SplitBundle b = SplitBundle::from_degrees({-1, 0, 3});
    CHECK(tensor(g1, a, b) == tensor(g1, b, a));
}

TEST_CASE("dual is an involution") {
    const SplitBundle e = SplitBundle::from_degrees({-1, -1, -1});
    CHECK(degrees_of(dual(e)) == std::vector<int>{1, 1, 1});
    const SplitBundle t(std::vector<LineBundleClass>{
        LineBundleClass(0, Triviality::Trivial)});
    CHECK(dual(t) == t);
    for (const auto& degs : {std::vector<int>{0, 5}, std::vector<int>{-3, 2, 2}}) {
        const SplitBundle f = SplitBundle::from_degrees(degs);
        CHECK(dual(dual(f)) == f);
    }
}

TEST_CASE("tangent and canonical bundles") {
    CHECK(tangent_bundle(Curve(0)).degree() == 2);
    CHECK(tangent_bundle(Curve(0)).triviality() == Triviality::NonTrivial);
    CHECK(tangent_bundle(Curve(1)).degree() == 0);
    CHECK(tangent_bundle(Curve(1)).triviality() == Triviality::Trivial);
    CHECK(canonical_bundle(Curve(1)).triviality() == Triviality::Trivial);
    CHECK(canonical_bundle(Curve(3)).degree() == 4);
    CHECK(canonical_bundle(Curve(2)).triviality() == Triviality::NonTrivial);
}

TEST_CASE("model normalizes its bundle for the curve") {
    const Model m(Curve(0), SplitBundle::from_degrees({0, -1}));
    CHECK(m.bundle.components()[1].triviality() == Triviality::Trivial);
}
