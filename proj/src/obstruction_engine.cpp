#include "obstructor/obstruction_engine.hpp"

#include <stdexcept>

namespace obstructor {

SplitBundle obstruction_sheaf(const Model& m, int k) {
    const int q = m.bundle.rank();
    if (k < 2 || k > q)
        throw std::domain_error("obstruction_sheaf: level must lie in [2, rank]");
    if (k % 2 == 0)
        return tensor(m.curve, exterior_power(m.curve, m.bundle, k),
                      tangent_bundle(m.curve));
    return tensor(m.curve, dual(m.bundle), exterior_power(m.curve, m.bundle, k));
}

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

} // namespace

ObstructionReport obstruction_report(const Model& m) {
    const int q = m.bundle.rank();
    if (q < 2)
        throw std::domain_error("obstruction_report: rank must be at least 2");
    ObstructionReport report;
    for (int k = 2; k <= q; ++k) {
        ObstructionLevel level{k, obstruction_sheaf(m, k),
                               CohomologyDims::exact(0, 0), ""};
        level.dims = bundle_cohomology(level.sheaf, m.curve);
        if (k % 2 == 1 && k < q && m.bundle.balanced()) {
            const int d = m.bundle.components().front().degree();
            level.note = "direct construction gives " +
                         std::to_string(q * binom(q, k)) + " summands of O(" +
                         std::to_string((k - 1) * d) + "); the count " +
                         std::to_string(k * binom(q, k)) +
                         " sometimes quoted for balanced bundles differs, but "
                         "equal degrees leave h0/h1 unaffected";
        }
        report.levels.push_back(std::move(level));
    }
    return report;
}

std::vector<int> sufficient_vanishing_range(int rank) {
    if (rank < 2)
        throw std::domain_error("sufficient_vanishing_range: rank must be >= 2");
    std::vector<int> ks;
    for (int k = 2; k <= rank - 1; ++k)
        ks.push_back(k);
    return ks;
}

std::string to_string(Goodness g) {
    switch (g) {
    case Goodness::Good: return "good";
    case Goodness::SupportsExotic: return "supports-exotic";
    case Goodness::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::string to_string(ClassifyRule r) {
    switch (r) {
    case ClassifyRule::Rank3GenusZero: return "rank3-genus0-degrees";
    case ClassifyRule::BalancedGenusZero: return "balanced-genus0-degree";
    case ClassifyRule::NonnegativeLowDegree: return "nonnegative-low-degree";
    case ClassifyRule::SectionVanishing: return "section-vanishing";
    case ClassifyRule::GenusOneRankThree: return "genus1-rank3-euler";
    case ClassifyRule::None: return "none";
    }
    return "none";
}

namespace {

std::optional<ExoticWitness> find_witness(const Model& m, int window) {
    const auto deg = rank3_degrees(m);
    for (int s = 0; s < 3; ++s) {
        const auto [a, b] = slot_pair(s);
        const int top = deg[a] + deg[b] + 2;
        for (int j = 0; j <= top; ++j) {
            std::array<LaurentPoly, 3> u;
            u[s] = LaurentPoly::monomial(j, Rational(1));
            const auto phi = SectionQ2::from_chart0(u, deg);
            const auto classes = boundary_alpha(m, phi, window);
            for (int c = 0; c < 3; ++c)
                if (!classes[c].is_zero())
                    return ExoticWitness{s, u[s], classes};
        }
    }
    return std::nullopt;
}

} // namespace

GoodnessVerdict classify(const Model& m, int window) {
    const int g = m.curve.genus;
    const int q = m.bundle.rank();
    const auto& comps = m.bundle.components();
    GoodnessVerdict v;

    // (a) exact classification at rank 3 on the line
    if (g == 0 && q == 3) {
        v.rule = ClassifyRule::Rank3GenusZero;
        bool all_minus_one = true;
        for (const auto& l : comps)
            if (l.degree() != -1)
                all_minus_one = false;
        if (!all_minus_one) {
            v.status = Goodness::Good;
            v.detail = "some summand degree differs from -1";
            return v;
        }
        v.status = Goodness::SupportsExotic;
        v.detail = "all summand degrees equal -1";
        v.witness = find_witness(m, window);
        return v;
    }

    // (b) balanced bundles on the line; needs rank >= 3 so that nontrivial
    // higher atlases exist at all
    if (g == 0 && q >= 3 && m.bundle.balanced()) {
        const int d = comps.front().degree();
        if (d == -1) {
            v.rule = ClassifyRule::BalancedGenusZero;
            v.status = Goodness::SupportsExotic;
            v.detail = "balanced of degree -1: level-2 sections do not lift";
            return v;
        }
        if (d < -1) {
            v.rule = ClassifyRule::BalancedGenusZero;
            v.status = Goodness::Good;
            v.detail = "balanced of degree < -1: all obstruction sheaves are "
                       "sums of negative line bundles";
            return v;
        }
        v.failed_rules.push_back(to_string(ClassifyRule::BalancedGenusZero) +
                                 ": degree is non-negative, no conclusion");
    }

    // (d) non-negative summands of low total degree, rank 3
    if (q == 3) {
        bool nonneg = true;
        for (const auto& l : comps)
            if (l.degree() < 0)
                nonneg = false;
        if (nonneg && m.bundle.degree() < 3 * g - 3) {
            v.rule = ClassifyRule::NonnegativeLowDegree;
            v.status = Goodness::Good;
            v.detail = "deg E = " + std::to_string(m.bundle.degree()) + " < " +
                       std::to_string(3 * g - 3) + " with non-negative summands";
            return v;
        }
        v.failed_rules.push_back(to_string(ClassifyRule::NonnegativeLowDegree) +
                                 ": hypothesis not met");
    }

    // (c) vanishing global sections across the mid levels
    {
        bool all_vanish = true;
        bool indeterminate = false;
        for (int k : sufficient_vanishing_range(q)) {
            const auto dims = bundle_cohomology(obstruction_sheaf(m, k), m.curve);
            if (!dims.is_exact()) {
                if (dims.h0_lo() > 0)
                    all_vanish = false;  // definitely nonzero
                else
                    indeterminate = true;
            } else if (dims.h0() != 0) {
                all_vanish = false;
            }
        }
        if (all_vanish && !indeterminate) {
            v.rule = ClassifyRule::SectionVanishing;
            v.status = Goodness::Good;
            v.detail = "h0 of every obstruction sheaf in levels 2.." +
                       std::to_string(q - 1) + " vanishes exactly";
            return v;
        }
        v.failed_rules.push_back(
            to_string(ClassifyRule::SectionVanishing) +
            (indeterminate ? ": indeterminate (interval cohomology)"
                           : ": some level has global sections"));
    }

    // (e) genus-1 Euler-characteristic matches at rank 3
    if (g == 1 && q == 3) {
        const auto q2 = obstruction_sheaf(m, 2);
        const auto dims = bundle_cohomology(q2, m.curve);
        if (dims.is_exact()) {
            const int degree = q2.degree();
            if (degree == dims.h0()) {
                v.rule = ClassifyRule::GenusOneRankThree;
                v.status = Goodness::Good;
                v.detail = "deg Q2 = " + std::to_string(degree) + " = h0";
                return v;
            }
            if (degree == -dims.h1()) {
                v.rule = ClassifyRule::GenusOneRankThree;
                v.status = Goodness::Good;
                v.detail = "deg Q2 = " + std::to_string(degree) + " = -h1";
                return v;
            }
            v.failed_rules.push_back(to_string(ClassifyRule::GenusOneRankThree) +
                                     ": degree matches neither h0 nor -h1");
        } else {
            v.failed_rules.push_back(to_string(ClassifyRule::GenusOneRankThree) +
                                     ": indeterminate (interval cohomology)");
        }
    }

    v.status = Goodness::Inconclusive;
    v.rule = ClassifyRule::None;
    v.detail = "no decision rule applies";
    return v;
}

} // namespace obstructor
