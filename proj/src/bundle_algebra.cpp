#include "obstructor/bundle_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace obstructor {

std::string to_string(Triviality t) {
    switch (t) {
    case Triviality::Trivial: return "trivial";
    case Triviality::NonTrivial: return "nontrivial";
    case Triviality::Unknown: return "unknown";
    }
    return "unknown";
}

Curve::Curve(int g) : genus(g) {
    if (g < 0)
        throw std::domain_error("Curve: genus must be non-negative");
}

LineBundleClass::LineBundleClass(int degree, Triviality t)
    : degree_(degree), triviality_(t) {
    if (degree_ != 0)
        triviality_ = Triviality::NonTrivial;
}

LineBundleClass LineBundleClass::normalized_for(const Curve& c) const {
    if (degree_ == 0 && c.genus == 0)
        return LineBundleClass(0, Triviality::Trivial);
    return *this;
}

LineBundleClass LineBundleClass::dual() const {
    return LineBundleClass(-degree_, triviality_);
}

SplitBundle::SplitBundle(std::vector<LineBundleClass> components)
    : components_(std::move(components)) {
    if (components_.empty())
        throw std::domain_error("SplitBundle: rank must be at least 1");
    std::sort(components_.begin(), components_.end());
}

SplitBundle SplitBundle::from_degrees(const std::vector<int>& degrees) {
    std::vector<LineBundleClass> comps;
    comps.reserve(degrees.size());
    for (int d : degrees)
        comps.emplace_back(d);
    return SplitBundle(std::move(comps));
}

int SplitBundle::degree() const {
    int d = 0;
    for (const auto& l : components_)
        d += l.degree();
    return d;
}

bool SplitBundle::balanced() const {
    for (const auto& l : components_)
        if (l.degree() != components_.front().degree())
            return false;
    return true;
}

SplitBundle SplitBundle::normalized_for(const Curve& c) const {
    std::vector<LineBundleClass> comps;
    comps.reserve(components_.size());
    for (const auto& l : components_)
        comps.push_back(l.normalized_for(c));
    return SplitBundle(std::move(comps));
}

Model::Model(Curve c, SplitBundle e) : curve(c), bundle(e.normalized_for(c)) {}

LineBundleClass tensor_line(const Curve& c, const LineBundleClass& a,
                            const LineBundleClass& b) {
    const int d = a.degree() + b.degree();
    if (d != 0)
        return LineBundleClass(d, Triviality::NonTrivial);
    if (c.genus == 0)
        return LineBundleClass(0, Triviality::Trivial);
    if (a.triviality() == Triviality::Trivial)
        return LineBundleClass(0, b.triviality());
    if (b.triviality() == Triviality::Trivial)
        return LineBundleClass(0, a.triviality());
    // Product of two nontrivial degree-zero bundles can be anything.
    return LineBundleClass(0, Triviality::Unknown);
}

namespace {

LineBundleClass product_of(const Curve& c,
                           const std::vector<LineBundleClass>& factors) {
    LineBundleClass acc(0, Triviality::Trivial);
    for (const auto& f : factors)
        acc = tensor_line(c, acc, f);
    return acc.normalized_for(c);
}

} // namespace

SplitBundle exterior_power(const Curve& c, const SplitBundle& e, int k) {
    const int q = e.rank();
    if (k < 0 || k > q)
        throw std::domain_error("exterior_power: k must lie in [0, rank]");
    const auto& comps = e.components();
    std::vector<LineBundleClass> out;
    // Iterate over k-element subsets via the usual index-vector walk.
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k == 0)
        return SplitBundle({LineBundleClass(0, Triviality::Trivial)});
    while (true) {
        std::vector<LineBundleClass> chosen;
        chosen.reserve(k);
        for (int i : idx)
            chosen.push_back(comps[i]);
        out.push_back(product_of(c, chosen));
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == q - k + pos)
            --pos;
        if (pos < 0)
            break;
        ++idx[pos];
        for (int j = pos + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return SplitBundle(std::move(out));
}

SplitBundle tensor(const Curve& c, const SplitBundle& e, const SplitBundle& f) {
    std::vector<LineBundleClass> out;
    out.reserve(e.components().size() * f.components().size());
    for (const auto& a : e.components())
        for (const auto& b : f.components())
            out.push_back(tensor_line(c, a, b).normalized_for(c));
    return SplitBundle(std::move(out));
}

SplitBundle tensor(const Curve& c, const SplitBundle& e, const LineBundleClass& l) {
    return tensor(c, e, SplitBundle({l}));
}

SplitBundle dual(const SplitBundle& e) {
    std::vector<LineBundleClass> out;
    out.reserve(e.components().size());
    for (const auto& l : e.components())
        out.push_back(l.dual());
    return SplitBundle(std::move(out));
}

LineBundleClass tangent_bundle(const Curve& c) {
    const int d = 2 - 2 * c.genus;
    if (c.genus == 1)
        return LineBundleClass(0, Triviality::Trivial);
    return LineBundleClass(d).normalized_for(c);
}

LineBundleClass canonical_bundle(const Curve& c) {
    return tangent_bundle(c).dual();
}

} // namespace obstructor
