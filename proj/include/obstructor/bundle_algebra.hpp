#ifndef OBSTRUCTOR_BUNDLE_ALGEBRA_HPP
#define OBSTRUCTOR_BUNDLE_ALGEBRA_HPP

#include <string>
#include <vector>

namespace obstructor {

// Whether a degree-zero line bundle is the structure sheaf. Nonzero degree
// forces NonTrivial; on genus zero the degree determines the class, so
// degree zero forces Trivial there. In genus >= 1 a bare degree-zero bundle
// stays Unknown and downstream cohomology turns into interval bounds.
enum class Triviality { Trivial, NonTrivial, Unknown };

std::string to_string(Triviality t);

struct Curve {
    explicit Curve(int g);
    int genus;
};

class LineBundleClass {
public:
    LineBundleClass(int degree, Triviality t = Triviality::Unknown);

    int degree() const { return degree_; }
    Triviality triviality() const { return triviality_; }

    // Applies the genus-0 normalization (Pic = Z) where a curve is known.
    LineBundleClass normalized_for(const Curve& c) const;

    LineBundleClass dual() const;

    friend bool operator==(const LineBundleClass& a, const LineBundleClass& b) {
        return a.degree_ == b.degree_ && a.triviality_ == b.triviality_;
    }
    friend bool operator!=(const LineBundleClass& a, const LineBundleClass& b) {
        return !(a == b);
    }
    // Ordering used to keep bundle summands in a canonical sequence.
    friend bool operator<(const LineBundleClass& a, const LineBundleClass& b) {
        if (a.degree_ != b.degree_)
            return a.degree_ < b.degree_;
        return static_cast<int>(a.triviality_) < static_cast<int>(b.triviality_);
    }

private:
    int degree_;
    Triviality triviality_;
};

// Direct sum of line bundle classes, held as a multiset (canonically
// sorted). Only the isomorphism class is modelled here; code that needs to
// address individual summands by position (the rank-3 atlas machinery)
// keeps its own indexed copy of the degrees.
class SplitBundle {
public:
    explicit SplitBundle(std::vector<LineBundleClass> components);

    static SplitBundle from_degrees(const std::vector<int>& degrees);

    const std::vector<LineBundleClass>& components() const { return components_; }
    int rank() const { return static_cast<int>(components_.size()); }
    int degree() const;
    bool balanced() const;  // all summands share one degree

    SplitBundle normalized_for(const Curve& c) const;

    friend bool operator==(const SplitBundle& a, const SplitBundle& b) {
        return a.components_ == b.components_;
    }
    friend bool operator!=(const SplitBundle& a, const SplitBundle& b) {
        return !(a == b);
    }

private:
    std::vector<LineBundleClass> components_;
};

struct Model {
    Model(Curve c, SplitBundle e);
    Curve curve;
    SplitBundle bundle;
};

// Triviality of a product of line bundles on the given curve: trivial
// factors only -> Trivial, nonzero total degree -> NonTrivial, degree zero
// otherwise -> Trivial on genus 0, Unknown above.
LineBundleClass tensor_line(const Curve& c, const LineBundleClass& a,
                            const LineBundleClass& b);

// k-th exterior power: one summand per k-element subset of the components,
// with degree the subset sum. Throws outside 0 <= k <= rank.
SplitBundle exterior_power(const Curve& c, const SplitBundle& e, int k);

// All pairwise products of summands.
SplitBundle tensor(const Curve& c, const SplitBundle& e, const SplitBundle& f);

SplitBundle tensor(const Curve& c, const SplitBundle& e, const LineBundleClass& l);

// Componentwise dual; triviality is preserved (a line bundle and its
// inverse are trivial together).
SplitBundle dual(const SplitBundle& e);

LineBundleClass tangent_bundle(const Curve& c);    // degree 2 - 2g
LineBundleClass canonical_bundle(const Curve& c);  // degree 2g - 2

} // namespace obstructor

#endif
