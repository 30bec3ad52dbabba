#ifndef OBSTRUCTOR_LAURENT_HPP
#define OBSTRUCTOR_LAURENT_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "obstructor/rational.hpp"

namespace obstructor {

// Laurent polynomial in one variable with rational coefficients, stored as
// a sparse exponent -> coefficient map (zero coefficients are never kept).
// This is the coefficient ring for chart-local sections: the variable is
// the active chart coordinate, so flip() realizes the substitution z -> 1/z
// when moving data across the two standard charts.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(int exponent, const Rational& c) {
        LaurentPoly p;
        if (!c.is_zero())
            p.terms_[exponent] = c;
        return p;
    }
    static LaurentPoly constant(const Rational& c) { return monomial(0, c); }

    bool is_zero() const { return terms_.empty(); }

    Rational coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const std::map<int, Rational>& terms() const { return terms_; }

    int min_exponent() const {
        if (is_zero())
            throw std::domain_error("LaurentPoly: min_exponent of zero");
        return terms_.begin()->first;
    }
    int max_exponent() const {
        if (is_zero())
            throw std::domain_error("LaurentPoly: max_exponent of zero");
        return terms_.rbegin()->first;
    }

    // True when every exponent is >= 0, i.e. the section extends over the
    // origin of the active chart. The zero polynomial qualifies.
    bool is_polynomial() const { return is_zero() || min_exponent() >= 0; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_)
            r.add_term(e, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_)
            r.add_term(e, -c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_)
            r.terms_[e] = -c;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }
    friend LaurentPoly operator*(const Rational& s, const LaurentPoly& p) {
        LaurentPoly r;
        if (s.is_zero())
            return r;
        for (const auto& [e, c] : p.terms_)
            r.terms_[e] = s * c;
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
    LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a == b);
    }

    // Multiplication by x^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_)
            r.terms_[e + k] = c;
        return r;
    }

    // Substitution x -> 1/x.
    LaurentPoly flipped() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_)
            r.terms_[-e] = c;
        return r;
    }

    LaurentPoly derivative() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_)
            if (e != 0)
                r.terms_[e - 1] = Rational(e) * c;
        return r;
    }

    std::string str(const std::string& var = "z") const {
        if (is_zero())
            return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty())
                out += " + ";
            if (e == 0) {
                out += c.str();
            } else {
                if (!c.is_one())
                    out += c.str() + "*";
                out += var;
                if (e != 1)
                    out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    void add_term(int e, const Rational& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero())
                terms_[e] = c;
            return;
        }
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }

    std::map<int, Rational> terms_;
};

} // namespace obstructor

#endif
