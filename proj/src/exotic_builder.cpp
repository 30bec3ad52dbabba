#include "obstructor/exotic_builder.hpp"

#include <stdexcept>
#include <string>

namespace obstructor {

namespace {

// Sign from concatenating ascending monomials theta^S * theta^T: one
// transposition per pair s in S, t in T with s > t.
int koszul_sign(unsigned s, unsigned t) {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
        if (t & (1u << i))
            for (int j = i + 1; j < 3; ++j)
                if (s & (1u << j))
                    ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

bool constant_term(const LaurentPoly& p, Rational& value) {
    if (p.is_zero()) {
        value = Rational(0);
        return true;
    }
    if (p.min_exponent() != 0 || p.max_exponent() != 0)
        return false;
    value = p.coeff(0);
    return true;
}

const LaurentPoly kZ = LaurentPoly::monomial(1, Rational(1));

} // namespace

SuperElement SuperElement::scalar(const LaurentPoly& c) {
    SuperElement e;
    e.comp_[0] = c;
    return e;
}

SuperElement SuperElement::coordinate() { return scalar(kZ); }

SuperElement SuperElement::generator(int a) {
    return monomial(1u << a, LaurentPoly::constant(Rational(1)));
}

SuperElement SuperElement::monomial(unsigned mask, const LaurentPoly& c) {
    SuperElement e;
    e.comp_[mask & 7u] = c;
    return e;
}

bool SuperElement::is_zero() const {
    for (const auto& c : comp_)
        if (!c.is_zero())
            return false;
    return true;
}

SuperElement operator+(const SuperElement& x, const SuperElement& y) {
    SuperElement r;
    for (unsigned m = 0; m < 8; ++m)
        r.comp_[m] = x.comp_[m] + y.comp_[m];
    return r;
}

SuperElement operator-(const SuperElement& x, const SuperElement& y) {
    SuperElement r;
    for (unsigned m = 0; m < 8; ++m)
        r.comp_[m] = x.comp_[m] - y.comp_[m];
    return r;
}

SuperElement operator*(const SuperElement& x, const SuperElement& y) {
    SuperElement r;
    for (unsigned s = 0; s < 8; ++s) {
        if (x.comp_[s].is_zero())
            continue;
        for (unsigned t = 0; t < 8; ++t) {
            if (y.comp_[t].is_zero() || (s & t))
                continue;
            const int sign = koszul_sign(s, t);
            LaurentPoly prod = x.comp_[s] * y.comp_[t];
            if (sign < 0)
                prod = -prod;
            r.comp_[s | t] += prod;
        }
    }
    return r;
}

bool operator==(const SuperElement& x, const SuperElement& y) {
    for (unsigned m = 0; m < 8; ++m)
        if (x.comp_[m] != y.comp_[m])
            return false;
    return true;
}

TruncatedAutomorphism::TruncatedAutomorphism(Chart chart)
    : chart_(chart), diag_{Rational(1), Rational(1), Rational(1)} {}

TruncatedAutomorphism TruncatedAutomorphism::identity(Chart chart) {
    return TruncatedAutomorphism(chart);
}

TruncatedAutomorphism TruncatedAutomorphism::from_deg2(
    Chart chart, std::array<LaurentPoly, 3> deg2) {
    TruncatedAutomorphism f(chart);
    f.deg2_ = std::move(deg2);
    return f;
}

TruncatedAutomorphism TruncatedAutomorphism::from_deg3(
    Chart chart, std::array<LaurentPoly, 3> deg3) {
    TruncatedAutomorphism f(chart);
    f.deg3_ = std::move(deg3);
    return f;
}

TruncatedAutomorphism TruncatedAutomorphism::diagonal(
    Chart chart, std::array<Rational, 3> entries) {
    for (const auto& e : entries)
        if (e.is_zero())
            throw std::domain_error("TruncatedAutomorphism: singular diagonal");
    TruncatedAutomorphism f(chart);
    f.diag_ = std::move(entries);
    return f;
}

bool TruncatedAutomorphism::is_identity() const { return in_level(4); }

bool TruncatedAutomorphism::in_level(int k) const {
    if (k < 2 || k > 4)
        throw std::domain_error("in_level: k must lie in [2, 4]");
    for (const auto& d : diag_)
        if (!d.is_one())
            return false;
    if (k >= 3)
        for (const auto& p : deg2_)
            if (!p.is_zero())
                return false;
    if (k >= 4)
        for (const auto& p : deg3_)
            if (!p.is_zero())
                return false;
    return true;
}

SuperElement TruncatedAutomorphism::image_of_coordinate() const {
    SuperElement im = SuperElement::coordinate();
    for (int s = 0; s < 3; ++s) {
        const auto [a, b] = slot_pair(s);
        im = im + SuperElement::monomial((1u << a) | (1u << b), deg2_[s]);
    }
    return im;
}

SuperElement TruncatedAutomorphism::image_of_generator(int a) const {
    return SuperElement::monomial(1u << a, LaurentPoly::constant(diag_[a])) +
           SuperElement::monomial(7u, deg3_[a]);
}

SuperElement TruncatedAutomorphism::apply(const SuperElement& u) const {
    // Level-2 shift of the coordinate; its square vanishes at rank 3, so
    // c(z + A) = c(z) + c'(z) A exactly, for every Laurent coefficient c.
    SuperElement shift;
    for (int s = 0; s < 3; ++s) {
        const auto [a, b] = slot_pair(s);
        shift = shift + SuperElement::monomial((1u << a) | (1u << b), deg2_[s]);
    }
    std::array<SuperElement, 3> im;
    for (int a = 0; a < 3; ++a)
        im[a] = image_of_generator(a);

    SuperElement out;
    for (unsigned mask = 0; mask < 8; ++mask) {
        const LaurentPoly& c = u.component(mask);
        if (c.is_zero())
            continue;
        SuperElement term = SuperElement::scalar(c) +
                            SuperElement::scalar(c.derivative()) * shift;
        for (int a = 0; a < 3; ++a)
            if (mask & (1u << a))
                term = term * im[a];
        out = out + term;
    }
    return out;
}

SuperElement TruncatedAutomorphism::derivation_apply(const SuperElement& u) const {
    for (const auto& d : diag_)
        if (!d.is_one())
            throw std::domain_error(
                "derivation_apply: automorphism has a nontrivial diagonal part");

    SuperElement shift;
    for (int s = 0; s < 3; ++s) {
        const auto [a, b] = slot_pair(s);
        shift = shift + SuperElement::monomial((1u << a) | (1u << b), deg2_[s]);
    }
    const SuperElement top =
        SuperElement::monomial(7u, LaurentPoly::constant(Rational(1)));

    SuperElement out;
    for (unsigned mask = 0; mask < 8; ++mask) {
        const LaurentPoly& c = u.component(mask);
        if (c.is_zero())
            continue;
        // Vector-field part acts on the coefficient.
        out = out + SuperElement::scalar(c.derivative()) * shift *
                        SuperElement::monomial(mask, LaurentPoly::constant(Rational(1)));
        // Frame-shift part: left odd partial per generator in the mask.
        for (int a = 0; a < 3; ++a) {
            if (!(mask & (1u << a)))
                continue;
            int before = 0;
            for (int j = 0; j < a; ++j)
                if (mask & (1u << j))
                    ++before;
            LaurentPoly coef = c * deg3_[a];
            if (before % 2 != 0)
                coef = -coef;
            out = out + SuperElement::scalar(coef) * top *
                            SuperElement::monomial(mask & ~(1u << a),
                                                   LaurentPoly::constant(Rational(1)));
        }
    }
    return out;
}

TruncatedAutomorphism TruncatedAutomorphism::from_generator_images(
    Chart chart, const SuperElement& im_z,
    const std::array<SuperElement, 3>& im_theta) {
    TruncatedAutomorphism f(chart);

    if (im_z.component(0) != kZ)
        throw std::logic_error("from_generator_images: coordinate image must be "
                               "z + level-2 terms");
    for (unsigned mask : {1u, 2u, 4u, 7u})
        if (!im_z.component(mask).is_zero())
            throw std::logic_error("from_generator_images: coordinate image has "
                                   "odd components");
    f.deg2_[0] = im_z.component(3);  // (0,1)
    f.deg2_[1] = im_z.component(5);  // (0,2)
    f.deg2_[2] = im_z.component(6);  // (1,2)

    for (int c = 0; c < 3; ++c) {
        const SuperElement& im = im_theta[c];
        for (unsigned mask = 0; mask < 7; ++mask) {
            if (mask == (1u << c))
                continue;
            if (!im.component(mask).is_zero())
                throw std::logic_error(
                    "from_generator_images: generator image leaves the "
                    "diagonal family");
        }
        Rational d;
        if (!constant_term(im.component(1u << c), d) || d.is_zero())
            throw std::logic_error("from_generator_images: generator image has "
                                   "a non-constant or singular linear part");
        f.diag_[c] = d;
        f.deg3_[c] = im.component(7);
    }
    return f;
}

bool operator==(const TruncatedAutomorphism& f, const TruncatedAutomorphism& g) {
    return f.chart_ == g.chart_ && f.diag_ == g.diag_ && f.deg2_ == g.deg2_ &&
           f.deg3_ == g.deg3_;
}

TruncatedAutomorphism compose(const TruncatedAutomorphism& f,
                              const TruncatedAutomorphism& g) {
    if (f.chart() != g.chart())
        throw std::invalid_argument("compose: chart mismatch");
    SuperElement im_z = f.apply(g.image_of_coordinate());
    std::array<SuperElement, 3> im_theta;
    for (int a = 0; a < 3; ++a)
        im_theta[a] = f.apply(g.image_of_generator(a));
    return TruncatedAutomorphism::from_generator_images(f.chart(), im_z, im_theta);
}

TruncatedAutomorphism invert(const TruncatedAutomorphism& f) {
    // Solve compose(f, g) = id componentwise: the diagonal inverts, level-2
    // data divides by the pair weights, level-3 data by diag_c * det(diag).
    std::array<Rational, 3> diag_inv;
    Rational det(1);
    for (int a = 0; a < 3; ++a) {
        diag_inv[a] = f.diag()[a].inverse();
        det *= f.diag()[a];
    }
    SuperElement im_z = SuperElement::coordinate();
    for (int s = 0; s < 3; ++s) {
        const auto [a, b] = slot_pair(s);
        im_z = im_z +
               SuperElement::monomial(
                   (1u << a) | (1u << b),
                   -((f.diag()[a] * f.diag()[b]).inverse() * f.deg2()[s]));
    }
    std::array<SuperElement, 3> im_theta;
    for (int c = 0; c < 3; ++c)
        im_theta[c] =
            SuperElement::monomial(1u << c, LaurentPoly::constant(diag_inv[c])) +
            SuperElement::monomial(7u,
                                   -((f.diag()[c] * det).inverse() * f.deg3()[c]));
    return TruncatedAutomorphism::from_generator_images(f.chart(), im_z, im_theta);
}

TruncatedAutomorphism express_in(const TruncatedAutomorphism& f, Chart target,
                                 const std::array<int, 3>& degrees) {
    if (f.chart() == target)
        return f;

    // theta^(target) carries the frame factor (source var)^degree in both
    // directions; likewise the coefficient conversion multiplies each mask
    // by (target var)^(sum of mask degrees) after substituting 1/var.
    const auto convert = [&degrees](const SuperElement& e) {
        SuperElement out;
        for (unsigned mask = 0; mask < 8; ++mask) {
            const LaurentPoly& c = e.component(mask);
            if (c.is_zero())
                continue;
            int shift = 0;
            for (int a = 0; a < 3; ++a)
                if (mask & (1u << a))
                    shift += degrees[a];
            out = out + SuperElement::monomial(mask, c.flipped().shifted(shift));
        }
        return out;
    };

    const SuperElement im_z = convert(
        f.apply(SuperElement::scalar(LaurentPoly::monomial(-1, Rational(1)))));
    std::array<SuperElement, 3> im_theta;
    for (int c = 0; c < 3; ++c)
        im_theta[c] = convert(f.apply(SuperElement::monomial(
            1u << c, LaurentPoly::monomial(degrees[c], Rational(1)))));
    return TruncatedAutomorphism::from_generator_images(target, im_z, im_theta);
}

SectionQ2 SectionQ2::from_chart0(const std::array<LaurentPoly, 3>& u,
                                 const std::array<int, 3>& degrees) {
    SectionQ2 phi;
    phi.chart0 = u;
    for (int s = 0; s < 3; ++s) {
        const auto [a, b] = slot_pair(s);
        phi.chart1[s] = -(u[s].flipped().shifted(degrees[a] + degrees[b] + 2));
    }
    return phi;
}

std::array<LaurentPoly, 3> SectionQ2::transition_residual(
    const std::array<int, 3>& degrees) const {
    std::array<LaurentPoly, 3> res;
    for (int s = 0; s < 3; ++s) {
        const auto [a, b] = slot_pair(s);
        res[s] = chart1[s] +
                 chart0[s].flipped().shifted(degrees[a] + degrees[b] + 2);
    }
    return res;
}

bool SectionQ2::is_global(const std::array<int, 3>& degrees) const {
    for (const auto& r : transition_residual(degrees))
        if (!r.is_zero())
            return false;
    for (int s = 0; s < 3; ++s)
        if (!chart0[s].is_polynomial() || !chart1[s].is_polynomial())
            return false;
    return true;
}

bool SectionQ2::is_zero() const {
    for (int s = 0; s < 3; ++s)
        if (!chart0[s].is_zero() || !chart1[s].is_zero())
            return false;
    return true;
}

SectionQ3 SectionQ3::from_chart0(const std::array<LaurentPoly, 3>& u,
                                 const std::array<int, 3>& degrees) {
    const int sum = degrees[0] + degrees[1] + degrees[2];
    SectionQ3 psi;
    psi.chart0 = u;
    for (int a = 0; a < 3; ++a)
        psi.chart1[a] = u[a].flipped().shifted(sum - degrees[a]);
    return psi;
}

bool SectionQ3::is_global(const std::array<int, 3>& degrees) const {
    const int sum = degrees[0] + degrees[1] + degrees[2];
    for (int a = 0; a < 3; ++a) {
        if (!chart0[a].is_polynomial() || !chart1[a].is_polynomial())
            return false;
        if (chart1[a] != chart0[a].flipped().shifted(sum - degrees[a]))
            return false;
    }
    return true;
}

std::array<int, 3> rank3_degrees(const Model& m) {
    if (m.curve.genus != 0)
        throw std::domain_error("exotic_builder: model must live on genus 0");
    if (m.bundle.rank() != 3)
        throw std::domain_error("exotic_builder: bundle must have rank 3");
    const auto& comps = m.bundle.components();
    return {comps[0].degree(), comps[1].degree(), comps[2].degree()};
}

std::vector<SectionQ2> q2_basis(const Model& m) {
    const auto deg = rank3_degrees(m);
    std::vector<SectionQ2> basis;
    for (int s = 0; s < 3; ++s) {
        const auto [a, b] = slot_pair(s);
        const int top = deg[a] + deg[b] + 2;
        for (int j = 0; j <= top; ++j) {
            std::array<LaurentPoly, 3> u;
            u[s] = LaurentPoly::monomial(j, Rational(1));
            basis.push_back(SectionQ2::from_chart0(u, deg));
        }
    }
    return basis;
}

namespace {

std::array<CechClass, 3> glue_and_reduce(const std::array<int, 3>& deg,
                                         const TruncatedAutomorphism& rho0,
                                         const TruncatedAutomorphism& rho1,
                                         int window) {
    const TruncatedAutomorphism nu =
        compose(rho0, invert(express_in(rho1, Chart::Zero, deg)));
    for (int a = 0; a < 3; ++a)
        if (!nu.diag()[a].is_one())
            throw std::logic_error("boundary map: glued cocycle has a "
                                   "nontrivial diagonal part");
    for (int s = 0; s < 3; ++s)
        if (!nu.deg2()[s].is_zero())
            throw std::logic_error(
                "boundary map: level-2 part of the glued cocycle did not "
                "cancel; residual on slot " + std::to_string(s) + ": " +
                nu.deg2()[s].str());

    const int sum = deg[0] + deg[1] + deg[2];
    std::array<CechClass, 3> out;
    for (int a = 0; a < 3; ++a)
        out[a] = reduce_class(sum - deg[a], nu.deg3()[a], window);
    return out;
}

void require_polynomial(const std::array<LaurentPoly, 3>& data,
                        const char* what) {
    for (const auto& p : data)
        if (!p.is_polynomial())
            throw std::invalid_argument(std::string(what) +
                                        ": chart-local data must be polynomial");
}

} // namespace

std::array<CechClass, 3> boundary_alpha(const Model& m, const SectionQ2& phi,
                                        int window) {
    const auto deg = rank3_degrees(m);
    if (!phi.is_global(deg)) {
        std::string msg = "boundary_alpha: section is not global;";
        const auto res = phi.transition_residual(deg);
        for (int s = 0; s < 3; ++s)
            if (!res[s].is_zero())
                msg += " slot " + std::to_string(s) + " residual " + res[s].str("w") + ";";
        for (int s = 0; s < 3; ++s) {
            if (!phi.chart0[s].is_polynomial())
                msg += " slot " + std::to_string(s) + " chart-0 data has poles;";
            if (!phi.chart1[s].is_polynomial())
                msg += " slot " + std::to_string(s) + " chart-1 data has poles;";
        }
        throw std::invalid_argument(msg);
    }
    const auto rho0 = TruncatedAutomorphism::from_deg2(Chart::Zero, phi.chart0);
    const auto rho1 = TruncatedAutomorphism::from_deg2(Chart::One, phi.chart1);
    return glue_and_reduce(deg, rho0, rho1, window);
}

std::array<CechClass, 3> boundary_alpha_with_lifts(
    const Model& m, const SectionQ2& phi, const std::array<LaurentPoly, 3>& pert0,
    const std::array<LaurentPoly, 3>& pert1, int window) {
    const auto deg = rank3_degrees(m);
    if (!phi.is_global(deg))
        throw std::invalid_argument("boundary_alpha_with_lifts: section is not global");
    require_polynomial(pert0, "boundary_alpha_with_lifts");
    require_polynomial(pert1, "boundary_alpha_with_lifts");
    const auto rho0 =
        compose(TruncatedAutomorphism::from_deg2(Chart::Zero, phi.chart0),
                TruncatedAutomorphism::from_deg3(Chart::Zero, pert0));
    const auto rho1 =
        compose(TruncatedAutomorphism::from_deg2(Chart::One, phi.chart1),
                TruncatedAutomorphism::from_deg3(Chart::One, pert1));
    return glue_and_reduce(deg, rho0, rho1, window);
}

AlphaSweep alpha_sweep(const Model& m, int window) {
    const auto deg = rank3_degrees(m);
    const int sum = deg[0] + deg[1] + deg[2];
    const auto basis = q2_basis(m);

    AlphaSweep sweep;
    sweep.dim_q2_sections = static_cast<int>(basis.size());
    for (int a = 0; a < 3; ++a)
        sweep.dim_q3_space +=
            static_cast<int>(h1_basis_exponents(sum - deg[a]).size());

    for (const auto& phi : basis) {
        const auto classes = boundary_alpha(m, phi, window);
        std::vector<Rational> row;
        row.reserve(static_cast<std::size_t>(sweep.dim_q3_space));
        for (int a = 0; a < 3; ++a)
            for (const auto& c : classes[a].coordinates)
                row.push_back(c);
        for (const auto& c : row)
            if (!c.is_zero())
                sweep.nonzero = true;
        sweep.matrix.push_back(std::move(row));
    }
    if (!sweep.matrix.empty() && sweep.dim_q3_space > 0)
        sweep.rank = static_cast<int>(matrix_rank(sweep.matrix));
    return sweep;
}

TruncatedAutomorphism scale_star(const Rational& lambda,
                                 const TruncatedAutomorphism& f) {
    if (lambda.is_zero())
        throw std::domain_error("scale_star: lambda must be nonzero");
    const auto sigma = TruncatedAutomorphism::diagonal(
        f.chart(), {lambda, lambda, lambda});
    return compose(sigma, compose(f, invert(sigma)));
}

CechClass scale_star(const Rational& lambda, const CechClass& cls, int k) {
    if (lambda.is_zero())
        throw std::domain_error("scale_star: lambda must be nonzero");
    const Rational factor = lambda.pow(k);
    CechClass out;
    out.bundle_degree = cls.bundle_degree;
    out.representative = factor * cls.representative;
    out.coordinates.reserve(cls.coordinates.size());
    for (const auto& c : cls.coordinates)
        out.coordinates.push_back(factor * c);
    return out;
}

std::array<CechClass, 3> split_image_obstruction(
    const Model& m, const std::array<Rational, 3>& entries, int window) {
    const auto deg = rank3_degrees(m);
    for (const auto& e : entries)
        if (e.is_zero())
            throw std::domain_error("split_image_obstruction: singular diagonal");

    const auto psi0 = TruncatedAutomorphism::diagonal(Chart::Zero, entries);
    const auto psi1 = TruncatedAutomorphism::diagonal(Chart::One, entries);
    const TruncatedAutomorphism nu =
        compose(psi0, invert(express_in(psi1, Chart::Zero, deg)));

    std::array<CechClass, 3> out;
    for (int s = 0; s < 3; ++s) {
        const auto [a, b] = slot_pair(s);
        out[s] = reduce_class(deg[a] + deg[b] + 2, nu.deg2()[s], window);
    }
    return out;
}

} // namespace obstructor
