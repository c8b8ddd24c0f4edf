#include "starplane/conformal.hpp"

#include <cmath>

namespace starplane {

ElementaryMap ElementaryMap::translate(GaussianRational p) {
    ElementaryMap m{MapKind::Translate, p.to_complex(), std::move(p)};
    return m;
}
ElementaryMap ElementaryMap::translate(std::complex<double> p) {
    return {MapKind::Translate, p, std::nullopt};
}
ElementaryMap ElementaryMap::rotate(GaussianRational unit) {
    if (!(unit * unit.conj() == GaussianRational(1)))
        throw PreconditionError("rotation parameter must have unit modulus");
    ElementaryMap m{MapKind::Rotate, unit.to_complex(), std::move(unit)};
    return m;
}
ElementaryMap ElementaryMap::rotate_angle(double u) {
    return {MapKind::Rotate, std::polar(1.0, u), std::nullopt};
}
ElementaryMap ElementaryMap::dilate(GaussianRational lambda) {
    if (lambda.is_zero()) throw PreconditionError("dilation parameter must be nonzero");
    ElementaryMap m{MapKind::Dilate, lambda.to_complex(), std::move(lambda)};
    return m;
}
ElementaryMap ElementaryMap::dilate(std::complex<double> lambda) {
    if (std::abs(lambda) <= 0.0) throw PreconditionError("dilation parameter must be nonzero");
    return {MapKind::Dilate, lambda, std::nullopt};
}
ElementaryMap ElementaryMap::invert_step() { return {MapKind::InvertStep, {0.0, 0.0}, std::nullopt}; }

std::complex<double> ElementaryMap::apply(std::complex<double> z) const {
    switch (kind) {
        case MapKind::Translate: return z + value;
        case MapKind::Rotate:
        case MapKind::Dilate: return value * z;
        case MapKind::InvertStep: return 1.0 / z;
    }
    throw std::logic_error("bad map kind");
}

std::complex<double> ElementaryMap::apply_inverse(std::complex<double> z) const {
    switch (kind) {
        case MapKind::Translate: return z - value;
        case MapKind::Rotate:
        case MapKind::Dilate: return z / value;
        case MapKind::InvertStep: return 1.0 / z;
    }
    throw std::logic_error("bad map kind");
}

NCPoly inverse_linear_expansion(const GaussianRational& c, const GaussianRational& d, int terms) {
    if (c.is_zero()) throw PreconditionError("expansion requires c != 0");
    if (terms < 1) throw PreconditionError("expansion needs at least one term");
    GaussianRational inv_c = GaussianRational(1) / c;
    GaussianRational ratio = -d / c;
    NCPoly out;
    GaussianRational coeff = inv_c;
    for (int n = 1; n <= terms; ++n) {
        out += NCPoly::generator_power(Letter::Z, -n).scaled(coeff);
        coeff *= ratio;
    }
    return out;
}

namespace {
NCPoly affine_word(const GaussianRational& a, const GaussianRational& b) {
    return NCPoly::generator_power(Letter::Z, 1).scaled(a) + NCPoly::scalar(b);
}
}  // namespace

NCPoly mobius_s1(const MobiusCoeffs& m, int terms) {
    NCPoly inv = inverse_linear_expansion(m.c, m.d, terms);
    return normal_form(inv * affine_word(m.a, m.b));
}

NCPoly mobius_s2(const MobiusCoeffs& m, int terms) {
    NCPoly inv = inverse_linear_expansion(m.c, m.d, terms);
    return normal_form(affine_word(m.a, m.b) * inv);
}

std::array<ElementaryMap, 4> mobius_decompose(const MobiusCoeffs& m) {
    if (m.c.is_zero()) throw PreconditionError("decomposition requires c != 0 (use the affine map)");
    GaussianRational k = (m.b * m.c - m.a * m.d) / (m.c * m.c);
    return {ElementaryMap::translate(m.d / m.c), ElementaryMap::invert_step(),
            ElementaryMap::dilate(k), ElementaryMap::translate(m.a / m.c)};
}

std::complex<double> mobius_closed_form(const MobiusCoeffs& m, std::complex<double> z) {
    std::complex<double> a = m.a.to_complex(), b = m.b.to_complex(), c = m.c.to_complex(),
                         d = m.d.to_complex();
    return a / c + ((b * c - a * d) / (c * c)) / (z + d / c);
}

HPolynomial transport_commutator(const ElementaryMap& map) {
    switch (map.kind) {
        case MapKind::Translate:
        case MapKind::Rotate: return HPolynomial(GaussianRational(1));
        case MapKind::Dilate: {
            if (!map.exact)
                throw PreconditionError("dilation factor requires an exact parameter");
            return HPolynomial(*map.exact * map.exact->conj());
        }
        case MapKind::InvertStep:
            throw PreconditionError(
                "inversion transport is ambiguous (four inequivalent definitions); "
                "expand the choices side by side instead");
    }
    throw std::logic_error("bad map kind");
}

std::array<const char*, 4> inversion_choice_names() {
    return {"(1 + cb z)^-1 z", "z (1 + cb z)^-1", "1/cb - cb^3/(cb z + 1)",
            "phi4 . phi3 . phi2 . phi1 with phi1,phi4: z + 1/cb; phi2: 1/z; phi3: -z/cb^2"};
}

namespace {

// (z + t)^e expanded for a non-negative integer exponent e.
Symbol shift_power(const Rational& e, const GaussianRational& t, bool conjugated) {
    if (!is_integer(e) || e < 0)
        throw PreconditionError("translation substitution needs non-negative integer exponents");
    long n = to_long(e);
    Symbol out;
    GaussianRational tc = conjugated ? t.conj() : t;
    for (long k = 0; k <= n; ++k) {
        long binom = 1;
        for (long j = 1; j <= k; ++j) binom = binom * (n - j + 1) / j;
        GaussianRational c(rat(binom));
        GaussianRational tp(1);
        for (long j = 0; j < k; ++j) tp *= tc;
        if (conjugated)
            out += Symbol::monomial(rat(0), rat(n - k), HPolynomial(c * tp));
        else
            out += Symbol::monomial(rat(n - k), rat(0), HPolynomial(c * tp));
    }
    return out;
}

GaussianRational rational_power(const GaussianRational& base, const Rational& e,
                                const char* what) {
    if (!is_integer(e)) throw PreconditionError(std::string(what) + ": weight must be an integer");
    long n = to_long(e);
    GaussianRational out(1);
    GaussianRational b = base;
    if (n < 0) {
        b = GaussianRational(1) / base;
        n = -n;
    }
    for (long j = 0; j < n; ++j) out *= b;
    return out;
}

}  // namespace

Symbol primary_transform(const Symbol& phi, const ConformalWeight& w, const ElementaryMap& map) {
    if (!map.exact && map.kind != MapKind::InvertStep)
        throw PreconditionError("primary transform needs an exact map parameter");
    switch (map.kind) {
        case MapKind::Translate: {
            const GaussianRational& t = *map.exact;
            // dz'/dz = 1: pure substitution z -> z + t, zb -> zb + conj(t).
            Symbol out;
            for (auto& [m, c] : phi.terms()) {
                Symbol zpart = shift_power(m.a, t, false);
                Symbol zbpart = shift_power(m.b, t, true);
                out += (zpart * zbpart).scaled(c);
            }
            return out;
        }
        case MapKind::Rotate:
        case MapKind::Dilate: {
            const GaussianRational& lam = *map.exact;
            GaussianRational wf = rational_power(lam, w.h, "dilate weight") *
                                  rational_power(lam.conj(), w.hbar, "dilate weight");
            Symbol out;
            for (auto& [m, c] : phi.terms()) {
                // z -> lam z contributes lam^a (and conj on the zb side).
                GaussianRational scale =
                    rational_power(lam, m.a, "dilate substitution") *
                    rational_power(lam.conj(), m.b, "dilate substitution");
                out += Symbol::monomial(m.a, m.b, c.scaled(scale));
            }
            return out.scaled(wf);
        }
        case MapKind::InvertStep: {
            if (!is_integer(w.h) || !is_integer(w.hbar))
                throw PreconditionError("inversion with non-integer weights is ambiguous");
            // z' = 1/z: dz'/dz = -z^-2; substitution maps (a, b) -> (-a, -b).
            Symbol out;
            for (auto& [m, c] : phi.terms()) out += Symbol::monomial(-m.a, -m.b, c);
            long hn = to_long(w.h), hb = to_long(w.hbar);
            GaussianRational sign((hn + hb) % 2 == 0 ? 1 : -1);
            Symbol factor = Symbol::monomial(rat(-2 * hn), rat(-2 * hb), HPolynomial(sign));
            return factor * out;
        }
    }
    throw std::logic_error("bad map kind");
}

GaussianRational measure_jacobian(const ElementaryMap& map) {
    switch (map.kind) {
        case MapKind::Translate: return GaussianRational(1);
        case MapKind::Rotate:
        case MapKind::Dilate: {
            if (!map.exact) throw PreconditionError("measure factor requires an exact parameter");
            return *map.exact * map.exact->conj();
        }
        case MapKind::InvertStep:
            throw PreconditionError("inversion measure factor is coordinate dependent");
    }
    throw std::logic_error("bad map kind");
}

VirasoroGenerator make_virasoro(int n, int bound) {
    if (n > bound || n < -bound) throw PreconditionError("Virasoro mode outside the bound");
    return {n, virasoro_generator(n)};
}

DiffOpPoly virasoro_bracket(int m, int n, int bound) {
    return diffop_commutator(make_virasoro(m, bound).op, make_virasoro(n, bound).op);
}

SimilarityResult virasoro_similarity(int n, int l, int series_terms) {
    if (l < 0) throw PreconditionError("similarity transform needs l >= 0");
    SimilarityResult res;
    if (l == 0) {
        res.poly = NCPoly::one();
        return res;
    }
    switch (n) {
        case 0:
            res.tag = SimilarityResult::ScalarTag::ExpScalar;
            res.tag_exponent = -l;
            res.poly = NCPoly::generator_power(Letter::Z, l);
            return res;
        case 1: {
            res.tag = SimilarityResult::ScalarTag::TruncatedSeries;
            NCPoly out;
            GaussianRational coef(1);
            for (int j = 0; j <= series_terms; ++j) {
                out += NCPoly::generator_power(Letter::Z, l + j).scaled(coef);
                coef *= GaussianRational(rat(-l, j + 1));
            }
            res.poly = out;
            return res;
        }
        case -1: {
            NCPoly out;
            GaussianRational coef(1);
            for (int j = 0; j <= l; ++j) {
                out += NCPoly::generator_power(Letter::Z, l - j).scaled(coef);
                coef *= GaussianRational(rat(-l, j + 1));
            }
            res.poly = out;
            return res;
        }
        default: throw PreconditionError("similarity transform supports n in {-1, 0, 1}");
    }
}

}  // namespace starplane
