// Moebius machinery on the noncommutative plane: the two inequivalent forms
// S1 = (cz+d)^-1 (az+b) and S2 = (az+b)(cz+d)^-1, elementary-map
// decomposition, commutator transport, primary-field bookkeeping, and the
// Virasoro generator suite.
#pragma once

#include <array>
#include <complex>
#include <optional>

#include "starplane/diffop.hpp"
#include "starplane/ncpoly.hpp"
#include "starplane/symbol.hpp"

namespace starplane {

struct MobiusCoeffs {
    GaussianRational a, b, c, d;

    MobiusCoeffs(GaussianRational a_, GaussianRational b_, GaussianRational c_,
                 GaussianRational d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        if (!(a * d - b * c == GaussianRational(1)))
            throw PreconditionError("Moebius coefficients must satisfy ad - bc = 1");
    }
};

enum class MapKind { Translate, Rotate, Dilate, InvertStep };

// Elementary conformal map. The parameter is exact when constructed from a
// GaussianRational; numeric-only maps (e.g. rotation by e^{i pi/3}) carry
// just the complex value.
struct ElementaryMap {
    MapKind kind;
    std::complex<double> value;                 // numeric parameter
    std::optional<GaussianRational> exact;      // exact parameter when known

    static ElementaryMap translate(GaussianRational p);
    static ElementaryMap translate(std::complex<double> p);
    static ElementaryMap rotate(GaussianRational unit);
    static ElementaryMap rotate_angle(double u);
    static ElementaryMap dilate(GaussianRational lambda);
    static ElementaryMap dilate(std::complex<double> lambda);
    static ElementaryMap invert_step();

    std::complex<double> apply(std::complex<double> z) const;
    std::complex<double> apply_inverse(std::complex<double> z) const;
};

// (cz+d)^-1 expanded to `terms` inverse powers: (1/c) sum_n (-d/c)^(n-1) zi^n.
NCPoly inverse_linear_expansion(const GaussianRational& c, const GaussianRational& d, int terms);

// S1 = (cz+d)^-1 (az+b), S2 = (az+b)(cz+d)^-1, canonicalized at the given
// truncation. Requires c != 0.
NCPoly mobius_s1(const MobiusCoeffs& m, int terms);
NCPoly mobius_s2(const MobiusCoeffs& m, int terms);

// The four elementary maps of the ambiguity-free decomposition
//   z -> z + d/c -> 1/z -> kz (k = (bc-ad)/c^2) -> z + a/c.
std::array<ElementaryMap, 4> mobius_decompose(const MobiusCoeffs& m);

// The unambiguous closed form a/c + ((bc-ad)/c^2) / (z + d/c).
std::complex<double> mobius_closed_form(const MobiusCoeffs& m, std::complex<double> z);

// Multiplicative factor picked up by [z, zb] = 2H under the map: 1 for
// translations and rotations, |lambda|^2 for dilations. The inversion step is
// rejected (its four inequivalent definitions are exposed elsewhere).
HPolynomial transport_commutator(const ElementaryMap& map);

// The four printed right-hand sides for the ambiguous inversion map
// z -> z/(1 + cb z), for side-by-side reporting.
std::array<const char*, 4> inversion_choice_names();

struct ConformalWeight {
    Rational h{0};
    Rational hbar{0};
};

// Phi(z, zb) -> (dz'/dz)^h (dzb'/dzb)^hbar Phi(z', zb') for exact-parameter
// maps. Translations require non-negative integer exponents in the symbol;
// rotations/dilations require integer weights; the inversion step requires
// integer weights as well.
Symbol primary_transform(const Symbol& phi, const ConformalWeight& w, const ElementaryMap& map);

// Jacobian factor of the measure dz' dzb' = (dz'/dz)(dzb'/dzb) dz dzb for an
// exact-parameter map (the measure carries weight (-1,-1)).
GaussianRational measure_jacobian(const ElementaryMap& map);

struct VirasoroGenerator {
    int n = 0;
    DiffOpPoly op;  // -z^(n+1) dz
};
VirasoroGenerator make_virasoro(int n, int bound = 6);

// diffop commutator of L_m, L_n, canonical. |m|, |n| <= bound.
DiffOpPoly virasoro_bracket(int m, int n, int bound = 6);

// e^{L_n} z^l e^{-L_n} under the scalar-exponent convention of the printed
// forms: each adjoint step multiplies by (-l z^n), so
//   n =  0: e^{-l} z^l            (scalar tag exp(-l))
//   n =  1: e^{-l z} z^l          (series tag, truncated at series_terms)
//   n = -1: sum_{j<=l} (-l)^j/j! z^(l-j)   (exact, finite)
// The operator-conjugation reading differs for n = +-1 beyond l = 1; the
// printed forms are reproduced deliberately and the convention is part of the
// result (see ScalarTag).
struct SimilarityResult {
    enum class ScalarTag { None, ExpScalar, TruncatedSeries };
    ScalarTag tag = ScalarTag::None;
    long tag_exponent = 0;  // for ExpScalar: result carries e^{tag_exponent}
    NCPoly poly;
};
SimilarityResult virasoro_similarity(int n, int l, int series_terms = 8);

}  // namespace starplane
