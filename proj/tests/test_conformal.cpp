#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "starplane/conformal.hpp"
#include "starplane/weyl_ops.hpp"

using namespace starplane;

namespace {
GaussianRational gr(long n, long d = 1) { return GaussianRational(rat(n, d)); }
}  // namespace

TEST_CASE("moebius construction enforces unimodularity") {
    CHECK_THROWS_AS(MobiusCoeffs(gr(2), gr(0), gr(0), gr(1)), PreconditionError);
    MobiusCoeffs ok(gr(1), gr(0), gr(1), gr(1));
    CHECK(ok.a == gr(1));
}

TEST_CASE("inverse linear expansion matches Eq.127 pattern") {
    // (cz+d)^-1 with c=1, d=-2: z^-1 + 2 z^-2 + 4 z^-3 ...
    NCPoly e = inverse_linear_expansion(gr(1), gr(-2), 3);
    NCPoly expect = NCPoly::generator_power(Letter::Z, -1) +
                    NCPoly::generator_power(Letter::Z, -2).scaled(gr(2)) +
                    NCPoly::generator_power(Letter::Z, -3).scaled(gr(4));
    CHECK(e == expect);
    CHECK_THROWS_AS(inverse_linear_expansion(gr(0), gr(1), 3), PreconditionError);
}

TEST_CASE("S1 - S2 difference series (Eq. 126)") {
    MobiusCoeffs m(gr(1), gr(0), gr(1), gr(1));  // a=1,b=0,c=1,d=1
    const int terms = 3;
    NCPoly s1 = mobius_s1(m, terms);
    NCPoly s2 = mobius_s2(m, terms);
    NCPoly diff = substitute_inverses(normal_form(s1 - s2));

    // -(2Ha/c) sum_n n (-d/c)^(n-1) |z|^-2n zb^(n-1)
    NCPoly expect;
    GaussianRational ratio = -(m.d / m.c);
    GaussianRational coef = GaussianRational(-2) * m.a / m.c;
    GaussianRational power(1);
    for (int n = 1; n <= terms; ++n) {
        NCKey k;
        k.hdeg = 1;
        k.modpow = -n;
        k.word = Word(static_cast<size_t>(n - 1), Letter::Zb);
        expect.add_term(std::move(k), coef * gr(n) * power);
        power *= ratio;
    }
    CHECK(diff == expect);

    // a = 0 kills the difference at every truncation.
    MobiusCoeffs m0(gr(0), gr(-1), gr(1), gr(1));  // det = 0*1 - (-1)*1 = 1
    for (int t = 1; t <= 5; ++t) {
        CHECK(normal_form(mobius_s1(m0, t) - mobius_s2(m0, t)).is_zero());
    }

    // H = 0 specialization: S1 = S2 for all truncations.
    for (int t = 1; t <= 5; ++t) {
        CHECK(at_h_zero(mobius_s1(m, t)) == at_h_zero(mobius_s2(m, t)));
    }
}

TEST_CASE("moebius decomposition composes to the closed form") {
    MobiusCoeffs m(gr(1), gr(0), gr(1), gr(1));
    auto maps = mobius_decompose(m);
    CHECK(maps[0].kind == MapKind::Translate);
    CHECK(maps[1].kind == MapKind::InvertStep);
    CHECK(maps[2].kind == MapKind::Dilate);
    CHECK(maps[3].kind == MapKind::Translate);

    std::mt19937_64 rng(8181u);
    for (int i = 0; i < 10; ++i) {
        double re = (static_cast<double>(rng() % 2000) / 500.0) + 1.5;
        double im = (static_cast<double>(rng() % 2000) / 500.0) - 2.0;
        std::complex<double> z{re, im};
        std::complex<double> w = z;
        for (auto& mp : maps) w = mp.apply(w);
        std::complex<double> closed = mobius_closed_form(m, z);
        CHECK(std::abs(w - closed) <= 1e-12 * std::max(1.0, std::abs(closed)));

        // Inverse composition undoes the map.
        std::complex<double> back = w;
        for (auto it = maps.rbegin(); it != maps.rend(); ++it) back = it->apply_inverse(back);
        CHECK(std::abs(back - z) <= 1e-12 * std::max(1.0, std::abs(z)));
    }

    // (0,1,-1,0): z -> -1/z form; k = (bc-ad)/c^2 = -1, shifts 0.
    MobiusCoeffs inv(gr(0), gr(1), gr(-1), gr(0));
    auto maps2 = mobius_decompose(inv);
    CHECK(maps2[0].exact.value() == gr(0));
    CHECK(maps2[2].exact.value() == gr(-1));
    CHECK(maps2[3].exact.value() == gr(0));

    MobiusCoeffs affine_like(gr(1), gr(0), gr(0), gr(1));
    CHECK_THROWS_AS(mobius_decompose(affine_like), PreconditionError);
}

TEST_CASE("commutator transport factors") {
    CHECK(transport_commutator(ElementaryMap::translate(GaussianRational(rat(3), rat(1)))) ==
          HPolynomial(gr(1)));
    CHECK(transport_commutator(ElementaryMap::rotate_angle(3.14159 / 3.0)) == HPolynomial(gr(1)));
    CHECK(transport_commutator(ElementaryMap::dilate(gr(2))) == HPolynomial(gr(4)));
    // |lambda|^2 for a complex exact parameter 1 + i -> 2.
    CHECK(transport_commutator(ElementaryMap::dilate(GaussianRational(rat(1), rat(1)))) ==
          HPolynomial(gr(2)));
    CHECK_THROWS_AS(transport_commutator(ElementaryMap::invert_step()), PreconditionError);
    CHECK(inversion_choice_names().size() == 4);
}

TEST_CASE("primary field transforms") {
    // Weight (0,0), translate: pure substitution. phi = z zb.
    Symbol phi = Symbol::z() * Symbol::zb();
    Symbol got = primary_transform(phi, ConformalWeight{}, ElementaryMap::translate(gr(1)));
    Symbol expect = (Symbol::z() + Symbol::constant(HPolynomial(1))) *
                    (Symbol::zb() + Symbol::constant(HPolynomial(1)));
    CHECK(got == expect);

    // Weight (1,1), dilate 2: Phi -> 4 Phi(2z, 2zb).
    ConformalWeight w11{rat(1), rat(1)};
    Symbol got2 = primary_transform(phi, w11, ElementaryMap::dilate(gr(2)));
    CHECK(got2 == phi.scaled(gr(16)));  // 4 * (2z)(2zb)

    // Measure factor: dz' dzb' = |lambda|^2 dz dzb.
    CHECK(measure_jacobian(ElementaryMap::dilate(gr(2))) == gr(4));
    CHECK(measure_jacobian(ElementaryMap::translate(gr(5))) == gr(1));

    // Inversion with integer weights: phi = z, weight (1,0):
    // (-z^-2)^1 phi(1/z) = -z^-2 z^-1 = -z^-3.
    Symbol got3 = primary_transform(Symbol::z(), ConformalWeight{rat(1), rat(0)},
                                    ElementaryMap::invert_step());
    CHECK(got3 == Symbol::monomial(rat(-3), rat(0), HPolynomial(gr(-1))));
    CHECK_THROWS_AS(primary_transform(Symbol::z(), ConformalWeight{rat(1, 2), rat(0)},
                                      ElementaryMap::invert_step()),
                    PreconditionError);
}

TEST_CASE("virasoro bracket bound and a couple of entries") {
    CHECK(virasoro_bracket(1, 2) == virasoro_generator(3).scaled(gr(-1)));
    CHECK(virasoro_bracket(2, -1) == virasoro_generator(1).scaled(gr(3)));
    CHECK_THROWS_AS(virasoro_bracket(7, 0), PreconditionError);
    CHECK(make_virasoro(-2).op ==
          DiffOpPoly::from_coeff(NCPoly::generator_power(Letter::Z, -1).scaled(gr(-1)), 1, 0));
}

TEST_CASE("virasoro similarity printed forms") {
    // n=-1, l=2: z^2 - 2z + 2
    auto r = virasoro_similarity(-1, 2);
    CHECK(r.tag == SimilarityResult::ScalarTag::None);
    NCPoly expect = NCPoly::generator_power(Letter::Z, 2) +
                    NCPoly::generator_power(Letter::Z, 1).scaled(gr(-2)) + NCPoly::scalar(gr(2));
    CHECK(r.poly == expect);

    // n=0, l=1: e^{-1} z
    auto r2 = virasoro_similarity(0, 1);
    CHECK(r2.tag == SimilarityResult::ScalarTag::ExpScalar);
    CHECK(r2.tag_exponent == -1);
    CHECK(r2.poly == NCPoly::generator_power(Letter::Z, 1));

    // l=0 -> 1 for all supported n.
    for (int n : {-1, 0, 1}) {
        auto rz = virasoro_similarity(n, 0);
        CHECK(rz.poly == NCPoly::one());
        CHECK(rz.tag == SimilarityResult::ScalarTag::None);
    }

    // n=1, l=1: e^{-z} z as a truncated series: z - z^2 + z^3/2 - ...
    auto r3 = virasoro_similarity(1, 1, 3);
    CHECK(r3.tag == SimilarityResult::ScalarTag::TruncatedSeries);
    NCPoly expect3 = NCPoly::generator_power(Letter::Z, 1) +
                     NCPoly::generator_power(Letter::Z, 2).scaled(gr(-1)) +
                     NCPoly::generator_power(Letter::Z, 3).scaled(gr(1, 2)) +
                     NCPoly::generator_power(Letter::Z, 4).scaled(gr(-1, 6));
    CHECK(r3.poly == expect3);

    CHECK_THROWS_AS(virasoro_similarity(2, 1), PreconditionError);
    CHECK_THROWS_AS(virasoro_similarity(-1, -1), PreconditionError);
}

TEST_CASE("sl(2) closure with zero H corrections") {
    for (int m = -1; m <= 1; ++m) {
        for (int n = -1; n <= 1; ++n) {
            DiffOpPoly b = virasoro_bracket(m, n);
            DiffOpPoly classical = virasoro_generator(m + n).scaled(gr(m - n));
            CHECK(b == classical);
            DiffOpPoly canon = b.canonical();
            for (auto& [k, c] : canon.terms()) CHECK(c.max_hdeg() == 0);
        }
    }
}

TEST_CASE("translate and rotate keep the canonical bracket") {
    // The induced linear map on (z, zb) for translate is the identity on
    // differentials; for rotation diag(u, ub) with u ub = 1.
    GaussianRational rot[2][2] = {{GaussianRational(rat(0), rat(1)), gr(0)},
                                  {gr(0), GaussianRational(rat(0), rat(-1))}};
    CHECK(check_canonical(rot));
    GaussianRational id2[2][2] = {{gr(1), gr(0)}, {gr(0), gr(1)}};
    CHECK(check_canonical(id2));
    GaussianRational dil[2][2] = {{gr(2), gr(0)}, {gr(0), gr(1, 2)}};
    CHECK(check_canonical(dil));  // det 1: canonical even though not unitary
}
