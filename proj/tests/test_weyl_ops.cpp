#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "starplane/weyl_ops.hpp"

using namespace starplane;

namespace {
NCPoly zpow(int n) { return NCPoly::generator_power(Letter::Z, n); }
NCPoly zbpow(int n) { return NCPoly::generator_power(Letter::Zb, n); }
NCPoly h(int k = 1) { return NCPoly::h_power(k); }

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
    return r;
}
}  // namespace

TEST_CASE("weyl ordering examples") {
    // (z zb)_W = z zb - H
    CHECK(weyl_order({Letter::Z, Letter::Zb}) ==
          normal_form(zpow(1) * zbpow(1) - h()));
    // (z zb^2)_W = z zb^2 - 2H zb
    CHECK(weyl_order({Letter::Z, Letter::Zb, Letter::Zb}) ==
          normal_form(zpow(1) * zbpow(2) - h().scaled(GaussianRational(2)) * zbpow(1)));
    // (z z)_W = z^2
    CHECK(weyl_order({Letter::Z, Letter::Z}) == zpow(2));
    CHECK_THROWS_AS(weyl_order(Word(9, Letter::Z)), PreconditionError);

    // Against a direct permutation-average oracle for a mixed word.
    auto avg = oracle::normalize_all([] {
        oracle::Terms t;
        const char* perms[] = {"zzbb", "zbzb", "zbbz", "bzzb", "bzbz", "bbzz"};
        for (const char* p : perms) oracle::add(t, 0, p, GaussianRational(rat(1, 6)));
        return t;
    }());
    CHECK(weyl_order({Letter::Z, Letter::Z, Letter::Zb, Letter::Zb}) == oracle::to_ncpoly(avg));
}

TEST_CASE("left and right derivatives") {
    // d/dz (z^3 zb^2) = 3 z^2 zb^2
    NCPoly p = zpow(3) * zbpow(2);
    CHECK(left_derivative_z(p) == (zpow(2) * zbpow(2)).scaled(GaussianRational(3)));
    // (z^3 zb^2) <- d/dzb = 2 z^3 zb
    CHECK(right_derivative_zbar(p) == (zpow(3) * zbpow(1)).scaled(GaussianRational(2)));
    // Central factors are constants.
    CHECK(left_derivative_z(h() * NCPoly::r2_power(1)).is_zero());
    // Eq. 78 pattern: d/dz nf([z^3, zb^3]) = 3 nf([z^2, zb^3])
    CHECK(left_derivative_z(commutator(zpow(3), zbpow(3))) ==
          commutator(zpow(2), zbpow(3)).scaled(GaussianRational(3)));
    CHECK(right_derivative_zbar(commutator(zpow(3), zbpow(3))) ==
          commutator(zpow(3), zbpow(2)).scaled(GaussianRational(3)));
    // Frozen value: d/dz nf([z^3, zb^3]) = 36 H z zb^2 - 72 H^2 zb.
    CHECK(left_derivative_z(commutator(zpow(3), zbpow(3))) ==
          normal_form((zpow(1) * zbpow(2) * h()).scaled(GaussianRational(36)) -
                      (zbpow(1) * h(2)).scaled(GaussianRational(72))));
    // Errors: non-canonical input; inverse letters.
    CHECK_THROWS_AS(left_derivative_z(NCPoly::from_word({Letter::Zb, Letter::Z})),
                    PreconditionError);
    CHECK_THROWS_AS(left_derivative_z(NCPoly::from_word({Letter::Zi})), PreconditionError);
}

TEST_CASE("kaehler metric is the constant scale/2") {
    CHECK(kaehler_metric(GaussianRational(1)) == NCPoly::scalar(GaussianRational(rat(1, 2))));
    CHECK(kaehler_metric(GaussianRational(2)) == NCPoly::one());
    CHECK(kaehler_metric(GaussianRational(0)).is_zero());
}

TEST_CASE("conjugation by exponentials") {
    // e^z zb^2 e^-z = zb^2 + 4H zb + 4H^2
    NCPoly got = conjugate_by_exp(ExpDirection::Z, GaussianRational(1), zbpow(2));
    CHECK(got == normal_form(zbpow(2) + (zbpow(1) * h()).scaled(GaussianRational(4)) +
                             h(2).scaled(GaussianRational(4))));
    // z^n is fixed.
    CHECK(conjugate_by_exp(ExpDirection::Z, GaussianRational(1), zpow(5)) == zpow(5));
    // e^{-zb} z^3 e^{zb} = z^3 + 6Hz^2 + 12H^2 z + 8H^3 = (z + 2H)^3
    NCPoly got2 = conjugate_by_exp(ExpDirection::Zb, GaussianRational(1), zpow(3));
    CHECK(got2 == normal_form(zpow(3) + (zpow(2) * h()).scaled(GaussianRational(6)) +
                              (zpow(1) * h(2)).scaled(GaussianRational(12)) +
                              h(3).scaled(GaussianRational(8))));
    CHECK_THROWS_AS(conjugate_by_exp(ExpDirection::Z, GaussianRational(1),
                                     NCPoly::from_word({Letter::Zi})),
                    PreconditionError);
}

TEST_CASE("Eq. 62 closed form for n up to 10") {
    for (long n = 0; n <= 10; ++n) {
        NCPoly got = conjugate_by_exp(ExpDirection::Z, GaussianRational(1), zbpow(static_cast<int>(n)));
        NCPoly expect;
        for (long k = 0; k <= n; ++k) {
            long c = binom(n, k) * (1L << k);
            expect += (zbpow(static_cast<int>(n - k)) * h(static_cast<int>(k)))
                          .scaled(GaussianRational(c));
        }
        CHECK(got == normal_form(expect));
    }
}

TEST_CASE("conjugation matches the iterated-commutator oracle") {
    for (int n = 1; n <= 6; ++n) {
        GaussianRational alpha(rat(n % 3 + 1, 2));
        NCPoly target = zpow(2) * zbpow(n);
        NCPoly got = conjugate_by_exp(ExpDirection::Z, alpha, target);
        std::string w = "zz" + std::string(static_cast<size_t>(n), 'b');
        auto ora = oracle::conjugate_exp_z(alpha, oracle::from_string(w));
        CHECK(got == normal_form(oracle::to_ncpoly(ora)));
    }
}

TEST_CASE("nested commutator identity Eq. 60") {
    for (int l = 1; l <= 5; ++l) {
        for (int n = 1; n <= 5; ++n) {
            NCPoly lhs = commutator(zpow(l), zbpow(n));
            NCPoly rhs;
            for (int i = 1; i <= l; ++i)
                rhs += zpow(i - 1) * zbpow(n - 1) * zpow(l - i);
            rhs = normal_form((h() * rhs).scaled(GaussianRational(2 * n)));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("iterated bracket ladder (derivative form)") {
    // m-fold [z, [z, ... [z, zb^n]]] = (2H)^m n!/(n-m)! zb^(n-m)
    for (int n = 2; n <= 6; ++n) {
        for (int m = 1; m < n; ++m) {
            NCPoly cur = zbpow(n);
            for (int i = 0; i < m; ++i) cur = commutator(zpow(1), cur);
            long fall = 1;
            for (int j = 0; j < m; ++j) fall *= (n - j);
            NCPoly expect = (zbpow(n - m) * h(m)).scaled(GaussianRational(fall * (1L << m)));
            CHECK(cur == normal_form(expect));
        }
    }
}

TEST_CASE("exp identities") {
    // exp_truncated(0) = 1
    CHECK(exp_truncated(NCPoly::zero()) == NCPoly::one());
    CHECK_THROWS_AS(exp_truncated(NCPoly::one()), PreconditionError);
    // Bare |z|^2 powers never leave the truncation window either.
    CHECK_THROWS_AS(exp_truncated(NCPoly::r2_power(1)), PreconditionError);

    // Eq. 37: e^{z+zb} = e^{-H} e^z e^{zb} at hOrder 6 / wordLen 8.
    const int ho = 6, wl = 8;
    const int wide = wl + 2 * ho;
    NCPoly lhs = exp_truncated(zpow(1) + zbpow(1), ho, wl);
    NCPoly eh = exp_truncated(h().scaled(GaussianRational(-1)), ho, wide);
    NCPoly ez = exp_truncated(zpow(1), ho, wide);
    NCPoly ezb = exp_truncated(zbpow(1), ho, wide);
    NCPoly rhs = normal_form_truncated(eh * ez * ezb, ho, wl);
    CHECK(verify_identity(lhs, rhs).equal);

    // ... = e^{H} e^{zb} e^{z} as well.
    NCPoly eh2 = exp_truncated(h(), ho, wide);
    NCPoly rhs2 = normal_form_truncated(eh2 * ezb * ez, ho, wl);
    CHECK(verify_identity(lhs, rhs2).equal);
}

TEST_CASE("one-parameter group relations Eq. 66/67") {
    const int ho = 6, wl = 8;
    const int wide = wl + 2 * ho;
    GaussianRational alpha(rat(1, 2)), beta(rat(2, 3)), abar(rat(1, 3));

    auto G = [&](const GaussianRational& a) { return exp_truncated(zpow(1).scaled(a), ho, wide); };
    auto Gbar = [&](const GaussianRational& ab) {
        return exp_truncated(zbpow(1).scaled(-ab), ho, wide);
    };

    // G(a) G(b) = G(a+b)
    CHECK(verify_identity(normal_form_truncated(G(alpha) * G(beta), ho, wl),
                          normal_form_truncated(G(alpha + beta), ho, wl))
              .equal);

    // G(b) Gbar(a) G(b)^-1 = e^{-2 H a b} Gbar(a)
    NCPoly lhs = normal_form_truncated(G(beta) * Gbar(abar) * G(-beta), ho, wl);
    NCPoly scale = exp_truncated(h().scaled(abar * beta * GaussianRational(-2)), ho, wide);
    NCPoly rhs = normal_form_truncated(scale * Gbar(abar), ho, wl);
    CHECK(verify_identity(lhs, rhs).equal);

    // Gbar(b) G(a) Gbar(b)^-1 = e^{2 H a b} G(a)
    NCPoly lhs2 = normal_form_truncated(Gbar(beta) * G(alpha) * Gbar(-beta), ho, wl);
    NCPoly scale2 = exp_truncated(h().scaled(alpha * beta * GaussianRational(2)), ho, wide);
    NCPoly rhs2 = normal_form_truncated(scale2 * G(alpha), ho, wl);
    CHECK(verify_identity(lhs2, rhs2).equal);
}

TEST_CASE("verify_identity on the Eq. 54 H expression") {
    // H = (1/2)(z^2 - zb^2) - (1/2)(z + zb)(z - zb)
    NCPoly re2im2 = (zpow(1) + zbpow(1)) * (zpow(1) - zbpow(1));
    NCPoly lhs = normal_form((zpow(2) - zbpow(2) - re2im2).scaled(GaussianRational(rat(1, 2))));
    CHECK(verify_identity(lhs, h()).equal);
    CHECK(verify_identity(NCPoly::zero(), NCPoly::zero()).equal);
    CHECK_FALSE(verify_identity(h(), NCPoly::zero()).equal);
}

TEST_CASE("geometric series relation Eq. 38") {
    for (int n = 1; n <= 6; ++n) {
        NCPoly s;
        for (int k = 0; k < n; ++k) s += zpow(k);
        NCPoly lhs = normal_form((NCPoly::one() - zpow(1)) * s);
        NCPoly rhs = normal_form(s * (NCPoly::one() - zpow(1)));
        NCPoly expect = NCPoly::one() - zpow(n);
        CHECK(lhs == expect);
        CHECK(rhs == expect);
    }
}
