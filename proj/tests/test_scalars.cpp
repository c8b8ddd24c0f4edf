#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starplane/scalars.hpp"

using namespace starplane;

TEST_CASE("rational helpers") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-3, -6) == rat(1, 2));
    CHECK(rat(3, -6) == rat(-1, 2));
    CHECK(to_long(rat(7)) == 7);
    CHECK_THROWS_AS(rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(to_long(rat(1, 2)), std::domain_error);
}

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational a(rat(1), rat(2));   // 1 + 2i
    GaussianRational b(rat(3), rat(-1));  // 3 - i
    CHECK((a * b) == GaussianRational(rat(5), rat(5)));
    CHECK((a + b) == GaussianRational(rat(4), rat(1)));
    CHECK((a / a) == GaussianRational(1));
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
    CHECK(a.conj() == GaussianRational(rat(1), rat(-2)));
    CHECK_THROWS_AS(a / GaussianRational(0), std::domain_error);
}

TEST_CASE("gaussian rational rendering") {
    CHECK(to_string(GaussianRational(0)) == "0");
    CHECK(to_string(GaussianRational(rat(-2, 3))) == "-2/3");
    CHECK(to_string(GaussianRational::i()) == "i");
    CHECK(to_string(-GaussianRational::i()) == "-i");
    CHECK(to_string(GaussianRational(rat(0), rat(3))) == "3*i");
    CHECK(to_string(GaussianRational(rat(1), rat(1))) == "(1+i)");
    CHECK(to_string(GaussianRational(rat(2), rat(-3))) == "(2-3*i)");
}

TEST_CASE("H polynomial arithmetic and rendering") {
    HPolynomial p = HPolynomial::h_power(1, GaussianRational(2));  // 2H
    HPolynomial q = HPolynomial(GaussianRational(1)) + p;          // 1 + 2H
    CHECK(to_string(q) == "1 + 2*H");
    HPolynomial sq = q * q;
    CHECK(sq.coeff(0) == GaussianRational(1));
    CHECK(sq.coeff(1) == GaussianRational(4));
    CHECK(sq.coeff(2) == GaussianRational(4));
    CHECK(to_string(sq) == "1 + 4*H + 4*H^2");
    CHECK((q - q).is_zero());
    CHECK(sq.truncated(1).degree() == 1);

    HPolynomial m = HPolynomial::h_power(2, GaussianRational(rat(-1))) + HPolynomial(1);
    CHECK(to_string(m) == "1 - H^2");
}

TEST_CASE("H polynomial conjugation uses Hbar = -H") {
    // (i H)-bar = (-i)(-H) = i H : pure-imaginary-coefficient odd terms are fixed.
    HPolynomial p = HPolynomial::h_power(1, GaussianRational::i());
    CHECK(p.conj_hbar() == p);
    HPolynomial q = HPolynomial::h_power(1, GaussianRational(1));
    CHECK(q.conj_hbar() == -q);
    HPolynomial r = HPolynomial::h_power(2, GaussianRational(1));
    CHECK(r.conj_hbar() == r);
}

TEST_CASE("H polynomial numeric evaluation") {
    HPolynomial q = HPolynomial(GaussianRational(1)) + HPolynomial::h_power(2, GaussianRational(3));
    auto v = q.eval({0.0, 1.0});  // 1 + 3*(i)^2 = -2
    CHECK(v.real() == doctest::Approx(-2.0));
    CHECK(v.imag() == doctest::Approx(0.0));
}

TEST_CASE("pairwise sum is deterministic and exact on small input") {
    std::vector<std::complex<double>> xs{{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}};
    CHECK(pairwise_sum(xs).real() == doctest::Approx(15.0));
    CHECK(pairwise_sum({}).real() == 0.0);
}
