// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances and runtime budgets are pinned in code.
#include <Eigen/Dense>

#include <chrono>
#include <complex>
#include <iostream>
#include <random>
#include <sstream>

#include "oracle.hpp"
#include "starplane/conformal.hpp"
#include "starplane/numeric.hpp"
#include "starplane/render.hpp"
#include "starplane/suite.hpp"
#include "starplane/weyl_ops.hpp"

using namespace starplane;

namespace {

int g_failures = 0;

class Criterion {
  public:
    Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

    void require(bool ok, const std::string& what) {
        if (!ok && detail_.empty()) detail_ = what;
        ok_ = ok_ && ok;
    }
    void budget_seconds(double limit) { budget_ = limit; }

    ~Criterion() {
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                             .count();
        bool in_budget = budget_ <= 0.0 || elapsed <= budget_;
        bool pass = ok_ && in_budget;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number_ << ": " << title_
                  << "  [" << elapsed << " s";
        if (budget_ > 0) std::cout << " / budget " << budget_ << " s";
        std::cout << "]";
        if (!pass && !detail_.empty()) std::cout << "  (" << detail_ << ")";
        if (!in_budget) std::cout << "  (over budget)";
        std::cout << "\n";
        if (!pass) ++g_failures;
    }

  private:
    int number_;
    std::string title_;
    std::chrono::steady_clock::time_point start_;
    double budget_ = 0.0;
    bool ok_ = true;
    std::string detail_;
};

NCPoly zp(int n) { return NCPoly::generator_power(Letter::Z, n); }
NCPoly zbp(int n) { return NCPoly::generator_power(Letter::Zb, n); }
NCPoly hp(int k = 1) { return NCPoly::h_power(k); }
NCPoly r2p(int m) { return NCPoly::r2_power(m); }
GaussianRational gr(long n, long d = 1) { return GaussianRational(rat(n, d)); }
Symbol smon(long a, long b, GaussianRational c = GaussianRational(1)) {
    return Symbol::monomial(rat(a), rat(b), HPolynomial(std::move(c)));
}

void criterion1() {
    Criterion c(1, "commutator golden table (Eqs. 13, 31, 52, 59) with the eq59 erratum");
    c.budget_seconds(1.0);

    c.require(verify_identity(commutator(zp(1), zbp(1)), hp().scaled(gr(2))).equal, "eq13 [z,zb]");
    c.require(commutator(zp(1), zp(1)).is_zero() && commutator(zbp(1), zbp(1)).is_zero(),
              "eq13 diagonals");
    for (int n = 1; n <= 5; ++n) {
        c.require(verify_identity(commutator(zp(1), zbp(n)), (hp() * zbp(n - 1)).scaled(gr(2 * n)))
                      .equal,
                  "eq31 [z, zb^n]");
        c.require(verify_identity(commutator(zp(n), zbp(1)), (hp() * zp(n - 1)).scaled(gr(2 * n)))
                      .equal,
                  "eq31 [z^n, zb]");
        c.require(verify_identity(substitute_inverses(commutator(zp(1), zp(-n))),
                                  (hp() * r2p(-n) * zbp(n - 1)).scaled(gr(2 * n)))
                      .equal,
                  "eq31 [z, z^-n]");
        c.require(verify_identity(commutator(zp(n), zp(-1)),
                                  (hp() * r2p(-1) * zp(n - 1)).scaled(gr(2 * n)))
                      .equal,
                  "eq31 [z^n, z^-1]");
    }

    // Eq. 52 star rows.
    StarConfig cfg(4);
    c.require(moyal_star(Symbol::z(), Symbol::zb(), cfg).value ==
                  smon(1, 1) + Symbol::constant(HPolynomial::h_power(1)),
              "eq52 z*zb");
    c.require(moyal_star(Symbol::zb(), Symbol::z(), cfg).value ==
                  smon(1, 1) - Symbol::constant(HPolynomial::h_power(1)),
              "eq52 zb*z");

    // Eq. 59: printed rows plus the erratum row pinned to the oracle value.
    c.require(verify_identity(commutator(zp(2), zbp(2)),
                              normal_form((hp() * zp(1) * zbp(1)).scaled(gr(8)) -
                                          hp(2).scaled(gr(8))))
                  .equal,
              "eq59 [z^2,zb^2]");
    c.require(verify_identity(commutator(zp(3), zbp(2)),
                              normal_form((hp() * zp(2) * zbp(1)).scaled(gr(12)) -
                                          (hp(2) * zp(1)).scaled(gr(24))))
                  .equal,
              "eq59 [z^3,zb^2]");
    auto ora = oracle::sub(oracle::mul(oracle::from_string("zzz"), oracle::from_string("bbb")),
                           oracle::mul(oracle::from_string("bbb"), oracle::from_string("zzz")));
    NCPoly got33 = commutator(zp(3), zbp(3));
    c.require(got33 == oracle::to_ncpoly(ora), "eq59 [z^3,zb^3] oracle");
    c.require(got33.terms().count(NCKey{2, 0, {Letter::Z, Letter::Zb}}) == 1 &&
                  got33.terms().at(NCKey{2, 0, {Letter::Z, Letter::Zb}}) == gr(-72),
              "eq59 [z^3,zb^3] -72 coefficient");
    auto erratum = run_suite("eq59.7");
    c.require(erratum.size() == 1 && erratum[0].status == SuiteStatus::PaperErratum &&
                  erratum[0].paper_value.find("88") != std::string::npos,
              "eq59.7 flagged as paper-erratum with the printed -88");
}

void criterion2() {
    Criterion c(2, "star-product golden table (Eqs. 52, 53, 55, 56, 58) at order 4");
    c.budget_seconds(1.0);
    StarConfig cfg(4);

    // Eq. 53 closed form, l,m <= 4, all terminating.
    for (long l = 1; l <= 4; ++l) {
        for (long m = 1; m <= 4; ++m) {
            auto r = moyal_star(smon(l, 0), smon(0, m), cfg);
            Symbol want;
            Rational inv_fact(1);
            for (long n = 0; n <= std::min(l, m); ++n) {
                if (n > 0) inv_fact /= n;
                long fl = 1, fm = 1;
                for (long j = 0; j < n; ++j) {
                    fl *= (l - j);
                    fm *= (m - j);
                }
                want += Symbol::monomial(rat(l - n), rat(m - n),
                                         HPolynomial::h_power(static_cast<int>(n),
                                                              GaussianRational(Rational(fl) *
                                                                               Rational(fm) *
                                                                               inv_fact)));
            }
            c.require(r.value == want && r.terminating, "eq53 closed form");
        }
    }

    // Eq. 55 rows (every printed row with a correction, plus collapses).
    auto H1 = [](GaussianRational cc) { return HPolynomial::h_power(1, std::move(cc)); };
    c.require(moyal_star(Symbol::z(), smon(0, -1), cfg).value ==
                  smon(1, -1) - smon(0, -2).scaled(H1(gr(1))),
              "eq55 z * zb^-1");
    c.require(moyal_star(Symbol::zb(), smon(-1, 0), cfg).value ==
                  smon(-1, 1) + smon(-2, 0).scaled(H1(gr(1))),
              "eq55 zb * z^-1");
    c.require(moyal_star(smon(-1, 0), Symbol::zb(), cfg).value ==
                  smon(-1, 1) - smon(-2, 0).scaled(H1(gr(1))),
              "eq55 z^-1 * zb");
    c.require(moyal_star(smon(0, -1), Symbol::z(), cfg).value ==
                  smon(1, -1) + smon(0, -2).scaled(H1(gr(1))),
              "eq55 zb^-1 * z");
    c.require(moyal_star(Symbol::z(), smon(-1, 0), cfg).value == smon(0, 0) &&
                  moyal_star(Symbol::zb(), smon(0, -1), cfg).value == smon(0, 0),
              "eq55 holomorphic pairs collapse");
    c.require(moyal_star(smon(-1, 0), smon(-1, 0), cfg).value == smon(-2, 0) &&
                  moyal_star(smon(0, -1), smon(0, -1), cfg).value == smon(0, -2),
              "eq55 z^-1 * z^-1 rows");
    c.require(moyal_star(smon(-1, 0), smon(0, -1), StarConfig(2)).value ==
                  smon(-1, -1) + smon(-2, -2).scaled(H1(gr(1))) +
                      smon(-3, -3).scaled(HPolynomial::h_power(2, gr(2))),
              "eq55 z^-1 * zb^-1");
    c.require(moyal_star(smon(0, -1), smon(-1, 0), StarConfig(2)).value ==
                  smon(-1, -1) - smon(-2, -2).scaled(H1(gr(1))) +
                      smon(-3, -3).scaled(HPolynomial::h_power(2, gr(2))),
              "eq55 zb^-1 * z^-1");

    // Eq. 56 series, l,m <= 3 at order 4.
    for (long l = 1; l <= 3; ++l) {
        for (long m = 1; m <= 3; ++m) {
            auto r = moyal_star(smon(l, 0), smon(0, -m), cfg);
            Symbol want;
            Rational inv_fact(1);
            for (long n = 0; n <= std::min<long>(l, cfg.order); ++n) {
                if (n > 0) inv_fact /= n;
                long fl = 1, rm = 1;
                for (long j = 0; j < n; ++j) {
                    fl *= (l - j);
                    rm *= (m + j);
                }
                GaussianRational cc(Rational(fl) * Rational(rm) * inv_fact);
                if (n % 2 != 0) cc = -cc;
                want += Symbol::monomial(rat(l - n), rat(-m - n),
                                         HPolynomial::h_power(static_cast<int>(n), cc));
            }
            c.require(r.value == want, "eq56 series");
        }
    }

    // Eq. 58 to H^2.
    auto r58 = moyal_star(Symbol::monomial(rat(1, 2), rat(0)), Symbol::monomial(rat(0), rat(1, 2)),
                          StarConfig(2));
    Symbol want58 = Symbol::monomial(rat(1, 2), rat(1, 2)) +
                    Symbol::monomial(rat(-1, 2), rat(-1, 2), HPolynomial::h_power(1, gr(1, 4))) +
                    Symbol::monomial(rat(-3, 2), rat(-3, 2), HPolynomial::h_power(2, gr(1, 32)));
    c.require(r58.value == want58 && !r58.terminating, "eq58 z^(1/2) * zb^(1/2)");
    auto r58b = moyal_star(Symbol::z(), Symbol::monomial(rat(0), rat(1, 2)), cfg);
    c.require(r58b.terminating &&
                  r58b.value == Symbol::monomial(rat(1), rat(1, 2)) +
                                    Symbol::monomial(rat(0), rat(-1, 2),
                                                     HPolynomial::h_power(1, gr(1, 2))),
              "eq58 z * zb^(1/2)");
    c.require(moyal_star(Symbol::monomial(rat(0), rat(1, 2)), Symbol::z(), cfg).value ==
                  Symbol::monomial(rat(1), rat(1, 2)) -
                      Symbol::monomial(rat(0), rat(-1, 2), HPolynomial::h_power(1, gr(1, 2))),
              "eq58 zb^(1/2) * z");
    c.require(moyal_star(Symbol::zb(), Symbol::monomial(rat(1, 2), rat(0)), cfg).value ==
                  Symbol::monomial(rat(1, 2), rat(1)) -
                      Symbol::monomial(rat(-1, 2), rat(0), HPolynomial::h_power(1, gr(1, 2))),
              "eq58 zb * z^(1/2)");
    c.require(moyal_star(Symbol::monomial(rat(1, 2), rat(0)), Symbol::zb(), cfg).value ==
                  Symbol::monomial(rat(1, 2), rat(1)) +
                      Symbol::monomial(rat(-1, 2), rat(0), HPolynomial::h_power(1, gr(1, 2))),
              "eq58 z^(1/2) * zb");
    c.require(moyal_star(Symbol::monomial(rat(1, 2), rat(0)), Symbol::monomial(rat(1, 2), rat(0)),
                         cfg)
                      .value == Symbol::z(),
              "eq58 z^(1/2) * z^(1/2) = z");
}

void criterion3() {
    Criterion c(3, "Moyal structure properties, 1000 random cases each (seeded)");
    std::mt19937_64 rng(0xACCE55u);
    auto random_laurent = [&](int terms, long span) {
        Symbol s;
        for (int t = 0; t < terms; ++t) {
            long a = static_cast<long>(rng() % (2 * span + 1)) - span;
            long b = static_cast<long>(rng() % (2 * span + 1)) - span;
            long num = static_cast<long>(rng() % 9) - 4;
            if (num == 0) num = 1;
            s += smon(a, b, gr(num));
        }
        return s;
    };

    int fail_h1 = 0, fail_assoc = 0, fail_holo = 0, fail_2h = 0;
    StarConfig cfg6(6);
    StarConfig cfg4(4);
    for (int trial = 0; trial < 1000; ++trial) {
        if (!h_derivative_check(random_laurent(3, 4), random_laurent(3, 4)).equal) ++fail_h1;
    }
    for (int trial = 0; trial < 1000; ++trial) {
        Symbol f = random_laurent(2, 4), g = random_laurent(2, 4), k = random_laurent(2, 4);
        Symbol lhs = moyal_star(moyal_star(f, g, cfg6).value, k, cfg6).value;
        Symbol rhs = moyal_star(f, moyal_star(g, k, cfg6).value, cfg6).value;
        for (int ord = 0; ord <= 6; ++ord)
            if (!(lhs.h_coefficient(ord) == rhs.h_coefficient(ord))) {
                ++fail_assoc;
                break;
            }
    }
    for (int trial = 0; trial < 1000; ++trial) {
        Symbol f, g;
        for (int t = 0; t < 3; ++t) {
            f += smon(static_cast<long>(rng() % 9) - 4, 0, gr(static_cast<long>(rng() % 7) - 3));
            g += smon(static_cast<long>(rng() % 9) - 4, 0, gr(static_cast<long>(rng() % 7) - 3));
        }
        auto r = moyal_star(f, g, cfg6);
        if (!(r.value == f * g)) ++fail_holo;
    }
    for (int trial = 0; trial < 1000; ++trial) {
        long a = 1 + static_cast<long>(rng() % 6);
        Symbol zs = Symbol::z().scaled(gr(a));
        Symbol zbs = Symbol::zb().scaled(gr(1, a));
        Symbol d = moyal_star(zs, zbs, cfg4).value - moyal_star(zbs, zs, cfg4).value;
        if (!(d == Symbol::constant(HPolynomial::h_power(1, gr(2))))) ++fail_2h;
    }
    c.require(fail_h1 == 0, "H^1 = Poisson failures");
    c.require(fail_assoc == 0, "associativity failures");
    c.require(fail_holo == 0, "holomorphic collapse failures");
    c.require(fail_2h == 0, "star(z,zb)-star(zb,z) = 2H failures");
}

void criterion4() {
    Criterion c(4, "rewriting soundness: confluence + substitution consistency, 1000 cases");
    std::mt19937_64 rng(0x50DA5u);
    auto random_word = [&](int max_len) {
        int len = 1 + static_cast<int>(rng() % static_cast<unsigned long>(max_len));
        Word w;
        for (int i = 0; i < len; ++i) w.push_back(static_cast<Letter>(rng() % 4));
        return w;
    };
    // Random-admissible-order rewriter over the public rule table.
    auto random_nf = [&](const NCPoly& p) {
        NCPoly::TermMap work(p.terms());
        NCPoly out;
        while (!work.empty()) {
            NCPoly::TermMap next;
            auto push = [&](NCKey key, const GaussianRational& cc) {
                if (cc.is_zero()) return;
                auto [it, inserted] = next.try_emplace(std::move(key), cc);
                if (!inserted) {
                    it->second += cc;
                    if (it->second.is_zero()) next.erase(it);
                }
            };
            for (auto& [key, coeff] : work) {
                std::vector<size_t> descents;
                for (size_t i = 0; i + 1 < key.word.size(); ++i)
                    if (static_cast<int>(key.word[i]) > static_cast<int>(key.word[i + 1]))
                        descents.push_back(i);
                if (descents.empty()) {
                    out.add_term(key, coeff);
                    continue;
                }
                size_t pos = descents[rng() % descents.size()];
                Letter hi = key.word[pos], lo = key.word[pos + 1];
                NCKey swapped = key;
                std::swap(swapped.word[pos], swapped.word[pos + 1]);
                push(std::move(swapped), coeff);
                int sign = 0, r2pow = 0;
                if (letter_commutator(hi, lo, sign, r2pow)) {
                    NCKey corr;
                    corr.hdeg = key.hdeg + 1;
                    corr.modpow = key.modpow + r2pow;
                    corr.word.insert(corr.word.end(), key.word.begin(), key.word.begin() + pos);
                    corr.word.insert(corr.word.end(), key.word.begin() + pos + 2, key.word.end());
                    push(std::move(corr), coeff * GaussianRational(2 * sign));
                }
            }
            work = std::move(next);
        }
        return out;
    };

    int fail_confluence = 0, fail_subst = 0, fail_h0 = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        NCPoly p = NCPoly::from_word(random_word(8));
        if (!(normal_form(p) == random_nf(p))) ++fail_confluence;
    }
    for (int trial = 0; trial < 1000; ++trial) {
        NCPoly p = NCPoly::from_word(random_word(8));
        if (!(substitute_inverses(normal_form(p)) == normal_form(substitute_inverses(p))))
            ++fail_subst;
    }
    for (int trial = 0; trial < 1000; ++trial) {
        NCPoly p = NCPoly::from_word(random_word(8));
        if (!(at_h_zero(normal_form(p)) == at_h_zero(p))) ++fail_h0;
    }
    c.require(fail_confluence == 0, "confluence failures");
    c.require(fail_subst == 0, "substitution consistency failures");
    c.require(fail_h0 == 0, "H = 0 specialization failures");
}

void criterion5() {
    Criterion c(5, "exponential identities: Eq. 37, Eq. 67 at (6, 8); Eq. 62 for n <= 10");
    const int ho = 6, wl = 8, wide = wl + 2 * ho;
    NCPoly lhs = exp_truncated(zp(1) + zbp(1), ho, wl);
    NCPoly rhs = normal_form_truncated(exp_truncated(hp().scaled(gr(-1)), ho, wide) *
                                           exp_truncated(zp(1), ho, wide) *
                                           exp_truncated(zbp(1), ho, wide),
                                       ho, wl);
    c.require(verify_identity(lhs, rhs).equal, "eq37 truncated difference nonzero");

    GaussianRational abar(rat(1, 3)), beta(rat(2, 3));
    auto G = [&](const GaussianRational& s) { return exp_truncated(zp(1).scaled(s), ho, wide); };
    auto Gb = [&](const GaussianRational& s) { return exp_truncated(zbp(1).scaled(-s), ho, wide); };
    NCPoly lhs67 = normal_form_truncated(G(beta) * Gb(abar) * G(-beta), ho, wl);
    NCPoly rhs67 = normal_form_truncated(
        exp_truncated(hp().scaled(abar * beta * gr(-2)), ho, wide) * Gb(abar), ho, wl);
    c.require(verify_identity(lhs67, rhs67).equal, "eq67 conjugation difference nonzero");

    GaussianRational alpha(rat(1, 2)), bbar(rat(1, 4));
    NCPoly lhs67b = normal_form_truncated(Gb(bbar) * G(alpha) * Gb(-bbar), ho, wl);
    NCPoly rhs67b = normal_form_truncated(
        exp_truncated(hp().scaled(alpha * bbar * gr(2)), ho, wide) * G(alpha), ho, wl);
    c.require(verify_identity(lhs67b, rhs67b).equal, "eq67 second conjugation");

    for (long n = 0; n <= 10; ++n) {
        NCPoly got = conjugate_by_exp(ExpDirection::Z, gr(1), zbp(static_cast<int>(n)));
        NCPoly want;
        long b = 1;
        for (long k = 0; k <= n; ++k) {
            want += (zbp(static_cast<int>(n - k)) * hp(static_cast<int>(k)))
                        .scaled(gr(b * (1L << k)));
            b = b * (n - k) / (k + 1);
        }
        c.require(verify_identity(got, normal_form(want)).equal, "eq62 closed form");
    }
}

void criterion6() {
    Criterion c(6, "Virasoro bracket table, sl(2) Jacobi, Eq. 140 similarity forms");
    auto L = [](int n) { return virasoro_generator(n); };

    struct Pair {
        int m, n;
    };
    // Classical rows m, n >= -1 from the listed set.
    for (Pair p : {Pair{0, 1}, Pair{0, -1}, Pair{1, 1}, Pair{1, -1}, Pair{2, -1}, Pair{1, 2}}) {
        DiffOpPoly got = virasoro_bracket(p.m, p.n);
        DiffOpPoly want = L(p.m + p.n).scaled(gr(p.m - p.n));
        bool ok = got == want;
        if (!ok) ok = got == oracle::diffop_oracle_commutator(L(p.m), L(p.n));
        c.require(ok, "classical row mismatch");
    }
    // Deformed rows against the printed right-hand sides.
    {
        DiffOpPoly got = virasoro_bracket(0, 2);
        c.require(got == L(2).scaled(gr(-2)), "[L0, L2]");
        DiffOpPoly got2 = virasoro_bracket(0, -2);
        DiffOpPoly paper =
            diffop_compose(DiffOpPoly::from_coeff(normal_form(zp(1) * zp(-1) + NCPoly::one())),
                           L(-2)) +
            diffop_compose(DiffOpPoly::from_coeff((hp() * r2p(-1)).scaled(gr(2))),
                           diffop_compose(L(-1), L(-1)));
        c.require(got2 == paper && got2 == oracle::diffop_oracle_commutator(L(0), L(-2)),
                  "[L0, L-2]");
        DiffOpPoly got3 = virasoro_bracket(1, -2);
        NCPoly pref = normal_form(zp(2) * zp(-2) + (zp(1) * zp(-1)).scaled(gr(2)) -
                                  (hp() * r2p(-1)).scaled(gr(4)));
        DiffOpPoly paper3 =
            diffop_compose(DiffOpPoly::from_coeff(pref), L(-1)) +
            diffop_compose(DiffOpPoly::from_coeff((hp() * r2p(-1)).scaled(gr(4))),
                           diffop_compose(L(0), L(-1)));
        c.require(got3 == paper3 && got3 == oracle::diffop_oracle_commutator(L(1), L(-2)),
                  "[L1, L-2]");
        DiffOpPoly got4 = virasoro_bracket(2, -2);
        NCPoly pref4 = normal_form(zp(3) * zp(-2) + (zp(-1) * zp(2)).scaled(gr(3)));
        DiffOpPoly paper4 =
            diffop_compose(DiffOpPoly::from_coeff(pref4), L(-1)) +
            diffop_compose(DiffOpPoly::from_coeff((hp() * r2p(-1)).scaled(gr(6))),
                           diffop_compose(L(1), L(-1)));
        c.require(got4 == paper4 && got4 == oracle::diffop_oracle_commutator(L(2), L(-2)),
                  "[L2, L-2]");
    }
    DiffOpPoly jac = diffop_commutator(L(1), virasoro_bracket(0, -1)) +
                     diffop_commutator(L(0), virasoro_bracket(-1, 1)) +
                     diffop_commutator(L(-1), virasoro_bracket(1, 0));
    c.require(jac.is_zero(), "sl(2) Jacobi");

    auto s1 = virasoro_similarity(-1, 2);
    c.require(verify_identity(s1.poly, zp(2) + zp(1).scaled(gr(-2)) + NCPoly::scalar(gr(2))).equal,
              "eq140 n=-1 l=2");
    auto s2 = virasoro_similarity(0, 3);
    c.require(s2.tag == SimilarityResult::ScalarTag::ExpScalar && s2.tag_exponent == -3 &&
                  verify_identity(s2.poly, zp(3)).equal,
              "eq140 n=0 l=3");
    auto s3 = virasoro_similarity(1, 2, 4);
    NCPoly want3 = zp(2) + zp(3).scaled(gr(-2)) + zp(4).scaled(gr(2)) + zp(5).scaled(gr(-4, 3)) +
                   zp(6).scaled(gr(2, 3));
    c.require(s3.tag == SimilarityResult::ScalarTag::TruncatedSeries &&
                  verify_identity(s3.poly, want3).equal,
              "eq140 n=1 l=2 series");
}

void criterion7() {
    Criterion c(7, "contour integrals: six Eq. 92 families at r in {1, 17/10}");
    c.budget_seconds(5.0);
    NumericEnv env{{0.0, 0.1}, 8};
    for (Rational r : {rat(1), rat(17, 10)}) {
        ContourSpec spec(r, 128);
        auto zzb = contour_integral_circle(commutator(zp(1), zbp(1)), spec, env);
        c.require(zzb.exact_over_2pii.is_zero() && zzb.rel_error <= 1e-9, "[z,zb] family");
        auto zzi = contour_integral_circle(commutator(zp(1), zp(-1)), spec, env);
        c.require(zzi.exact_over_2pii.is_zero() && zzi.rel_error <= 1e-9, "[z,z^-1] family");
        for (int n = 1; n <= 6; ++n) {
            auto a = contour_integral_circle(commutator(zp(1), zbp(n)), spec, env);
            if (n == 2)
                c.require(a.exact_over_2pii ==
                              HPolynomial::h_power(1, GaussianRational(Rational(4) * r * r)),
                          "[z,zb^2] = 8 pi i H r^2");
            else
                c.require(a.exact_over_2pii.is_zero(), "[z,zb^n] vanishes for n != 2");
            c.require(a.rel_error <= 1e-9, "[z,zb^n] numeric agreement");

            auto b = contour_integral_circle(commutator(zp(n), zbp(1)), spec, env);
            c.require(b.exact_over_2pii.is_zero() && b.rel_error <= 1e-9, "[z^n,zb] family");

            auto d = contour_integral_circle(commutator(zp(1), zp(-n)), spec, env);
            if (n == 2)
                c.require(d.exact_over_2pii ==
                              HPolynomial::h_power(1, GaussianRational(Rational(4) / (r * r))),
                          "[z,z^-2] = 8 pi i H r^-2");
            else
                c.require(d.exact_over_2pii.is_zero(), "[z,z^-n] vanishes for n != 2");
            c.require(d.rel_error <= 1e-9, "[z,z^-n] numeric agreement");

            auto f = contour_integral_circle(commutator(zp(n), zp(-1)), spec, env);
            c.require(f.exact_over_2pii.is_zero() && f.rel_error <= 1e-9, "[z^n,z^-1] family");
        }
    }
}

void criterion8() {
    Criterion c(8, "Moebius: Eq. 126 to 5 terms, H = 0 degeneracy, Eq. 128/129 numerics");
    MobiusCoeffs m(gr(1), gr(0), gr(1), gr(1));
    const int terms = 5;
    NCPoly diff = substitute_inverses(normal_form(mobius_s1(m, terms) - mobius_s2(m, terms)));
    NCPoly expect;
    GaussianRational ratio = -(m.d / m.c);
    GaussianRational coef = gr(-2) * m.a / m.c;
    GaussianRational power(1);
    for (int n = 1; n <= terms; ++n) {
        NCKey k;
        k.hdeg = 1;
        k.modpow = -n;
        k.word = Word(static_cast<size_t>(n - 1), Letter::Zb);
        expect.add_term(std::move(k), coef * gr(n) * power);
        power *= ratio;
    }
    c.require(diff == expect, "eq126 difference series");
    for (int t = 1; t <= 5; ++t)
        c.require(at_h_zero(mobius_s1(m, t)) == at_h_zero(mobius_s2(m, t)), "H=0 => S1 = S2");

    auto maps = mobius_decompose(m);
    std::mt19937_64 rng(0xB0B1u);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        std::complex<double> z{2.0 + static_cast<double>(rng() % 1000) / 400.0,
                               -1.0 + static_cast<double>(rng() % 1000) / 400.0};
        std::complex<double> w = z;
        for (auto& mp : maps) w = mp.apply(w);
        worst = std::max(worst, std::abs(w - mobius_closed_form(m, z)));
        std::complex<double> back = w;
        for (auto it = maps.rbegin(); it != maps.rend(); ++it) back = it->apply_inverse(back);
        worst = std::max(worst, std::abs(back - z));
    }
    c.require(worst <= 1e-12, "eq128/129 composition at 10 points");
}

void criterion9() {
    Criterion c(9, "Fredholm: rank-2 kernel, Neumann vs dense oracle, divergence detection");
    c.budget_seconds(30.0);
    NumericEnv env{{0.0, 0.1}, 8};
    auto q = QuadratureSpec::disc(1.0, 32);  // 32 nodes per axis
    KernelSpec k;
    k.terms.push_back({Symbol::z(), Symbol::zb()});
    k.terms.push_back({Symbol::zb(), Symbol::z().scaled(gr(1, 2))});
    Symbol f = Symbol::constant(HPolynomial(1)) + Symbol::z() + Symbol::zb().scaled(gr(1, 3));

    auto bound = operator_norm_bound(k, q, env);
    std::complex<double> lambda = 0.75 / bound.value;
    c.require(std::abs(lambda) * bound.value <= 0.8, "lambda within the guaranteed radius");
    auto r = neumann_solve(k, f, lambda, q, env, 500, true);
    c.require(r.converged, "Neumann converged");

    // Dense oracle: expand the operator на the monomial span of {f, phi_i}
    // and solve (I - lambda T) u = f directly.
    std::vector<PuiseuxMonomial> basis;
    auto add_monos = [&](const Symbol& s) {
        for (auto& [mono, cc] : s.terms()) {
            bool seen = false;
            for (auto& b : basis)
                if (b == mono) seen = true;
            if (!seen) basis.push_back(mono);
        }
    };
    add_monos(f);
    for (auto& t : k.terms) add_monos(t.first);
    const size_t dim = basis.size();
    auto nodes = build_nodes(q);
    auto integrate = [&](const NumSymbol& s) {
        std::vector<std::complex<double>> parts;
        parts.reserve(nodes.size());
        for (auto& n : nodes) parts.push_back(s.eval(n.z, std::conj(n.z)) * n.w);
        return pairwise_sum(parts);
    };
    std::vector<NumSymbol> phis, psis;
    for (auto& t : k.terms) {
        phis.push_back(NumSymbol::from_symbol(t.first, env.h));
        psis.push_back(NumSymbol::from_symbol(t.second, env.h));
    }
    auto coords = [&](const NumSymbol& s) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<long>(dim));
        for (auto& [mono, cc] : s.terms()) {
            bool placed = false;
            for (size_t b = 0; b < dim; ++b)
                if (basis[b] == mono) {
                    v(static_cast<long>(b)) = cc;
                    placed = true;
                }
            if (!placed) throw std::logic_error("basis does not span the iterate");
        }
        return v;
    };
    Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(static_cast<long>(dim), static_cast<long>(dim));
    for (size_t kk = 0; kk < dim; ++kk) {
        NumSymbol ek;
        ek.add_term(basis[kk], {1.0, 0.0});
        Eigen::VectorXcd col = Eigen::VectorXcd::Zero(static_cast<long>(dim));
        for (size_t i = 0; i < k.terms.size(); ++i) {
            std::complex<double> w = integrate(star_numeric(psis[i], ek, env.h, env.order));
            col += w * coords(phis[i]);
        }
        T.col(static_cast<long>(kk)) = col;
    }
    Eigen::VectorXcd fvec = coords(NumSymbol::from_symbol(f, env.h));
    Eigen::MatrixXcd A =
        Eigen::MatrixXcd::Identity(static_cast<long>(dim), static_cast<long>(dim)) - lambda * T;
    Eigen::VectorXcd uvec = A.partialPivLu().solve(fvec);
    NumSymbol u_dense;
    for (size_t b = 0; b < dim; ++b) u_dense.add_term(basis[b], uvec(static_cast<long>(b)));
    double worst = 0.0;
    for (size_t p = 0; p < nodes.size(); ++p) {
        std::complex<double> dense_val = u_dense.eval(nodes[p].z, std::conj(nodes[p].z));
        worst = std::max(worst, std::abs(dense_val - r.u_nodes[p]));
    }
    c.require(worst <= 1e-7, "Neumann limit vs dense solve");

    // Classical closed form at H = 0 for the rank-1 restriction.
    {
        NumericEnv env0{{0.0, 0.0}, 4};
        KernelSpec k1;
        k1.terms.push_back({Symbol::z(), Symbol::zb()});
        Symbol f1 = Symbol::constant(HPolynomial(1)) + Symbol::z();
        std::complex<double> lam{0.3, 0.1};
        auto r1 = neumann_solve(k1, f1, lam, q, env0, 500, true);
        NumSymbol fn = NumSymbol::from_symbol(f1, env0.h);
        NumSymbol phin = NumSymbol::from_symbol(Symbol::z(), env0.h);
        NumSymbol psin = NumSymbol::from_symbol(Symbol::zb(), env0.h);
        auto cexp = lam * integrate(psin * fn) / (1.0 - lam * integrate(psin * phin));
        c.require(r1.converged && std::abs(r1.phi_coefficients[0] - cexp) <= 1e-8,
                  "H = 0 closed form");
    }

    // Divergence detection well above the radius (|lambda| * bound >= 1.2).
    {
        std::complex<double> lam_div = 3.0 / bound.value;
        c.require(std::abs(lam_div) * bound.value >= 1.2, "divergence lambda scale");
        bool threw = false;
        try {
            neumann_solve(k, f, lam_div, q, env, 80);
        } catch (const DivergenceError&) {
            threw = true;
        }
        c.require(threw, "divergence detected");
    }
}

void criterion10() {
    Criterion c(10, "string action: pointwise identity and torus star coefficients");
    // Symbolic pointwise identity for 5 seeded random polynomial X.
    std::mt19937_64 rng(0x57A7u);
    for (int t = 0; t < 5; ++t) {
        Symbol X;
        for (int j = 0; j < 4; ++j)
            X += smon(static_cast<long>(rng() % 4), static_cast<long>(rng() % 4),
                      gr(static_cast<long>(rng() % 7) - 3));
        Symbol lhs = poisson_bracket(X.deriv_z(), X.deriv_zb());
        Symbol rhs = X.deriv_z().deriv_z() * X.deriv_zb().deriv_zb() -
                     X.deriv_z().deriv_zb() * X.deriv_z().deriv_zb();
        c.require(lhs == rhs, "pointwise identity {dX, dX} = det Hess");
    }
    // Torus quadrature of the H^1/H^2 star coefficients vs Gamma1/Gamma2.
    std::mt19937_64 rng2(0x57A8u);
    for (int t = 0; t < 5; ++t) {
        TrigPoly x(1.0, 1.0);
        for (int m = 0; m < 3; ++m) {
            long mm = 1 + static_cast<long>(rng2() % 2);
            long nn = static_cast<long>(rng2() % 3) - 1;
            double re = 0.1 + static_cast<double>(rng2() % 100) / 250.0;
            double im = static_cast<double>(rng2() % 100) / 500.0;
            x.add_term(mm, nn, {re, im});
            x.add_term(-mm, -nn, {re, -im});
        }
        auto r = string_action(x, 16);
        c.require(std::abs(r.star_h1 - r.gamma1) <= 1e-8, "H^1 coefficient vs Gamma1");
        c.require(std::abs(r.star_h2 - r.gamma2) <= 1e-8, "H^2 coefficient vs Gamma2");
    }
}

void criterion11() {
    Criterion c(11, "verify-suite: >= 60 entries, deterministic, only registered errata");
    c.budget_seconds(60.0);
    auto results = run_suite();
    c.require(results.size() >= 60, "entry count");
    auto summary = summarize(results);
    c.require(summary.failed == 0, "non-erratum failure present");
    c.require(summary.errata == 4, "registered errata count");
    auto again = run_suite();
    bool deterministic = results.size() == again.size();
    for (size_t i = 0; deterministic && i < results.size(); ++i) {
        deterministic = results[i].id == again[i].id &&
                        results[i].engine_value == again[i].engine_value &&
                        results[i].paper_value == again[i].paper_value &&
                        results[i].difference == again[i].difference;
    }
    c.require(deterministic, "outputs differ between runs");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    if (g_failures == 0)
        std::cout << "acceptance: all 11 criteria pass\n";
    else
        std::cout << "acceptance: " << g_failures << " criterion(s) failed\n";
    return g_failures;
}
