// One-dimensional formal Laurent series z = P(t) with exact coefficients,
// series reversion, and the pullback of the Moyal star product through an
// invertible P (chain-rule factors u(t) = (P^-1)'(P(t)) = 1/P'(t)).
#pragma once

#include <map>

#include "starplane/symbol.hpp"

namespace starplane {

class FormalSeries1D {
  public:
    using TermMap = std::map<int, GaussianRational>;

    FormalSeries1D() = default;

    static FormalSeries1D identity();  // P(t) = t
    static FormalSeries1D monomial(int n, GaussianRational c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(int n, const GaussianRational& c);

    FormalSeries1D& operator+=(const FormalSeries1D& o);
    friend FormalSeries1D operator+(FormalSeries1D a, const FormalSeries1D& b) { return a += b; }
    friend FormalSeries1D operator*(const FormalSeries1D& a, const FormalSeries1D& b);
    friend bool operator==(const FormalSeries1D& a, const FormalSeries1D& b) {
        return a.terms_ == b.terms_;
    }

    FormalSeries1D scaled(const GaussianRational& c) const;
    FormalSeries1D truncated(int max_exp) const;
    FormalSeries1D derivative() const;
    GaussianRational coeff(int n) const;
    int min_exponent() const;

    // Composition p(q) truncated at degree max_exp; q must have only positive
    // exponents.
    FormalSeries1D compose(const FormalSeries1D& q, int max_exp) const;

    bool invertible_for_reversion() const;

  private:
    TermMap terms_;
};

// q with p(q(w)) = w up to O(w^(terms+1)); requires p = a1 t + a2 t^2 + ...,
// a1 != 0.
FormalSeries1D series_revert(const FormalSeries1D& p, int terms);

// 1 / P'(t) as a power series in t, truncated at degree max_exp.
FormalSeries1D reciprocal_derivative(const FormalSeries1D& p, int max_exp);

struct PullbackConfig {
    int order = 2;    // star H-truncation
    int t_order = 8;  // series truncation in t (and tb)
};

// The transported star on symbols in (t, tb):
//   sum_n H^n/n! sum_k C(n,k)(-1)^k [(u d_t)^{n-k} (ub d_tb)^k f]
//                                   [(ub d_tb)^{n-k} (u d_t)^k g]
// with u = (P^-1)'(P(t)) computed from series_revert. At P(t) = t this is
// moyal_star.
Symbol pullback_star(const FormalSeries1D& p, const Symbol& f, const Symbol& g,
                     const PullbackConfig& cfg);

}  // namespace starplane
