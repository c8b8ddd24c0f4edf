#include "starplane/series.hpp"

namespace starplane {

FormalSeries1D FormalSeries1D::identity() { return monomial(1, GaussianRational(1)); }

FormalSeries1D FormalSeries1D::monomial(int n, GaussianRational c) {
    FormalSeries1D s;
    s.add_term(n, c);
    return s;
}

void FormalSeries1D::add_term(int n, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(n, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FormalSeries1D& FormalSeries1D::operator+=(const FormalSeries1D& o) {
    for (auto& [n, c] : o.terms_) add_term(n, c);
    return *this;
}

FormalSeries1D operator*(const FormalSeries1D& a, const FormalSeries1D& b) {
    FormalSeries1D r;
    for (auto& [na, ca] : a.terms_)
        for (auto& [nb, cb] : b.terms_) r.add_term(na + nb, ca * cb);
    return r;
}

FormalSeries1D FormalSeries1D::scaled(const GaussianRational& c) const {
    FormalSeries1D r;
    if (c.is_zero()) return r;
    for (auto& [n, v] : terms_) r.add_term(n, v * c);
    return r;
}

FormalSeries1D FormalSeries1D::truncated(int max_exp) const {
    FormalSeries1D r;
    for (auto& [n, v] : terms_)
        if (n <= max_exp) r.add_term(n, v);
    return r;
}

FormalSeries1D FormalSeries1D::derivative() const {
    FormalSeries1D r;
    for (auto& [n, v] : terms_) {
        if (n == 0) continue;
        r.add_term(n - 1, v * GaussianRational(n));
    }
    return r;
}

GaussianRational FormalSeries1D::coeff(int n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? GaussianRational() : it->second;
}

int FormalSeries1D::min_exponent() const {
    if (terms_.empty()) throw PreconditionError("empty series has no minimal exponent");
    return terms_.begin()->first;
}

FormalSeries1D FormalSeries1D::compose(const FormalSeries1D& q, int max_exp) const {
    if (!q.terms_.empty() && q.min_exponent() < 1)
        throw PreconditionError("composition requires positive exponents in the inner series");
    FormalSeries1D out;
    for (auto& [n, c] : terms_) {
        if (n < 0) throw PreconditionError("composition with negative outer exponents");
        FormalSeries1D power = FormalSeries1D::monomial(0, GaussianRational(1));
        for (int i = 0; i < n; ++i) power = (power * q).truncated(max_exp);
        out += power.scaled(c);
    }
    return out.truncated(max_exp);
}

bool FormalSeries1D::invertible_for_reversion() const {
    if (terms_.empty()) return false;
    if (min_exponent() != 1) return false;
    return !coeff(1).is_zero();
}

FormalSeries1D series_revert(const FormalSeries1D& p, int terms) {
    if (!p.invertible_for_reversion())
        throw PreconditionError("series reversion requires P = a1 t + ..., a1 != 0");
    GaussianRational a1 = p.coeff(1);
    FormalSeries1D q = FormalSeries1D::monomial(1, GaussianRational(1) / a1);
    // Solve p(q(w)) = w degree by degree.
    for (int n = 2; n <= terms; ++n) {
        FormalSeries1D comp = p.compose(q, n);
        GaussianRational defect = comp.coeff(n);
        if (n == 1) defect -= GaussianRational(1);
        // p(q + e w^n) = p(q) + a1 e w^n + O(w^(n+1))
        q.add_term(n, -defect / a1);
    }
    return q;
}

FormalSeries1D reciprocal_derivative(const FormalSeries1D& p, int max_exp) {
    FormalSeries1D d = p.derivative();
    GaussianRational d0 = d.coeff(0);
    if (d0.is_zero())
        throw PreconditionError("series has no invertible derivative at the origin");
    if (d.min_exponent() < 0)
        throw PreconditionError("derivative has negative exponents; reciprocal not a power series");
    // Newton-free triangular inversion: u * d = 1.
    FormalSeries1D u = FormalSeries1D::monomial(0, GaussianRational(1) / d0);
    for (int n = 1; n <= max_exp; ++n) {
        GaussianRational acc;
        for (int k = 0; k < n; ++k) acc += u.coeff(k) * d.coeff(n - k);
        u.add_term(n, -acc / d0);
    }
    return u;
}

namespace {

// Applies (u * d/dt) on a symbol in (t, tb), truncating t-exponents.
Symbol apply_u_dt(const Symbol& s, const FormalSeries1D& u, int t_order) {
    Symbol d = s.deriv_z();
    Symbol out;
    for (auto& [m, c] : d.terms()) {
        for (auto& [n, uc] : u.terms()) {
            Rational a = m.a + n;
            if (a > t_order) continue;
            out += Symbol::monomial(a, m.b, c.scaled(uc));
        }
    }
    return out;
}

Symbol apply_ub_dtb(const Symbol& s, const FormalSeries1D& u, int t_order) {
    Symbol d = s.deriv_zb();
    Symbol out;
    for (auto& [m, c] : d.terms()) {
        for (auto& [n, uc] : u.terms()) {
            Rational b = m.b + n;
            if (b > t_order) continue;
            // ub has conjugated coefficients.
            out += Symbol::monomial(m.a, b, c.scaled(uc.conj()));
        }
    }
    return out;
}

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
    return r;
}

}  // namespace

Symbol pullback_star(const FormalSeries1D& p, const Symbol& f, const Symbol& g,
                     const PullbackConfig& cfg) {
    if (!p.invertible_for_reversion())
        throw PreconditionError("pullback star requires an invertible series");
    // u(t) = (P^-1)'(P(t)): differentiate the reverted series, compose back.
    FormalSeries1D q = series_revert(p, cfg.t_order + 2);
    FormalSeries1D u = q.derivative().compose(p, cfg.t_order + 1);

    Symbol result = f * g;
    // D1^{j} D2^{k} f with D1 = u d_t, D2 = ub d_tb.
    std::vector<std::vector<Symbol>> fd(cfg.order + 1), gd(cfg.order + 1);
    for (int i = 0; i <= cfg.order; ++i) {
        fd[i].resize(cfg.order + 1 - i);
        gd[i].resize(cfg.order + 1 - i);
    }
    fd[0][0] = f;
    gd[0][0] = g;
    for (int i = 1; i <= cfg.order; ++i) {
        fd[i][0] = apply_u_dt(fd[i - 1][0], u, cfg.t_order);
        gd[i][0] = apply_u_dt(gd[i - 1][0], u, cfg.t_order);
    }
    for (int i = 0; i <= cfg.order; ++i) {
        for (int k = 1; i + k <= cfg.order; ++k) {
            fd[i][k] = apply_ub_dtb(fd[i][k - 1], u, cfg.t_order);
            gd[i][k] = apply_ub_dtb(gd[i][k - 1], u, cfg.t_order);
        }
    }

    Rational inv_fact(1);
    for (int n = 1; n <= cfg.order; ++n) {
        inv_fact /= n;
        Symbol order_term;
        for (int k = 0; k <= n; ++k) {
            GaussianRational c(Rational(binomial(n, k)) * inv_fact);
            if (k % 2 != 0) c = -c;
            order_term += (fd[n - k][k] * gd[k][n - k]).scaled(c);
        }
        result += order_term.scaled(HPolynomial::h_power(n));
    }
    return result;
}

}  // namespace starplane
