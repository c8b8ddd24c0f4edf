#include "starplane/symbol.hpp"

#include <limits>
#include <vector>

namespace starplane {

Symbol Symbol::constant(HPolynomial c) {
    Symbol s;
    s.add_term(PuiseuxMonomial{}, c);
    return s;
}

Symbol Symbol::monomial(Rational a, Rational b, HPolynomial c) {
    Symbol s;
    s.add_term(PuiseuxMonomial{std::move(a), std::move(b)}, c);
    return s;
}

void Symbol::add_term(const PuiseuxMonomial& m, const HPolynomial& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Symbol Symbol::operator-() const {
    Symbol r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Symbol& Symbol::operator+=(const Symbol& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Symbol& Symbol::operator-=(const Symbol& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Symbol operator*(const Symbol& a, const Symbol& b) {
    Symbol r;
    for (auto& [ma, ca] : a.terms_) {
        for (auto& [mb, cb] : b.terms_) {
            r.add_term(PuiseuxMonomial{ma.a + mb.a, ma.b + mb.b}, ca * cb);
        }
    }
    return r;
}

Symbol Symbol::scaled(const HPolynomial& c) const {
    Symbol r;
    for (auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

Symbol Symbol::scaled(const GaussianRational& c) const { return scaled(HPolynomial(c)); }

Symbol Symbol::deriv_z() const {
    Symbol r;
    for (auto& [m, c] : terms_) {
        if (m.a == 0) continue;
        r.add_term(PuiseuxMonomial{m.a - 1, m.b}, c.scaled(GaussianRational(m.a)));
    }
    return r;
}

Symbol Symbol::deriv_zb() const {
    Symbol r;
    for (auto& [m, c] : terms_) {
        if (m.b == 0) continue;
        r.add_term(PuiseuxMonomial{m.a, m.b - 1}, c.scaled(GaussianRational(m.b)));
    }
    return r;
}

Symbol Symbol::conj() const {
    Symbol r;
    for (auto& [m, c] : terms_) r.add_term(PuiseuxMonomial{m.b, m.a}, c.conj_hbar());
    return r;
}

Symbol Symbol::truncated(int order) const {
    Symbol r;
    for (auto& [m, c] : terms_) r.add_term(m, c.truncated(order));
    return r;
}

Symbol Symbol::h_coefficient(int k) const {
    Symbol r;
    for (auto& [m, c] : terms_) r.add_term(m, HPolynomial(c.coeff(k)));
    return r;
}

HPolynomial Symbol::eval_at_origin() const {
    HPolynomial out;
    for (auto& [m, c] : terms_) {
        if (m.a < 0 || m.b < 0)
            throw PreconditionError("formal evaluation at the origin hits a pole");
        if (m.a == 0 && m.b == 0) out += c;
    }
    return out;
}

bool Symbol::all_integer_exponents() const {
    for (auto& [m, c] : terms_)
        if (!is_integer(m.a) || !is_integer(m.b)) return false;
    return true;
}

bool Symbol::holomorphic() const {
    for (auto& [m, c] : terms_)
        if (m.b != 0) return false;
    return true;
}

int Symbol::max_root_denominator() const {
    mpz_class den = 1;
    for (auto& [m, c] : terms_) {
        if (m.a.get_den() > den) den = m.a.get_den();
        if (m.b.get_den() > den) den = m.b.get_den();
    }
    if (!den.fits_sint_p()) throw PreconditionError("exponent denominator out of range");
    return static_cast<int>(den.get_si());
}

void Symbol::check_root_bound(int bound) const {
    for (auto& [m, c] : terms_) {
        if (bound % static_cast<int>(m.a.get_den().get_si()) != 0 ||
            bound % static_cast<int>(m.b.get_den().get_si()) != 0)
            throw PreconditionError("exponent denominator does not divide the root bound");
    }
}

namespace {

constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

// Max number of d/dz (axis 0) or d/dzb (axis 1) applications the symbol can
// absorb before vanishing identically; unbounded unless every monomial has a
// non-negative integer exponent on that axis.
int derivative_capacity(const Symbol& s, int axis) {
    int cap = 0;
    for (auto& [m, c] : s.terms()) {
        const Rational& e = axis == 0 ? m.a : m.b;
        if (!is_integer(e) || e < 0) return kUnbounded;
        cap = std::max<int>(cap, static_cast<int>(to_long(e)));
    }
    return cap;
}

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
    return r;
}

}  // namespace

StarResult moyal_star(const Symbol& f, const Symbol& g, const StarConfig& cfg) {
    f.check_root_bound(cfg.root_bound);
    g.check_root_bound(cfg.root_bound);

    int term_bound = std::min(derivative_capacity(f, 1), derivative_capacity(g, 0)) +
                     std::min(derivative_capacity(f, 0), derivative_capacity(g, 1));
    bool terminating = term_bound <= cfg.order;
    int max_n = std::min(cfg.order, term_bound);

    // fd[p][q] = dz^p dzb^q f ; gd[p][q] likewise.
    std::vector<std::vector<Symbol>> fd(max_n + 1), gd(max_n + 1);
    for (int p = 0; p <= max_n; ++p) {
        fd[p].resize(max_n + 1 - p);
        gd[p].resize(max_n + 1 - p);
    }
    fd[0][0] = f;
    gd[0][0] = g;
    for (int p = 1; p <= max_n; ++p) {
        fd[p][0] = fd[p - 1][0].deriv_z();
        gd[p][0] = gd[p - 1][0].deriv_z();
    }
    for (int p = 0; p <= max_n; ++p) {
        for (int q = 1; p + q <= max_n; ++q) {
            fd[p][q] = fd[p][q - 1].deriv_zb();
            gd[p][q] = gd[p][q - 1].deriv_zb();
        }
    }

    StarResult out;
    out.value = f * g;
    out.terminating = terminating;
    out.terminated_at = 0;
    Rational inv_fact(1);
    for (int n = 1; n <= max_n; ++n) {
        inv_fact /= n;
        Symbol order_term;
        for (int k = 0; k <= n; ++k) {
            GaussianRational c(Rational(binomial(n, k)) * inv_fact);
            if (k % 2 != 0) c = -c;
            // (dz^(n-k) dzb^k f) (dzb^(n-k) dz^k g)
            order_term += (fd[n - k][k] * gd[k][n - k]).scaled(c);
        }
        if (!order_term.is_zero()) {
            out.value += order_term.scaled(HPolynomial::h_power(n));
            out.terminated_at = n;
        }
    }
    return out;
}

Symbol poisson_bracket(const Symbol& f, const Symbol& g) {
    return f.deriv_z() * g.deriv_zb() - f.deriv_zb() * g.deriv_z();
}

Symbol hamilton_field_apply(const Symbol& f, const Symbol& g) { return poisson_bracket(f, g); }
Symbol hamilton_field_on_z(const Symbol& f) { return -f.deriv_zb(); }
Symbol hamilton_field_on_zb(const Symbol& f) { return f.deriv_z(); }

bool check_canonical(const GaussianRational m[2][2]) {
    Symbol zp = Symbol::z().scaled(m[0][0]) + Symbol::zb().scaled(m[0][1]);
    Symbol zbp = Symbol::z().scaled(m[1][0]) + Symbol::zb().scaled(m[1][1]);
    Symbol one = Symbol::constant(HPolynomial(1));
    return poisson_bracket(zp, zbp) == one && poisson_bracket(zp, zp).is_zero() &&
           poisson_bracket(zbp, zbp).is_zero();
}

HDerivativeCheck h_derivative_check(const Symbol& f, const Symbol& g) {
    HDerivativeCheck r;
    StarConfig cfg(1);
    r.lhs = moyal_star(f, g, cfg).value.h_coefficient(1);
    r.rhs = poisson_bracket(f, g);
    r.equal = r.lhs == r.rhs;
    return r;
}

SigmaPoly SigmaPoly::monomial(long i, long j, GaussianRational c) {
    SigmaPoly p;
    p.add_term(i, j, c);
    return p;
}

void SigmaPoly::add_term(long i, long j, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(i, j);
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SigmaPoly& SigmaPoly::operator+=(const SigmaPoly& o) {
    for (auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

SigmaPoly operator*(const SigmaPoly& a, const SigmaPoly& b) {
    SigmaPoly r;
    for (auto& [ka, ca] : a.terms_)
        for (auto& [kb, cb] : b.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

SigmaPoly SigmaPoly::scaled(const GaussianRational& c) const {
    SigmaPoly r;
    if (c.is_zero()) return r;
    for (auto& [k, v] : terms_) r.add_term(k.first, k.second, v * c);
    return r;
}

SigmaPoly SigmaPoly::deriv(int axis) const {
    SigmaPoly r;
    for (auto& [k, c] : terms_) {
        long e = axis == 0 ? k.first : k.second;
        if (e == 0) continue;
        r.add_term(k.first - (axis == 0 ? 1 : 0), k.second - (axis == 1 ? 1 : 0),
                   c * GaussianRational(e));
    }
    return r;
}

Symbol sigma_to_z(const SigmaPoly& p) {
    // s1 = (z + zb)/2, s2 = -i (z - zb)/2.
    Symbol s1 = (Symbol::z() + Symbol::zb()).scaled(GaussianRational(rat(1, 2)));
    Symbol s2 = (Symbol::z() - Symbol::zb())
                    .scaled(GaussianRational(rat(0), rat(-1, 2)));
    Symbol out;
    for (auto& [k, c] : p.terms()) {
        Symbol term = Symbol::constant(HPolynomial(c));
        for (long i = 0; i < k.first; ++i) term = term * s1;
        for (long j = 0; j < k.second; ++j) term = term * s2;
        out += term;
    }
    return out;
}

SigmaPoly z_to_sigma(const Symbol& s) {
    SigmaPoly sz = SigmaPoly::monomial(1, 0) + SigmaPoly::monomial(0, 1, GaussianRational::i());
    SigmaPoly szb = SigmaPoly::monomial(1, 0) +
                    SigmaPoly::monomial(0, 1, -GaussianRational::i());
    SigmaPoly out;
    for (auto& [m, c] : s.terms()) {
        if (!is_integer(m.a) || !is_integer(m.b) || m.a < 0 || m.b < 0)
            throw PreconditionError("z_to_sigma requires non-negative integer exponents");
        if (c.degree() > 0)
            throw PreconditionError("z_to_sigma requires H-free coefficients");
        SigmaPoly term = SigmaPoly::monomial(0, 0, c.coeff(0));
        for (long i = 0; i < to_long(m.a); ++i) term = term * sz;
        for (long j = 0; j < to_long(m.b); ++j) term = term * szb;
        out += term;
    }
    return out;
}

SigmaPoly sigma_star_coeff(const SigmaPoly& f, const SigmaPoly& g, int order_n) {
    // Coefficient of H^n in f exp[(iH/2)(<-d1 ->d2 - <-d2 ->d1)] g: apply the
    // bidifferential n times on tensor terms, then scale by (i/2)^n / n!.
    struct Tensor {
        SigmaPoly left;
        SigmaPoly right;
        GaussianRational sign;
    };
    std::vector<Tensor> tensors{{f, g, GaussianRational(1)}};
    for (int n = 0; n < order_n; ++n) {
        std::vector<Tensor> next;
        next.reserve(tensors.size() * 2);
        for (auto& t : tensors) {
            next.push_back({t.left.deriv(0), t.right.deriv(1), t.sign});
            next.push_back({t.left.deriv(1), t.right.deriv(0), -t.sign});
        }
        tensors = std::move(next);
    }
    GaussianRational factor(1);
    for (int j = 1; j <= order_n; ++j)
        factor *= GaussianRational(rat(0), rat(1, 2)) * GaussianRational(rat(1, j));
    SigmaPoly out;
    for (auto& t : tensors) out += (t.left * t.right).scaled(t.sign * factor);
    return out;
}

}  // namespace starplane
