#include "starplane/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "starplane/weyl_ops.hpp"

namespace starplane {

namespace {

constexpr double kDropTol = 1e-300;

std::complex<double> cpow(std::complex<double> z, const Rational& e) {
    if (is_integer(e)) {
        long n = to_long(e);
        if (n == 0) return {1.0, 0.0};
        std::complex<double> base = n > 0 ? z : 1.0 / z;
        long cnt = std::labs(n);
        std::complex<double> acc{1.0, 0.0};
        while (cnt > 0) {
            if (cnt & 1) acc *= base;
            base *= base;
            cnt >>= 1;
        }
        return acc;
    }
    // Principal branch for fractional exponents.
    return std::pow(z, std::complex<double>(to_double(e), 0.0));
}

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
    return r;
}

int derivative_capacity_num(const NumSymbol& s, int axis) {
    constexpr int kUnbounded = 1 << 24;
    int cap = 0;
    for (auto& [m, c] : s.terms()) {
        const Rational& e = axis == 0 ? m.a : m.b;
        if (!is_integer(e) || e < 0) return kUnbounded;
        cap = std::max<int>(cap, static_cast<int>(to_long(e)));
    }
    return cap;
}

}  // namespace

NumSymbol NumSymbol::from_symbol(const Symbol& s, std::complex<double> h) {
    NumSymbol out;
    for (auto& [m, c] : s.terms()) out.add_term(m, c.eval(h));
    return out;
}

void NumSymbol::add_term(const PuiseuxMonomial& m, std::complex<double> c) {
    if (std::abs(c) < kDropTol) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (std::abs(it->second) < kDropTol) terms_.erase(it);
    }
}

NumSymbol& NumSymbol::operator+=(const NumSymbol& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

NumSymbol operator-(NumSymbol a, const NumSymbol& b) {
    for (auto& [m, c] : b.terms_) a.add_term(m, -c);
    return a;
}

NumSymbol operator*(const NumSymbol& a, const NumSymbol& b) {
    NumSymbol r;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_)
            r.add_term(PuiseuxMonomial{ma.a + mb.a, ma.b + mb.b}, ca * cb);
    return r;
}

NumSymbol NumSymbol::scaled(std::complex<double> c) const {
    NumSymbol r;
    for (auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

NumSymbol NumSymbol::conj() const {
    NumSymbol r;
    for (auto& [m, v] : terms_) r.add_term(PuiseuxMonomial{m.b, m.a}, std::conj(v));
    return r;
}

NumSymbol NumSymbol::deriv_z() const {
    NumSymbol r;
    for (auto& [m, v] : terms_) {
        if (m.a == 0) continue;
        r.add_term(PuiseuxMonomial{m.a - 1, m.b}, v * to_double(m.a));
    }
    return r;
}

NumSymbol NumSymbol::deriv_zb() const {
    NumSymbol r;
    for (auto& [m, v] : terms_) {
        if (m.b == 0) continue;
        r.add_term(PuiseuxMonomial{m.a, m.b - 1}, v * to_double(m.b));
    }
    return r;
}

std::complex<double> NumSymbol::eval(std::complex<double> z, std::complex<double> zb) const {
    // Term count is small; a fixed left-to-right accumulation is deterministic.
    std::complex<double> acc{0.0, 0.0};
    for (auto& [m, v] : terms_) acc += v * cpow(z, m.a) * cpow(zb, m.b);
    return acc;
}

bool NumSymbol::has_negative_exponents() const {
    for (auto& [m, v] : terms_)
        if (m.a < 0 || m.b < 0) return true;
    return false;
}

NumSymbol star_numeric(const NumSymbol& f, const NumSymbol& g, std::complex<double> h, int order) {
    int bound = std::min(derivative_capacity_num(f, 1), derivative_capacity_num(g, 0)) +
                std::min(derivative_capacity_num(f, 0), derivative_capacity_num(g, 1));
    int max_n = std::min(order, bound);

    std::vector<std::vector<NumSymbol>> fd(static_cast<size_t>(max_n) + 1),
        gd(static_cast<size_t>(max_n) + 1);
    for (int p = 0; p <= max_n; ++p) {
        fd[static_cast<size_t>(p)].resize(static_cast<size_t>(max_n - p) + 1);
        gd[static_cast<size_t>(p)].resize(static_cast<size_t>(max_n - p) + 1);
    }
    fd[0][0] = f;
    gd[0][0] = g;
    for (int p = 1; p <= max_n; ++p) {
        fd[static_cast<size_t>(p)][0] = fd[static_cast<size_t>(p - 1)][0].deriv_z();
        gd[static_cast<size_t>(p)][0] = gd[static_cast<size_t>(p - 1)][0].deriv_z();
    }
    for (int p = 0; p <= max_n; ++p)
        for (int q = 1; p + q <= max_n; ++q) {
            fd[static_cast<size_t>(p)][static_cast<size_t>(q)] =
                fd[static_cast<size_t>(p)][static_cast<size_t>(q - 1)].deriv_zb();
            gd[static_cast<size_t>(p)][static_cast<size_t>(q)] =
                gd[static_cast<size_t>(p)][static_cast<size_t>(q - 1)].deriv_zb();
        }

    NumSymbol out = f * g;
    std::complex<double> hpow{1.0, 0.0};
    double inv_fact = 1.0;
    for (int n = 1; n <= max_n; ++n) {
        hpow *= h;
        inv_fact /= n;
        for (int k = 0; k <= n; ++k) {
            double c = static_cast<double>(binomial(n, k)) * inv_fact * (k % 2 == 0 ? 1.0 : -1.0);
            out += (fd[static_cast<size_t>(n - k)][static_cast<size_t>(k)] *
                    gd[static_cast<size_t>(k)][static_cast<size_t>(n - k)])
                       .scaled(hpow * c);
        }
    }
    return out;
}

namespace {

// Exact coefficient extraction for canonical z^a zb^b words on |z| = r:
// \oint z^a zb^b r^(2m) dz = 2 pi i r^(2m + a + b + 1) iff a - b + 1 = 0.
void accumulate_contour_exact(HPolynomial& acc, int hdeg, const GaussianRational& coeff,
                              long a, long b, int modpow, const Rational& radius) {
    if (a - b + 1 != 0) return;
    long rexp = 2 * modpow + a + b + 1;
    Rational rpow(1);
    Rational base = radius;
    long cnt = std::labs(rexp);
    if (rexp < 0) base = 1 / base;
    for (long j = 0; j < cnt; ++j) rpow *= base;
    acc.add_term(hdeg, coeff * GaussianRational(rpow));
}

}  // namespace

ContourResult contour_integral_circle(const NCPoly& p, const ContourSpec& c,
                                      const NumericEnv& env) {
    NCPoly canonical = substitute_inverses(p);
    ContourResult res;
    for (auto& [key, coeff] : canonical.terms()) {
        long a = 0, b = 0;
        for (Letter l : key.word) (l == Letter::Z ? a : b) += 1;
        accumulate_contour_exact(res.exact_over_2pii, key.hdeg, coeff, a, b, key.modpow,
                                 c.radius);
    }
    const std::complex<double> two_pi_i{0.0, 2.0 * M_PI};
    res.exact_value = two_pi_i * res.exact_over_2pii.eval(env.h);

    double r = to_double(c.radius);
    res.numeric_value = contour_trapezoid(
        [&](std::complex<double> z) {
            std::complex<double> zb = std::conj(z);
            std::vector<std::complex<double>> parts;
            parts.reserve(canonical.terms().size());
            for (auto& [key, coeff] : canonical.terms()) {
                std::complex<double> v = coeff.to_complex();
                v *= std::pow(env.h, key.hdeg);
                v *= std::pow(r, 2 * key.modpow);
                for (Letter l : key.word) v *= (l == Letter::Z ? z : zb);
                parts.push_back(v);
            }
            return pairwise_sum(parts);
        },
        r, c.samples);
    double scale = std::max(1.0, std::abs(res.exact_value));
    res.rel_error = std::abs(res.numeric_value - res.exact_value) / scale;
    return res;
}

ContourResult contour_integral_circle(const Symbol& s, const ContourSpec& c,
                                      const NumericEnv& env) {
    if (!s.all_integer_exponents())
        throw PreconditionError("contour integral rejects fractional exponents (branch cut)");
    ContourResult res;
    for (auto& [m, coeff] : s.terms()) {
        long a = to_long(m.a), b = to_long(m.b);
        for (auto& [hdeg, c2] : coeff.coeffs())
            accumulate_contour_exact(res.exact_over_2pii, hdeg, c2, a, b, 0, c.radius);
    }
    const std::complex<double> two_pi_i{0.0, 2.0 * M_PI};
    res.exact_value = two_pi_i * res.exact_over_2pii.eval(env.h);

    NumSymbol num = NumSymbol::from_symbol(s, env.h);
    double r = to_double(c.radius);
    res.numeric_value = contour_trapezoid(
        [&](std::complex<double> z) { return num.eval(z, std::conj(z)); }, r, c.samples);
    double scale = std::max(1.0, std::abs(res.exact_value));
    res.rel_error = std::abs(res.numeric_value - res.exact_value) / scale;
    return res;
}

std::complex<double> star_inner_product_num(const NumSymbol& f, const NumSymbol& g,
                                            const std::vector<QuadNode>& nodes,
                                            std::complex<double> h, int order) {
    NumSymbol integrand = star_numeric(f.conj(), g, h, order);
    std::vector<std::complex<double>> parts;
    parts.reserve(nodes.size());
    for (auto& n : nodes) parts.push_back(integrand.eval(n.z, std::conj(n.z)) * n.w);
    return pairwise_sum(parts);
}

namespace {
void check_poles(const Symbol& s, const QuadratureSpec& q, const char* what) {
    bool negative = false;
    for (auto& [m, c] : s.terms())
        if (m.a < 0 || m.b < 0) negative = true;
    if (negative && q.domain != Domain::Annulus)
        throw PreconditionError(std::string(what) + ": negative exponents need an annulus domain");
}
}  // namespace

InnerProductResult star_inner_product(const Symbol& f, const Symbol& g, const QuadratureSpec& q,
                                      const NumericEnv& env) {
    check_poles(f, q, "star_inner_product");
    check_poles(g, q, "star_inner_product");
    NumSymbol fn = NumSymbol::from_symbol(f, env.h);
    NumSymbol gn = NumSymbol::from_symbol(g, env.h);
    auto nodes = build_nodes(q);
    InnerProductResult res;
    res.value = star_inner_product_num(fn, gn, nodes, env.h, env.order);
    res.nodes = q.nodes;
    auto refined = build_nodes(q.refined());
    std::complex<double> v2 = star_inner_product_num(fn, gn, refined, env.h, env.order);
    res.refine_delta = std::abs(v2 - res.value);
    double scale = std::max(1.0, std::abs(res.value));
    if (res.refine_delta > 1e-6 * scale)
        throw DivergenceError("quadrature refinement check failed for the inner product");
    return res;
}

NormDiagnostic delta_norm_diagnostic(const Symbol& f, const QuadratureSpec& q,
                                     const NumericEnv& env) {
    check_poles(f, q, "delta_norm_diagnostic");
    NumSymbol fn = NumSymbol::from_symbol(f, env.h);
    auto nodes = build_nodes(q);
    NormDiagnostic d;
    // conjugate-left
    NumSymbol left = star_numeric(fn.conj(), fn, env.h, env.order);
    // conjugate-right
    NumSymbol right = star_numeric(fn, fn.conj(), env.h, env.order);
    std::vector<std::complex<double>> pl, pr;
    pl.reserve(nodes.size());
    pr.reserve(nodes.size());
    for (auto& n : nodes) {
        pl.push_back(left.eval(n.z, std::conj(n.z)) * n.w);
        pr.push_back(right.eval(n.z, std::conj(n.z)) * n.w);
    }
    d.left_norm = std::sqrt(pairwise_sum(pl));
    d.right_norm = std::sqrt(pairwise_sum(pr));
    d.delta = d.left_norm - d.right_norm;
    return d;
}

std::complex<double> star_bilinear_num(const NumSymbol& u_conj, const NumSymbol& v,
                                       const std::vector<QuadNode>& nodes, std::complex<double> h,
                                       int order) {
    NumSymbol integrand = star_numeric(u_conj, v, h, order);
    std::vector<std::complex<double>> parts;
    parts.reserve(nodes.size());
    for (auto& n : nodes) parts.push_back(integrand.eval(n.z, std::conj(n.z)) * n.w);
    return pairwise_sum(parts);
}

GramSchmidtResult gram_schmidt(const std::vector<Symbol>& basis, const QuadratureSpec& q,
                               const NumericEnv& env) {
    auto nodes = build_nodes(q);
    GramSchmidtResult res;
    double scale = 0.0;
    for (size_t i = 0; i < basis.size(); ++i) {
        NumSymbol v = NumSymbol::from_symbol(basis[i], env.h);
        NumSymbol vc = NumSymbol::from_symbol(basis[i].conj(), env.h);
        std::vector<std::complex<double>> row(basis.size(), {0.0, 0.0});
        row[i] = {1.0, 0.0};
        for (size_t j = 0; j < res.ortho.size(); ++j) {
            std::complex<double> proj =
                star_bilinear_num(res.ortho_conj[j], v, nodes, env.h, env.order);
            v += res.ortho[j].scaled(-proj);
            vc += res.ortho_conj[j].scaled(-proj);
            for (size_t k = 0; k <= j; ++k) row[k] -= proj * res.coeffs[j][k];
        }
        std::complex<double> nrm2 = star_bilinear_num(vc, v, nodes, env.h, env.order);
        scale = std::max(scale, std::abs(nrm2));
        if (std::abs(nrm2) < 1e-10 * std::max(1.0, scale))
            throw PreconditionError("gram_schmidt: basis is numerically rank deficient");
        std::complex<double> inv = 1.0 / std::sqrt(nrm2);
        v = v.scaled(inv);
        vc = vc.scaled(inv);
        for (auto& c : row) c *= inv;
        res.ortho.push_back(std::move(v));
        res.ortho_conj.push_back(std::move(vc));
        res.coeffs.push_back(std::move(row));
    }
    return res;
}

namespace {

// sup_z of sqrt(int |sum_ij conj(w_i(z)) w_j(z) S_ij(z')| dA') with every
// symbol evaluated once per node: the (z, z') double loop runs over
// precomputed value tables.
double norm_bound_sup(const std::vector<QuadNode>& nodes,
                      const std::vector<std::vector<NumSymbol>>& s_ij,
                      const std::vector<NumSymbol>& phis) {
    const size_t rank = phis.size();
    const size_t n = nodes.size();
    std::vector<std::vector<std::complex<double>>> phi_vals(rank),
        s_vals(rank * rank);
    for (size_t i = 0; i < rank; ++i) {
        phi_vals[i].resize(n);
        for (size_t p = 0; p < n; ++p)
            phi_vals[i][p] = phis[i].eval(nodes[p].z, std::conj(nodes[p].z));
    }
    for (size_t i = 0; i < rank; ++i)
        for (size_t j = 0; j < rank; ++j) {
            auto& tbl = s_vals[i * rank + j];
            tbl.resize(n);
            for (size_t p = 0; p < n; ++p)
                tbl[p] = s_ij[i][j].eval(nodes[p].z, std::conj(nodes[p].z));
        }
    double sup = 0.0;
    for (size_t zp = 0; zp < n; ++zp) {
        double acc = 0.0;
        for (size_t p = 0; p < n; ++p) {
            std::complex<double> inner{0.0, 0.0};
            for (size_t i = 0; i < rank; ++i)
                for (size_t j = 0; j < rank; ++j)
                    inner += std::conj(phi_vals[i][zp]) * phi_vals[j][zp] * s_vals[i * rank + j][p];
            acc += std::abs(inner) * nodes[p].w;
        }
        sup = std::max(sup, std::sqrt(acc));
    }
    return sup;
}

}  // namespace

NormBoundResult operator_norm_bound(const KernelSpec& k, const QuadratureSpec& q,
                                    const NumericEnv& env) {
    const size_t rank = k.terms.size();
    std::vector<NumSymbol> phis(rank), psis(rank);
    for (size_t i = 0; i < rank; ++i) {
        check_poles(k.terms[i].first, q, "operator_norm_bound kernel");
        check_poles(k.terms[i].second, q, "operator_norm_bound kernel");
        phis[i] = NumSymbol::from_symbol(k.terms[i].first, env.h);
        psis[i] = NumSymbol::from_symbol(k.terms[i].second, env.h);
    }
    std::vector<std::vector<NumSymbol>> s_ij(rank, std::vector<NumSymbol>(rank));
    for (size_t i = 0; i < rank; ++i)
        for (size_t j = 0; j < rank; ++j)
            s_ij[i][j] = star_numeric(psis[i].conj(), psis[j], env.h, env.order);

    NormBoundResult res;
    res.value = norm_bound_sup(build_nodes(q), s_ij, phis);
    res.refined = norm_bound_sup(build_nodes(q.refined()), s_ij, phis);
    return res;
}

NeumannResult neumann_solve(const KernelSpec& k, const Symbol& f, std::complex<double> lambda,
                            const QuadratureSpec& q, const NumericEnv& env, int max_iter,
                            bool guaranteed) {
    const size_t rank = k.terms.size();
    if (guaranteed) {
        double bound = operator_norm_bound(k, q, env).value;
        if (std::abs(lambda) * bound >= 1.0)
            throw PreconditionError("guaranteed mode requires |lambda| * norm bound < 1");
    }
    auto nodes = build_nodes(q);
    check_poles(f, q, "neumann_solve");
    NumSymbol fn = NumSymbol::from_symbol(f, env.h);
    std::vector<NumSymbol> phis(rank), psis(rank);
    for (size_t i = 0; i < rank; ++i) {
        check_poles(k.terms[i].first, q, "neumann_solve kernel");
        check_poles(k.terms[i].second, q, "neumann_solve kernel");
        phis[i] = NumSymbol::from_symbol(k.terms[i].first, env.h);
        psis[i] = NumSymbol::from_symbol(k.terms[i].second, env.h);
    }
    // Plain (unconjugated) pairings: s_i = int psi_i * f, G_ij = int psi_i * phi_j.
    auto pair_with = [&](const NumSymbol& a, const NumSymbol& b) {
        NumSymbol integrand = star_numeric(a, b, env.h, env.order);
        std::vector<std::complex<double>> parts;
        parts.reserve(nodes.size());
        for (auto& n : nodes) parts.push_back(integrand.eval(n.z, std::conj(n.z)) * n.w);
        return pairwise_sum(parts);
    };
    std::vector<std::complex<double>> s(rank);
    std::vector<std::vector<std::complex<double>>> G(rank,
                                                     std::vector<std::complex<double>>(rank));
    for (size_t i = 0; i < rank; ++i) {
        s[i] = pair_with(psis[i], fn);
        for (size_t j = 0; j < rank; ++j) G[i][j] = pair_with(psis[i], phis[j]);
    }

    // Node-value tables so the iteration cost does not scale with symbol size.
    std::vector<std::complex<double>> f_vals(nodes.size());
    std::vector<std::vector<std::complex<double>>> phi_vals(rank);
    for (size_t p = 0; p < nodes.size(); ++p)
        f_vals[p] = fn.eval(nodes[p].z, std::conj(nodes[p].z));
    for (size_t i = 0; i < rank; ++i) {
        phi_vals[i].resize(nodes.size());
        for (size_t p = 0; p < nodes.size(); ++p)
            phi_vals[i][p] = phis[i].eval(nodes[p].z, std::conj(nodes[p].z));
    }
    auto eval_nodes = [&](const std::vector<std::complex<double>>& c) {
        std::vector<std::complex<double>> u(nodes.size());
        for (size_t p = 0; p < nodes.size(); ++p) {
            std::complex<double> acc = f_vals[p];
            for (size_t i = 0; i < rank; ++i) acc += c[i] * phi_vals[i][p];
            u[p] = acc;
        }
        return u;
    };

    NeumannResult res;
    std::vector<std::complex<double>> c(rank, {0.0, 0.0});
    std::vector<std::complex<double>> u_prev = eval_nodes(c);
    double prev_delta = 0.0;
    int growth_streak = 0;
    for (int it = 1; it <= max_iter; ++it) {
        std::vector<std::complex<double>> cn(rank);
        for (size_t i = 0; i < rank; ++i) {
            std::complex<double> acc = s[i];
            for (size_t j = 0; j < rank; ++j) acc += G[i][j] * c[j];
            cn[i] = lambda * acc;
        }
        c = std::move(cn);
        auto u = eval_nodes(c);
        double delta = 0.0;
        for (size_t p = 0; p < u.size(); ++p) delta = std::max(delta, std::abs(u[p] - u_prev[p]));
        u_prev = std::move(u);
        res.iterations = it;
        if (delta < 1e-10) {
            res.converged = true;
            break;
        }
        if (it > 1 && delta > prev_delta) {
            if (++growth_streak >= 3)
                throw DivergenceError("Neumann iteration diverges (three consecutive growths)");
        } else {
            growth_streak = 0;
        }
        prev_delta = delta;
    }
    res.u_nodes = std::move(u_prev);
    res.phi_coefficients = std::move(c);
    return res;
}

StringActionResult string_action(const TrigPoly& x, int nodes) {
    if (nodes < 8) throw PreconditionError("string action needs at least 8 nodes per axis");
    TrigPoly xz = x.deriv_z();
    TrigPoly xzb = x.deriv_zb();
    TrigPoly xzz = xz.deriv_z();
    TrigPoly xzzb = xz.deriv_zb();
    TrigPoly xzbzb = xzb.deriv_zb();
    TrigPoly xzzz = xzz.deriv_z();
    TrigPoly xzbzbzb = xzbzb.deriv_zb();
    TrigPoly xzzzb = xzz.deriv_zb();
    TrigPoly xzzbzb = xzzb.deriv_zb();

    auto quad = [&](const TrigPoly& p) {
        double dx = x.lx() / nodes, dy = x.ly() / nodes;
        std::vector<std::complex<double>> parts;
        parts.reserve(static_cast<size_t>(nodes) * nodes);
        for (int i = 0; i < nodes; ++i)
            for (int j = 0; j < nodes; ++j) parts.push_back(p.eval(dx * i, dy * j) * (dx * dy));
        return pairwise_sum(parts);
    };

    StringActionResult res;
    res.gamma0 = quad(xz * xzb);
    res.gamma1 = quad(xzz * xzbzb - xzzb * xzzb);
    res.gamma2 = quad(xzzz * xzbzbzb - (xzzzb * xzzbzb).scaled({2.0, 0.0}) + xzzbzb * xzzzb);
    res.star_h1 = quad(trig_star_order(xz, xzb, 1));
    // Gamma2 enters the expansion as (H^2/2!) Gamma2.
    res.star_h2 = quad(trig_star_order(xz, xzb, 2)) * 2.0;
    res.stationary_at_h0 = std::abs(res.gamma1) < 1e-10;
    return res;
}

FourierWindowReport fourier_window_check(const std::vector<Rational>& ks, double window_len,
                                         int samples, const NumericEnv& env) {
    (void)env;  // symbolic part is H-independent by construction
    FourierWindowReport rep;
    // Symbolic part: truncated e^{ikz} series are holomorphic, so every star
    // correction vanishes identically.
    const int series_terms = 10;
    auto truncated_exp = [&](const GaussianRational& ik) {
        Symbol s;
        GaussianRational coef(1);
        for (int n = 0; n <= series_terms; ++n) {
            s += Symbol::monomial(rat(n), rat(0), HPolynomial(coef));
            coef *= ik * GaussianRational(rat(1, n + 1));
        }
        return s;
    };
    Rational k0 = ks.empty() ? rat(1) : ks.front();
    Rational k1 = ks.size() > 1 ? ks[1] : k0 + 1;
    Symbol ek = truncated_exp(GaussianRational(rat(0), k0));
    Symbol ekp = truncated_exp(GaussianRational(rat(0), -k1));
    StarConfig cfg(6);
    auto star = moyal_star(ek, ekp, cfg);
    rep.symbolic_orders_checked = 6;
    rep.symbolic_corrections_vanish = star.value == ek * ekp;

    // Numeric part: windowed integral along the real axis.
    for (const Rational& ka : ks) {
        for (const Rational& kb : ks) {
            FourierWindowEntry e;
            e.k = to_double(ka);
            e.kp = to_double(kb);
            double dk = e.k - e.kp;
            if (ka == kb) {
                e.closed_form = {window_len, 0.0};
                e.decay_bound = window_len;
            } else {
                e.closed_form = {2.0 * std::sin(dk * window_len / 2.0) / dk, 0.0};
                e.decay_bound = 2.0 / std::abs(dk);
            }
            std::vector<double> xs, ws;
            gauss_legendre(std::max(samples, 8), xs, ws);
            std::vector<std::complex<double>> parts;
            parts.reserve(xs.size());
            for (size_t i = 0; i < xs.size(); ++i) {
                double t = 0.5 * window_len * xs[i];
                parts.push_back(0.5 * window_len * ws[i] * std::polar(1.0, dk * t));
            }
            e.quadrature = pairwise_sum(parts);
            rep.entries.push_back(e);
        }
    }
    return rep;
}

}  // namespace starplane
