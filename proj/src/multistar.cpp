#include "starplane/multistar.hpp"

namespace starplane {

MultiSymbol MultiSymbol::variable(int vars, int j) {
    if (j < 0 || j >= vars) throw PreconditionError("variable index out of range");
    MultiSymbol s(vars);
    Key k(static_cast<size_t>(vars), 0);
    k[static_cast<size_t>(j)] = 1;
    s.add_term(k, HPolynomial(1));
    return s;
}

void MultiSymbol::add_term(const Key& k, const HPolynomial& c) {
    if (static_cast<int>(k.size()) != vars_) throw PreconditionError("exponent vector size");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiSymbol& MultiSymbol::operator+=(const MultiSymbol& o) {
    if (o.vars_ != vars_) throw PreconditionError("variable count mismatch");
    for (auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

MultiSymbol operator-(MultiSymbol a, const MultiSymbol& b) {
    if (a.vars_ != b.vars_) throw PreconditionError("variable count mismatch");
    for (auto& [k, c] : b.terms_) a.add_term(k, -c);
    return a;
}

MultiSymbol operator*(const MultiSymbol& a, const MultiSymbol& b) {
    if (a.vars_ != b.vars_) throw PreconditionError("variable count mismatch");
    MultiSymbol r(a.vars_);
    for (auto& [ka, ca] : a.terms_) {
        for (auto& [kb, cb] : b.terms_) {
            MultiSymbol::Key k = ka;
            for (size_t i = 0; i < k.size(); ++i) k[i] += kb[i];
            r.add_term(k, ca * cb);
        }
    }
    return r;
}

MultiSymbol MultiSymbol::scaled(const HPolynomial& c) const {
    MultiSymbol r(vars_);
    for (auto& [k, v] : terms_) r.add_term(k, v * c);
    return r;
}

MultiSymbol MultiSymbol::deriv(int j) const {
    MultiSymbol r(vars_);
    for (auto& [k, c] : terms_) {
        int e = k[static_cast<size_t>(j)];
        if (e == 0) continue;
        Key kk = k;
        kk[static_cast<size_t>(j)] -= 1;
        r.add_term(kk, c.scaled(GaussianRational(e)));
    }
    return r;
}

MultiSymbol MultiSymbol::h_coefficient(int k) const {
    MultiSymbol r(vars_);
    for (auto& [key, c] : terms_) r.add_term(key, HPolynomial(c.coeff(k)));
    return r;
}

MultiSymbol moyal_star_multi(const MultiSymbol& f, const MultiSymbol& g, const HMatrix& h,
                             int order) {
    if (f.vars() != g.vars() || f.vars() != h.dim())
        throw PreconditionError("variable count does not match the commutator matrix");
    const int n = f.vars();

    struct Tensor {
        MultiSymbol left;
        MultiSymbol right;
        GaussianRational scale;
    };

    MultiSymbol result = f * g;
    std::vector<Tensor> tensors{{f, g, GaussianRational(1)}};
    GaussianRational half_i(rat(0), rat(1, 2));

    for (int ord = 1; ord <= order; ++ord) {
        std::vector<Tensor> next;
        for (auto& t : tensors) {
            for (int j = 0; j < n; ++j) {
                for (int k = j + 1; k < n; ++k) {
                    const GaussianRational& c = h.at(j, k);
                    if (c.is_zero()) continue;
                    GaussianRational s = t.scale * c * half_i;
                    Tensor fwd{t.left.deriv(j), t.right.deriv(k), s};
                    if (!fwd.left.is_zero() && !fwd.right.is_zero()) next.push_back(std::move(fwd));
                    Tensor bwd{t.left.deriv(k), t.right.deriv(j), -s};
                    if (!bwd.left.is_zero() && !bwd.right.is_zero()) next.push_back(std::move(bwd));
                }
            }
        }
        if (next.empty()) break;
        GaussianRational inv_fact(1);
        for (int j = 1; j <= ord; ++j) inv_fact *= GaussianRational(rat(1, j));
        MultiSymbol order_term(n);
        for (auto& t : next) order_term += (t.left * t.right).scaled(HPolynomial(t.scale));
        result += order_term.scaled(HPolynomial::h_power(ord, inv_fact));
        tensors = std::move(next);
    }
    return result;
}

}  // namespace starplane
