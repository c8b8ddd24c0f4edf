#include "starplane/diffop.hpp"

namespace starplane {

DiffOpPoly DiffOpPoly::from_coeff(NCPoly c, int r, int s) {
    DiffOpPoly d;
    if (!c.is_zero()) d.terms_.emplace(Key{r, s}, std::move(c));
    return d;
}

bool DiffOpPoly::is_zero() const {
    for (auto& [k, c] : terms_)
        if (!c.is_zero()) return false;
    return true;
}

void DiffOpPoly::add(const Key& k, const NCPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOpPoly DiffOpPoly::operator-() const {
    DiffOpPoly r;
    for (auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

DiffOpPoly& DiffOpPoly::operator+=(const DiffOpPoly& o) {
    for (auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

DiffOpPoly& DiffOpPoly::operator-=(const DiffOpPoly& o) {
    for (auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

bool operator==(const DiffOpPoly& a, const DiffOpPoly& b) {
    return a.canonical().terms() == b.canonical().terms();
}

DiffOpPoly DiffOpPoly::scaled(const GaussianRational& c) const {
    DiffOpPoly r;
    if (c.is_zero()) return r;
    for (auto& [k, v] : terms_) r.terms_.emplace(k, v.scaled(c));
    return r;
}

DiffOpPoly DiffOpPoly::canonical() const {
    DiffOpPoly r;
    for (auto& [k, c] : terms_) {
        NCPoly n = normal_form(c);
        if (!n.is_zero()) r.terms_.emplace(k, std::move(n));
    }
    return r;
}

namespace {

// dz applied to a single letter: returns the replacement word and coefficient,
// or false when the derivative vanishes.
bool letter_derivative(Letter l, bool wrt_z, Word& out, GaussianRational& coeff) {
    if (wrt_z) {
        if (l == Letter::Z) {
            out.clear();
            coeff = GaussianRational(1);
            return true;
        }
        if (l == Letter::Zi) {
            out = {Letter::Zi, Letter::Zi};
            coeff = GaussianRational(-1);
            return true;
        }
        return false;
    }
    if (l == Letter::Zb) {
        out.clear();
        coeff = GaussianRational(1);
        return true;
    }
    if (l == Letter::Zbi) {
        out = {Letter::Zbi, Letter::Zbi};
        coeff = GaussianRational(-1);
        return true;
    }
    return false;
}

NCPoly coeff_derivative(const NCPoly& p, bool wrt_z) {
    NCPoly out;
    for (auto& [key, coeff] : p.terms()) {
        for (size_t i = 0; i < key.word.size(); ++i) {
            Word repl;
            GaussianRational c;
            if (!letter_derivative(key.word[i], wrt_z, repl, c)) continue;
            NCKey k;
            k.hdeg = key.hdeg;
            k.modpow = key.modpow;
            k.word.reserve(key.word.size() - 1 + repl.size());
            k.word.insert(k.word.end(), key.word.begin(), key.word.begin() + i);
            k.word.insert(k.word.end(), repl.begin(), repl.end());
            k.word.insert(k.word.end(), key.word.begin() + i + 1, key.word.end());
            out.add_term(std::move(k), coeff * c);
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

NCPoly coeff_derivative_z(const NCPoly& p) { return coeff_derivative(p, true); }
NCPoly coeff_derivative_zbar(const NCPoly& p) { return coeff_derivative(p, false); }

DiffOpPoly diffop_compose(const DiffOpPoly& a, const DiffOpPoly& b) {
    DiffOpPoly out;
    for (auto& [ka, ca] : a.terms()) {
        auto [r, s] = ka;
        for (auto& [kb, cb] : b.terms()) {
            auto [u, v] = kb;
            // dz^r dzb^s B = sum_j sum_k C(r,j) C(s,k) (dz^j dzb^k B) dz^(r-j) dzb^(s-k)
            NCPoly dj = cb;
            for (int j = 0; j <= r; ++j) {
                NCPoly djk = dj;
                for (int k = 0; k <= s; ++k) {
                    long factor = binomial(r, j) * binomial(s, k);
                    NCPoly piece = normal_form((ca * djk).scaled(GaussianRational(factor)));
                    out.add({r - j + u, s - k + v}, piece);
                    if (k < s) djk = coeff_derivative_zbar(djk);
                    if (djk.is_zero() && k < s) break;
                }
                if (j < r) dj = coeff_derivative_z(dj);
                if (dj.is_zero() && j < r) break;
            }
        }
    }
    return out.canonical();
}

DiffOpPoly diffop_commutator(const DiffOpPoly& a, const DiffOpPoly& b) {
    return (diffop_compose(a, b) - diffop_compose(b, a)).canonical();
}

DiffOpPoly diffop_exp_conjugate(const DiffOpPoly& x, const DiffOpPoly& target, int max_terms) {
    DiffOpPoly result = target.canonical();
    DiffOpPoly current = result;
    GaussianRational inv_fact(1);
    for (int k = 1; k <= max_terms; ++k) {
        current = diffop_commutator(x, current);
        if (current.is_zero()) return result.canonical();
        inv_fact *= GaussianRational(rat(1, k));
        result += current.scaled(inv_fact);
    }
    throw DivergenceError("diffop_exp_conjugate: adjoint series did not terminate");
}

DiffOpPoly virasoro_generator(int n) {
    NCPoly coeff = NCPoly::generator_power(Letter::Z, n + 1).scaled(GaussianRational(-1));
    return DiffOpPoly::from_coeff(std::move(coeff), 1, 0);
}

}  // namespace starplane
