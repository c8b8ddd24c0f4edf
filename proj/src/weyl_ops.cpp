#include "starplane/weyl_ops.hpp"

#include <algorithm>

namespace starplane {

NCPoly commutator(const NCPoly& a, const NCPoly& b) { return normal_form(a * b - b * a); }

NCPoly substitute_inverses(const NCPoly& p) {
    NCPoly out;
    for (auto& [key, coeff] : p.terms()) {
        NCKey k;
        k.hdeg = key.hdeg;
        k.modpow = key.modpow;
        k.word.reserve(key.word.size());
        for (Letter l : key.word) {
            switch (l) {
                case Letter::Z:
                case Letter::Zb: k.word.push_back(l); break;
                case Letter::Zi:
                    k.modpow -= 1;
                    k.word.push_back(Letter::Zb);
                    break;
                case Letter::Zbi:
                    k.modpow -= 1;
                    k.word.push_back(Letter::Z);
                    break;
            }
        }
        out.add_term(std::move(k), coeff);
    }
    return normal_form(out);
}

NCPoly weyl_order(const Word& w, int max_len) {
    if (static_cast<int>(w.size()) > max_len)
        throw PreconditionError("weyl_order: word longer than the configured bound");
    Word sorted = w;
    std::sort(sorted.begin(), sorted.end());
    NCPoly sum;
    long count = 0;
    do {
        sum += NCPoly::from_word(sorted);
        ++count;
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    GaussianRational inv(rat(1, count));
    return normal_form(sum.scaled(inv));
}

namespace {

enum class Side { LeftZ, RightZb };

NCPoly word_derivative(const NCPoly& p, Side side) {
    if (!p.is_canonical())
        throw PreconditionError("derivative requires a canonical (normal-ordered) input");
    if (p.contains_inverse_letters())
        throw PreconditionError("derivative is not defined on inverse letters here");
    NCPoly out;
    for (auto& [key, coeff] : p.terms()) {
        size_t zs = 0;
        while (zs < key.word.size() && key.word[zs] == Letter::Z) ++zs;
        size_t zbs = key.word.size() - zs;
        long mult = side == Side::LeftZ ? static_cast<long>(zs) : static_cast<long>(zbs);
        if (mult == 0) continue;
        NCKey k = key;
        if (side == Side::LeftZ)
            k.word.erase(k.word.begin());
        else
            k.word.pop_back();
        out.add_term(std::move(k), coeff * GaussianRational(mult));
    }
    return out;
}

}  // namespace

NCPoly left_derivative_z(const NCPoly& p) { return word_derivative(p, Side::LeftZ); }
NCPoly right_derivative_zbar(const NCPoly& p) { return word_derivative(p, Side::RightZb); }

NCPoly kaehler_metric(const GaussianRational& scale) {
    NCPoly k = normal_form(NCPoly::from_word({Letter::Z, Letter::Zb})).scaled(scale * GaussianRational(rat(1, 2)));
    return right_derivative_zbar(left_derivative_z(k));
}

NCPoly conjugate_by_exp(ExpDirection direction, const GaussianRational& alpha,
                        const NCPoly& target) {
    if (target.contains_inverse_letters())
        throw PreconditionError("conjugate_by_exp: inverse letters present");
    NCPoly canonical = normal_form(target);
    NCPoly result = canonical;
    NCPoly dk = canonical;
    GaussianRational coef(1);  // accumulates (2 alpha)^k / k!
    for (long k = 1;; ++k) {
        dk = direction == ExpDirection::Z ? right_derivative_zbar(dk) : left_derivative_z(dk);
        if (dk.is_zero()) break;
        coef *= alpha * GaussianRational(rat(2, k));
        NCPoly shifted;
        for (auto& [key, c] : dk.terms()) {
            NCKey kk = key;
            kk.hdeg += static_cast<int>(k);
            shifted.add_term(std::move(kk), c * coef);
        }
        result += shifted;
    }
    return normal_form(result);
}

NCPoly exp_truncated(const NCPoly& p, int h_order, int word_len) {
    NCPoly base = normal_form(p);
    if (base.is_zero()) return NCPoly::one();

    // weight(term) = word length + 2 * H-degree is invariant under rewriting,
    // so p^k cannot contribute below weight k * min_weight(p). Weight-0 terms
    // (constants and bare |z|^2 powers) never leave the window and have no
    // exact truncated exponential; reject them.
    int min_weight = 1 << 30;
    for (auto& [key, c] : base.terms()) {
        int w = static_cast<int>(key.word.size()) + 2 * key.hdeg;
        if (w == 0)
            throw PreconditionError("exp_truncated: operand has a constant or |z|^2-only term");
        min_weight = std::min(min_weight, w);
    }
    int budget = word_len + 2 * h_order;

    NCPoly result = NCPoly::one();
    NCPoly power = NCPoly::one();
    GaussianRational inv_fact(1);
    for (int k = 1; k <= budget && k * min_weight <= budget; ++k) {
        // Intermediate powers keep every canonical term that can still rewrite
        // into the window; the strict cut happens once at the end. This makes
        // the result the exact window of the true series.
        power = normal_form_pruned(power * base, h_order, word_len);
        if (power.is_zero()) break;
        inv_fact *= GaussianRational(rat(1, k));
        result += power.scaled(inv_fact);
    }
    return normal_form_truncated(result, h_order, word_len);
}

IdentityCheck verify_identity(const NCPoly& lhs, const NCPoly& rhs) {
    IdentityCheck r;
    r.difference = normal_form(lhs - rhs);
    r.equal = r.difference.is_zero();
    return r;
}

NCPoly hermitian_conjugate(const NCPoly& p) {
    NCPoly out;
    for (auto& [key, coeff] : p.terms()) {
        NCKey k;
        k.hdeg = key.hdeg;
        k.modpow = key.modpow;
        k.word.reserve(key.word.size());
        for (Letter l : key.word) k.word.push_back(conjugate_letter(l));
        GaussianRational c = coeff.conj();
        if (key.hdeg % 2 != 0) c = -c;
        out.add_term(std::move(k), c);
    }
    return out;
}

NCPoly at_h_zero(const NCPoly& p) {
    NCPoly out;
    for (auto& [key, coeff] : p.terms()) {
        if (key.hdeg != 0) continue;
        NCKey k = key;
        std::sort(k.word.begin(), k.word.end());
        out.add_term(std::move(k), coeff);
    }
    return out;
}

}  // namespace starplane
