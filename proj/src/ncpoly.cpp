#include "starplane/ncpoly.hpp"

#include <algorithm>
#include <atomic>

namespace starplane {

namespace {
std::atomic<size_t> g_term_limit{200000};

void check_limit(size_t n) {
    if (n > g_term_limit.load(std::memory_order_relaxed))
        throw ResourceLimitError("term count exceeds STARPLANE_MAX_TERMS cap");
}
}  // namespace

size_t term_limit() { return g_term_limit.load(std::memory_order_relaxed); }
void set_term_limit(size_t limit) { g_term_limit.store(limit, std::memory_order_relaxed); }

Letter inverse_letter(Letter l) {
    switch (l) {
        case Letter::Z: return Letter::Zi;
        case Letter::Zb: return Letter::Zbi;
        case Letter::Zi: return Letter::Z;
        case Letter::Zbi: return Letter::Zb;
    }
    throw std::logic_error("bad letter");
}

Letter conjugate_letter(Letter l) {
    switch (l) {
        case Letter::Z: return Letter::Zb;
        case Letter::Zb: return Letter::Z;
        case Letter::Zi: return Letter::Zbi;
        case Letter::Zbi: return Letter::Zi;
    }
    throw std::logic_error("bad letter");
}

const char* letter_name(Letter l) {
    switch (l) {
        case Letter::Z: return "z";
        case Letter::Zb: return "zb";
        case Letter::Zi: return "zi";
        case Letter::Zbi: return "zbi";
    }
    return "?";
}

NCPoly NCPoly::generator_power(Letter l, int n) {
    if (n == 0) return one();
    Letter use = l;
    int count = n;
    if (n < 0) {
        use = inverse_letter(l);
        count = -n;
    }
    return from_word(Word(static_cast<size_t>(count), use));
}

void NCPoly::add_term(NCKey key, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    check_limit(terms_.size());
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (auto& [ka, ca] : a.terms_) {
        for (auto& [kb, cb] : b.terms_) {
            NCKey key;
            key.hdeg = ka.hdeg + kb.hdeg;
            key.modpow = ka.modpow + kb.modpow;
            key.word.reserve(ka.word.size() + kb.word.size());
            key.word.insert(key.word.end(), ka.word.begin(), ka.word.end());
            key.word.insert(key.word.end(), kb.word.begin(), kb.word.end());
            r.add_term(std::move(key), ca * cb);
        }
    }
    return r;
}

NCPoly NCPoly::scaled(const GaussianRational& c) const {
    NCPoly r;
    if (c.is_zero()) return r;
    for (auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

NCPoly NCPoly::scaled(const HPolynomial& h) const {
    NCPoly r;
    for (auto& [k, v] : terms_) {
        for (auto& [deg, c] : h.coeffs()) {
            NCKey key = k;
            key.hdeg += deg;
            r.add_term(std::move(key), v * c);
        }
    }
    return r;
}

bool NCPoly::is_canonical() const {
    for (auto& [k, c] : terms_) {
        if (!std::is_sorted(k.word.begin(), k.word.end())) return false;
    }
    return true;
}

bool NCPoly::contains_inverse_letters() const {
    for (auto& [k, c] : terms_) {
        for (Letter l : k.word) {
            if (l == Letter::Zi || l == Letter::Zbi) return true;
        }
    }
    return false;
}

int NCPoly::max_word_length() const {
    int m = 0;
    for (auto& [k, c] : terms_) m = std::max<int>(m, static_cast<int>(k.word.size()));
    return m;
}

int NCPoly::max_hdeg() const {
    int m = 0;
    for (auto& [k, c] : terms_) m = std::max(m, k.hdeg);
    return m;
}

HPolynomial NCPoly::scalar_part() const {
    HPolynomial h;
    for (auto& [k, c] : terms_) {
        if (k.word.empty() && k.modpow == 0) h.add_term(k.hdeg, c);
    }
    return h;
}

bool letter_commutator(Letter hi, Letter lo, int& sign, int& r2pow) {
    // [hi, lo] = sign * 2H * |z|^(2*r2pow); pairs not listed commute.
    if (hi == Letter::Zb && lo == Letter::Z) {
        sign = -1;  // [zb, z] = -2H
        r2pow = 0;
        return true;
    }
    if (hi == Letter::Zi && lo == Letter::Z) {
        sign = -1;  // [zi, z] = -2H |z|^-2
        r2pow = -1;
        return true;
    }
    if (hi == Letter::Zbi && lo == Letter::Zb) {
        sign = 1;  // [zbi, zb] = +2H |z|^-2
        r2pow = -1;
        return true;
    }
    if (hi == Letter::Zbi && lo == Letter::Zi) {
        sign = 1;  // [zbi, zi] = +2H |z|^-4
        r2pow = -2;
        return true;
    }
    return false;
}

namespace {

enum class Window { None, Strict, Pruned };

NCPoly normal_form_impl(const NCPoly& p, int h_order, int word_len, Window window,
                        NormalFormStats* stats) {
    NCPoly::TermMap current(p.terms());
    NCPoly out;
    int sweeps = 0;
    size_t peak = current.size();

    // Truncation is defined on canonical terms. Intermediates may only be
    // pruned when no rewrite descendant can land inside the kept region:
    // every correction trades two word letters for one H power.
    auto reachable = [&](const NCKey& k) {
        if (window == Window::None) return true;
        int len = static_cast<int>(k.word.size());
        int forced = len > word_len ? (len - word_len + 1) / 2 : 0;
        return k.hdeg + forced <= h_order;
    };
    auto keep_final = [&](const NCKey& k) {
        if (window == Window::None) return true;
        if (window == Window::Pruned) return reachable(k);
        return k.hdeg <= h_order && static_cast<int>(k.word.size()) <= word_len;
    };

    while (!current.empty()) {
        NCPoly::TermMap next;
        auto push = [&](NCKey key, GaussianRational c) {
            if (c.is_zero() || !reachable(key)) return;
            auto [it, inserted] = next.try_emplace(std::move(key), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) next.erase(it);
            }
            check_limit(next.size());
        };

        for (auto& [key, coeff] : current) {
            // Locate the first adjacent inversion.
            size_t pos = key.word.size();
            for (size_t i = 0; i + 1 < key.word.size(); ++i) {
                if (static_cast<int>(key.word[i]) > static_cast<int>(key.word[i + 1])) {
                    pos = i;
                    break;
                }
            }
            if (pos == key.word.size()) {
                if (keep_final(key)) out.add_term(key, coeff);
                continue;
            }
            Letter hi = key.word[pos];
            Letter lo = key.word[pos + 1];

            NCKey swapped = key;
            std::swap(swapped.word[pos], swapped.word[pos + 1]);
            push(std::move(swapped), coeff);

            int sign = 0;
            int r2pow = 0;
            if (letter_commutator(hi, lo, sign, r2pow)) {
                NCKey corr;
                corr.hdeg = key.hdeg + 1;
                corr.modpow = key.modpow + r2pow;
                corr.word.reserve(key.word.size() - 2);
                corr.word.insert(corr.word.end(), key.word.begin(), key.word.begin() + pos);
                corr.word.insert(corr.word.end(), key.word.begin() + pos + 2, key.word.end());
                push(std::move(corr), coeff * GaussianRational(2 * sign));
            }
        }
        current = std::move(next);
        peak = std::max(peak, current.size());
        ++sweeps;
    }

    if (stats) {
        stats->sweeps = sweeps;
        stats->peak_terms = peak;
    }
    return out;
}

}  // namespace

NCPoly normal_form(const NCPoly& p, NormalFormStats* stats) {
    return normal_form_impl(p, 0, 0, Window::None, stats);
}

NCPoly normal_form_truncated(const NCPoly& p, int h_order, int word_len, NormalFormStats* stats) {
    return normal_form_impl(p, h_order, word_len, Window::Strict, stats);
}

NCPoly normal_form_pruned(const NCPoly& p, int h_order, int word_len) {
    return normal_form_impl(p, h_order, word_len, Window::Pruned, nullptr);
}

}  // namespace starplane
