// Operator words over {z, zb, zi, zbi} with the algebra [z, zb] = 2H and
// central |z|^2. NCPoly is the workhorse of the exact layer: a finite sum of
// terms coeff * H^h * |z|^(2m) * word, canonicalized by the rewrite system in
// normal_form().
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "starplane/errors.hpp"
#include "starplane/scalars.hpp"

namespace starplane {

enum class Letter : uint8_t { Z = 0, Zb = 1, Zi = 2, Zbi = 3 };

Letter inverse_letter(Letter l);
Letter conjugate_letter(Letter l);
const char* letter_name(Letter l);

using Word = std::vector<Letter>;

// Identifies a monomial: H-degree, power of the central |z|^2, and the word.
// The ordering (hdeg, modpow, word-lex) is also the rendering order.
struct NCKey {
    int hdeg = 0;
    int modpow = 0;
    Word word;

    friend auto operator<=>(const NCKey&, const NCKey&) = default;
};

// Process-wide cap on term counts (set from STARPLANE_MAX_TERMS by the CLI).
size_t term_limit();
void set_term_limit(size_t limit);

class NCPoly {
  public:
    using TermMap = std::map<NCKey, GaussianRational>;

    NCPoly() = default;

    static NCPoly zero() { return {}; }
    static NCPoly scalar(GaussianRational c) {
        NCPoly p;
        p.add_term(NCKey{}, std::move(c));
        return p;
    }
    static NCPoly one() { return scalar(GaussianRational(1)); }
    static NCPoly h_power(int k, GaussianRational c = GaussianRational(1)) {
        NCPoly p;
        p.add_term(NCKey{k, 0, {}}, std::move(c));
        return p;
    }
    static NCPoly r2_power(int m, GaussianRational c = GaussianRational(1)) {
        NCPoly p;
        p.add_term(NCKey{0, m, {}}, std::move(c));
        return p;
    }
    static NCPoly from_word(Word w, GaussianRational c = GaussianRational(1)) {
        NCPoly p;
        p.add_term(NCKey{0, 0, std::move(w)}, std::move(c));
        return p;
    }
    // z^n for any integer n; negative powers use the inverse letter.
    static NCPoly generator_power(Letter l, int n);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(NCKey key, const GaussianRational& c);

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

    NCPoly scaled(const GaussianRational& c) const;
    NCPoly scaled(const HPolynomial& h) const;

    // True when every word is sorted under Z < Zb < Zi < Zbi.
    bool is_canonical() const;
    bool contains_inverse_letters() const;
    int max_word_length() const;
    int max_hdeg() const;

    // Collects the scalar part (empty word, modpow 0) as a polynomial in H.
    HPolynomial scalar_part() const;

  private:
    TermMap terms_;
};

struct NormalFormStats {
    int sweeps = 0;
    size_t peak_terms = 0;
};

// Canonical form under the rewrite system derived from [z, zb] = 2H and
// z^-1 = |z|^-2 zb, zb^-1 = |z|^-2 z:
//   zb z   -> z zb   - 2H
//   zi z   -> z zi   - 2H |z|^-2
//   zbi zb -> zb zbi + 2H |z|^-2
//   zbi zi -> zi zbi + 2H |z|^-4
//   (zb,zi) and (z,zbi) commute.
// Idempotent and total; the sweep count is bounded by the maximal inversion
// count of the input words.
NCPoly normal_form(const NCPoly& p, NormalFormStats* stats = nullptr);

// Truncating variant: canonical terms with H-degree > h_order or word length
// > word_len are dropped from the result.
NCPoly normal_form_truncated(const NCPoly& p, int h_order, int word_len,
                             NormalFormStats* stats = nullptr);

// Pruning variant for iterated products: keeps every canonical term that can
// still rewrite into the (h_order, word_len) window after further
// multiplication (each correction trades two letters for one H power).
NCPoly normal_form_pruned(const NCPoly& p, int h_order, int word_len);

// The scalar commutator [a, b] = s * 2H |z|^(2p) of two letters with a > b in
// the canonical order; returns false when the letters commute.
bool letter_commutator(Letter hi, Letter lo, int& sign, int& r2pow);

}  // namespace starplane
