// Commutative Puiseux/Laurent symbols in (z, zb) with HPolynomial
// coefficients, and the truncated Moyal star product
//   f * g = f exp[H(<-d_z ->d_zb - <-d_zb ->d_z)] g.
// Exponents are exact rationals with a bounded denominator.
#pragma once

#include <map>
#include <optional>

#include "starplane/errors.hpp"
#include "starplane/scalars.hpp"

namespace starplane {

struct PuiseuxMonomial {
    Rational a{0};  // exponent of z
    Rational b{0};  // exponent of zb

    friend bool operator==(const PuiseuxMonomial& x, const PuiseuxMonomial& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator<(const PuiseuxMonomial& x, const PuiseuxMonomial& y) {
        int c = cmp(x.a, y.a);
        if (c != 0) return c < 0;
        return cmp(x.b, y.b) < 0;
    }
};

struct StarConfig {
    int order = 4;       // H-truncation of the star series
    int root_bound = 64; // exponent denominators must divide this

    StarConfig() = default;
    StarConfig(int ord, int rb = 64) : order(ord), root_bound(rb) {
        if (order < 0 || order > 64) throw PreconditionError("star order out of range");
        if (root_bound <= 0) throw PreconditionError("root bound must be positive");
    }
};

class Symbol {
  public:
    using TermMap = std::map<PuiseuxMonomial, HPolynomial>;

    Symbol() = default;

    static Symbol constant(HPolynomial c);
    static Symbol monomial(Rational a, Rational b, HPolynomial c = HPolynomial(1));
    static Symbol z() { return monomial(rat(1), rat(0)); }
    static Symbol zb() { return monomial(rat(0), rat(1)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const PuiseuxMonomial& m, const HPolynomial& c);

    Symbol operator-() const;
    Symbol& operator+=(const Symbol& o);
    Symbol& operator-=(const Symbol& o);
    friend Symbol operator+(Symbol a, const Symbol& b) { return a += b; }
    friend Symbol operator-(Symbol a, const Symbol& b) { return a -= b; }
    friend Symbol operator*(const Symbol& a, const Symbol& b);  // pointwise product
    friend bool operator==(const Symbol& a, const Symbol& b) { return a.terms_ == b.terms_; }

    Symbol scaled(const HPolynomial& c) const;
    Symbol scaled(const GaussianRational& c) const;

    // d/dz and d/dzb on exponents (a -> a * z^(a-1) zb^b, ...).
    Symbol deriv_z() const;
    Symbol deriv_zb() const;

    // Entrywise complex conjugation of the function: z <-> zb exponents,
    // coefficient conjugated with Hbar = -H.
    Symbol conj() const;

    // Keeps only H-degrees <= order in every coefficient.
    Symbol truncated(int order) const;

    // Coefficient of H^k as a symbol with H-free coefficients.
    Symbol h_coefficient(int k) const;

    // Formal evaluation at z = zb = 0: picks the (0,0) monomial. Throws if a
    // negative exponent is present (no finite formal limit).
    HPolynomial eval_at_origin() const;

    bool all_integer_exponents() const;
    bool holomorphic() const;  // no zb dependence
    int max_root_denominator() const;

    void check_root_bound(int bound) const;

  private:
    TermMap terms_;
};

struct StarResult {
    Symbol value;
    bool terminating = false;  // true when the series ended before the cut
    int terminated_at = -1;    // highest order with a nonzero term when terminating
};

StarResult moyal_star(const Symbol& f, const Symbol& g, const StarConfig& cfg);

Symbol poisson_bracket(const Symbol& f, const Symbol& g);

// X_f g = {f, g}; X_f z = -df/dzb, X_f zb = df/dz.
Symbol hamilton_field_apply(const Symbol& f, const Symbol& g);
Symbol hamilton_field_on_z(const Symbol& f);
Symbol hamilton_field_on_zb(const Symbol& f);

// True iff the linear map (z', zb') = m (z, zb) preserves the canonical
// brackets; for linear maps this is det m = 1.
bool check_canonical(const GaussianRational m[2][2]);

struct HDerivativeCheck {
    Symbol lhs;  // H^1 coefficient of f * g
    Symbol rhs;  // {f, g}
    bool equal = false;
};
HDerivativeCheck h_derivative_check(const Symbol& f, const Symbol& g);

// Commutative polynomials in the real coordinates (s1, s2).
class SigmaPoly {
  public:
    using TermMap = std::map<std::pair<long, long>, GaussianRational>;

    SigmaPoly() = default;
    static SigmaPoly monomial(long i, long j, GaussianRational c = GaussianRational(1));

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(long i, long j, const GaussianRational& c);

    SigmaPoly& operator+=(const SigmaPoly& o);
    friend SigmaPoly operator+(SigmaPoly a, const SigmaPoly& b) { return a += b; }
    friend SigmaPoly operator*(const SigmaPoly& a, const SigmaPoly& b);
    friend bool operator==(const SigmaPoly& a, const SigmaPoly& b) { return a.terms_ == b.terms_; }

    SigmaPoly scaled(const GaussianRational& c) const;
    SigmaPoly deriv(int axis) const;  // axis 0 -> d/ds1, 1 -> d/ds2

  private:
    TermMap terms_;
};

// s1 = (z + zb)/2, s2 = (z - zb)/(2i): exact linear substitution.
Symbol sigma_to_z(const SigmaPoly& p);
// z = s1 + i s2, zb = s1 - i s2; requires non-negative integer exponents.
SigmaPoly z_to_sigma(const Symbol& s);

// The sigma-coordinate star product exp[(iH/2)(<-d_1 ->d_2 - <-d_2 ->d_1)],
// truncated at cfg.order. Used to cross-check the complex-coordinate form.
SigmaPoly sigma_star_coeff(const SigmaPoly& f, const SigmaPoly& g, int order_n);

}  // namespace starplane
