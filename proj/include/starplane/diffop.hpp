// Polynomial differential operators sum c_{r,s}(z, zb, H, |z|^2) dz^r dzb^s
// with NCPoly coefficients. Composition moves derivatives across coefficients
// with dz z = z dz + 1, dz zi = zi dz - zi^2, and the zb mirrors; |z|^2 powers
// are opaque central symbols for the derivatives.
#pragma once

#include <map>
#include <utility>

#include "starplane/ncpoly.hpp"

namespace starplane {

class DiffOpPoly {
  public:
    using Key = std::pair<int, int>;  // (dz count, dzb count)
    using TermMap = std::map<Key, NCPoly>;

    DiffOpPoly() = default;

    static DiffOpPoly from_coeff(NCPoly c, int r = 0, int s = 0);
    static DiffOpPoly identity() { return from_coeff(NCPoly::one()); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const;

    void add(const Key& k, const NCPoly& c);

    DiffOpPoly operator-() const;
    DiffOpPoly& operator+=(const DiffOpPoly& o);
    DiffOpPoly& operator-=(const DiffOpPoly& o);
    friend DiffOpPoly operator+(DiffOpPoly a, const DiffOpPoly& b) { return a += b; }
    friend DiffOpPoly operator-(DiffOpPoly a, const DiffOpPoly& b) { return a -= b; }
    friend bool operator==(const DiffOpPoly& a, const DiffOpPoly& b);

    DiffOpPoly scaled(const GaussianRational& c) const;

    // Canonicalizes every coefficient and drops zero ones.
    DiffOpPoly canonical() const;

  private:
    TermMap terms_;
};

// Derivation on words induced by dz (respectively dzb); H and |z|^2 powers
// are constants. Result is not canonicalized.
NCPoly coeff_derivative_z(const NCPoly& p);
NCPoly coeff_derivative_zbar(const NCPoly& p);

DiffOpPoly diffop_compose(const DiffOpPoly& a, const DiffOpPoly& b);
DiffOpPoly diffop_commutator(const DiffOpPoly& a, const DiffOpPoly& b);

// exp(ad_X) applied to target, where X must have a vanishing-derivative
// profile that makes the series terminate (e.g. X = alpha * z as a
// multiplication operator). Throws DivergenceError past max_terms.
DiffOpPoly diffop_exp_conjugate(const DiffOpPoly& x, const DiffOpPoly& target,
                                int max_terms = 64);

// L_n = -z^(n+1) dz (negative powers via the zi letter).
DiffOpPoly virasoro_generator(int n);

}  // namespace starplane
