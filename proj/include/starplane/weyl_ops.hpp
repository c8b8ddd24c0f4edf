// Operations on the word algebra: commutators, inverse-letter substitution,
// Weyl symmetrization, normal-ordered derivatives, exponential similarity
// transforms, and truncated exponentials.
#pragma once

#include "starplane/ncpoly.hpp"

namespace starplane {

// normal_form(a b - b a).
NCPoly commutator(const NCPoly& a, const NCPoly& b);

// Replaces zi -> |z|^-2 zb and zbi -> |z|^-2 z, then canonicalizes.
NCPoly substitute_inverses(const NCPoly& p);

// Average over all distinct permutations of the word, canonicalized.
// Throws PreconditionError when the word is longer than max_len.
NCPoly weyl_order(const Word& w, int max_len = 8);

// d/dz acting from the left on a canonical, inverse-free polynomial:
// z^l zb^m -> l z^(l-1) zb^m. H and |z|^2 factors are constants.
NCPoly left_derivative_z(const NCPoly& p);
// d/dzb acting from the right: z^l zb^m -> m z^l zb^(m-1).
NCPoly right_derivative_zbar(const NCPoly& p);

// g_{z zbar} for the flat Kaehler potential (scale/2) * nf(z zb); the metric
// is the constant scale/2.
NCPoly kaehler_metric(const GaussianRational& scale);

enum class ExpDirection { Z, Zb };

// direction Z:  e^{a z}  t e^{-a z}  = exp(2 H a d/dzb)(t)
// direction Zb: e^{-a zb} t e^{a zb} = exp(2 H a d/dz)(t)
// Exact (the derivative series terminates on polynomials). The target must be
// canonical and free of inverse letters.
NCPoly conjugate_by_exp(ExpDirection direction, const GaussianRational& alpha,
                        const NCPoly& target);

// Truncated exponential sum_k p^k / k!, canonicalizing at every step and
// dropping canonical terms with H-degree > h_order or word length > word_len.
// The scalar part of p must vanish (e^c for a constant c is not exact).
NCPoly exp_truncated(const NCPoly& p, int h_order = 6, int word_len = 8);

struct IdentityCheck {
    bool equal = false;
    NCPoly difference;  // canonical lhs - rhs
};
IdentityCheck verify_identity(const NCPoly& lhs, const NCPoly& rhs);

// Antilinear conjugation: z <-> zb, zi <-> zbi (order preserved), H -> -H,
// coefficients complex-conjugated. An algebra automorphism; commutes with
// normal_form.
NCPoly hermitian_conjugate(const NCPoly& p);

// Commutative specialization: drops every term carrying H and sorts words
// freely (H = 0 collapses the algebra to a commutative one).
NCPoly at_h_zero(const NCPoly& p);

}  // namespace starplane
