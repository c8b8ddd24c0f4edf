// Numeric layer: contour integrals of canonical words/symbols with exact
// coefficient extraction, star norms and inner products by quadrature,
// Gram-Schmidt under the star inner product, the Fredholm second-kind solver
// with the operator-norm convergence bound, string-action functionals, and
// the windowed Fourier orthogonality check.
#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "starplane/ncpoly.hpp"
#include "starplane/quadrature.hpp"
#include "starplane/symbol.hpp"
#include "starplane/trigpoly.hpp"

namespace starplane {

struct NumericEnv {
    std::complex<double> h{0.0, 0.1};  // default pure imaginary (H = i hbar)
    int order = 8;                     // star truncation for numeric products

    NumericEnv() = default;
    NumericEnv(std::complex<double> hval, int ord) : h(hval), order(ord) {
        if (!(std::isfinite(hval.real()) && std::isfinite(hval.imag())))
            throw PreconditionError("H must be finite");
        if (ord < 0 || ord > 32) throw PreconditionError("numeric star order must be in [0, 32]");
    }
};

struct ContourSpec {
    Rational radius{1};
    int samples = 64;

    ContourSpec() = default;
    ContourSpec(Rational r, int s) : radius(std::move(r)), samples(s) {
        if (radius <= 0) throw PreconditionError("contour radius must be positive");
        if (samples < 16 || samples % 2 != 0)
            throw PreconditionError("contour samples must be even and >= 16");
    }
};

// Puiseux symbol with complex coefficients (H already evaluated). Exponents
// stay exact so derivatives and termination detection remain sharp.
class NumSymbol {
  public:
    using TermMap = std::map<PuiseuxMonomial, std::complex<double>>;

    NumSymbol() = default;
    static NumSymbol from_symbol(const Symbol& s, std::complex<double> h);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const PuiseuxMonomial& m, std::complex<double> c);

    NumSymbol& operator+=(const NumSymbol& o);
    friend NumSymbol operator+(NumSymbol a, const NumSymbol& b) { return a += b; }
    friend NumSymbol operator-(NumSymbol a, const NumSymbol& b);
    friend NumSymbol operator*(const NumSymbol& a, const NumSymbol& b);

    NumSymbol scaled(std::complex<double> c) const;
    NumSymbol conj() const;  // z <-> zb exponents, conjugated coefficients
    NumSymbol deriv_z() const;
    NumSymbol deriv_zb() const;

    std::complex<double> eval(std::complex<double> z, std::complex<double> zb) const;
    bool has_negative_exponents() const;

  private:
    TermMap terms_;
};

// Truncated numeric star product; terminates early for polynomial pairs.
NumSymbol star_numeric(const NumSymbol& f, const NumSymbol& g, std::complex<double> h, int order);

struct ContourResult {
    // The integral equals 2 pi i * exact_over_2pii(H); exact_value fixes H to
    // the environment value; numeric_value is the trapezoid check.
    HPolynomial exact_over_2pii;
    std::complex<double> exact_value{0.0, 0.0};
    std::complex<double> numeric_value{0.0, 0.0};
    double rel_error = 0.0;
};

ContourResult contour_integral_circle(const NCPoly& p, const ContourSpec& c,
                                      const NumericEnv& env);
ContourResult contour_integral_circle(const Symbol& s, const ContourSpec& c,
                                      const NumericEnv& env);

struct InnerProductResult {
    std::complex<double> value{0.0, 0.0};
    int nodes = 0;
    double refine_delta = 0.0;  // |value - value_at_doubled_nodes|
    // Measure note: integrates against ds1 ds2 (dz dzb = -2i ds1 ds2); the
    // H = 0 norm of 1 on the unit disc is pi.
};

// <f, g>_* = integral of conj(f) * g (conjugation on the left).
InnerProductResult star_inner_product(const Symbol& f, const Symbol& g, const QuadratureSpec& q,
                                      const NumericEnv& env);
std::complex<double> star_inner_product_num(const NumSymbol& f, const NumSymbol& g,
                                            const std::vector<QuadNode>& nodes,
                                            std::complex<double> h, int order);

// || f ||_* with conjugate-left vs conjugate-right order (the order diagnostic).
struct NormDiagnostic {
    std::complex<double> left_norm, right_norm, delta;
};
NormDiagnostic delta_norm_diagnostic(const Symbol& f, const QuadratureSpec& q,
                                     const NumericEnv& env);

// Gram-Schmidt under the star form B(u, v) = int conj(u) * v, extended
// complex-bilinearly over the orthogonalization coefficients: the star norm
// is complex in general, so a Hermitian normalization cannot reach a unit
// diagonal; with the bilinear extension B(e_i, e_j) = delta_ij holds exactly.
// ortho_conj[i] is the formal conjugate of ortho[i] (basis symbols
// conjugated, mixing coefficients untouched) used to evaluate B.
struct GramSchmidtResult {
    std::vector<NumSymbol> ortho;
    std::vector<NumSymbol> ortho_conj;
    // ortho[i] = sum_j coeffs[i][j] * basis[j]
    std::vector<std::vector<std::complex<double>>> coeffs;
};
GramSchmidtResult gram_schmidt(const std::vector<Symbol>& basis, const QuadratureSpec& q,
                               const NumericEnv& env);

// B(u, v) with an explicitly supplied formal conjugate for the left slot.
std::complex<double> star_bilinear_num(const NumSymbol& u_conj, const NumSymbol& v,
                                       const std::vector<QuadNode>& nodes, std::complex<double> h,
                                       int order);

// Separable kernel K(z, zb; z', zb') = sum_i phi_i(z, zb) psi_i(z', zb').
struct KernelSpec {
    std::vector<std::pair<Symbol, Symbol>> terms;
};

struct NormBoundResult {
    double value = 0.0;
    double refined = 0.0;  // at doubled quadrature
};
NormBoundResult operator_norm_bound(const KernelSpec& k, const QuadratureSpec& q,
                                    const NumericEnv& env);

struct NeumannResult {
    std::vector<std::complex<double>> u_nodes;
    std::vector<std::complex<double>> phi_coefficients;  // u = f + sum_i c_i phi_i
    bool converged = false;
    int iterations = 0;
};

// Iterates u <- f + lambda T u with the star-kernel applied at env.order.
// guaranteed = true enforces |lambda| * operator_norm_bound < 1 up front;
// divergence (three consecutive growths) raises DivergenceError.
NeumannResult neumann_solve(const KernelSpec& k, const Symbol& f, std::complex<double> lambda,
                            const QuadratureSpec& q, const NumericEnv& env, int max_iter = 200,
                            bool guaranteed = false);

struct StringActionResult {
    std::complex<double> gamma0, gamma1, gamma2;
    std::complex<double> star_h1, star_h2;  // torus quadrature of the H^1/H^2 star coefficients
    bool stationary_at_h0 = false;          // gamma1 == 0 within tolerance
};
// X must live on the torus cell; nodes is the trapezoid count per axis.
StringActionResult string_action(const TrigPoly& x, int nodes);

struct FourierWindowEntry {
    double k = 0.0, kp = 0.0;
    std::complex<double> closed_form{0.0, 0.0};
    std::complex<double> quadrature{0.0, 0.0};
    double decay_bound = 0.0;  // 2/|k-kp| for k != kp
};
struct FourierWindowReport {
    bool symbolic_corrections_vanish = false;
    int symbolic_orders_checked = 0;
    std::vector<FourierWindowEntry> entries;
};
// Windowed integral over [-L/2, L/2] of e^{ikz} * e^{-ik'z} restricted to the
// real axis, plus the symbolic holomorphic-collapse check.
FourierWindowReport fourier_window_check(const std::vector<Rational>& ks, double window_len,
                                         int samples, const NumericEnv& env);

}  // namespace starplane
