// Exact scalar tower: rationals, Gaussian rationals, and polynomials in the
// central deformation parameter H. Every symbolic result in the engine is
// built from these; no floating point enters until the numeric layer.
#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace starplane {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const Rational& q) {
    if (!is_integer(q)) throw std::domain_error("rational is not an integer");
    if (!q.get_num().fits_slong_p()) throw std::overflow_error("integer out of range");
    return q.get_num().get_si();
}

inline double to_double(const Rational& q) { return q.get_d(); }

std::string to_string(const Rational& q);

// a + b*i with exact rational parts.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(long n) : re(rat(n)) {}
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {rat(0), rat(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        Rational n2 = o.re * o.re + o.im * o.im;
        Rational r = (re * o.re + im * o.im) / n2;
        Rational i = (im * o.re - re * o.im) / n2;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

std::string to_string(const GaussianRational& g);

// Finite polynomial in H with Gaussian-rational coefficients. Zero
// coefficients are never stored; the zero polynomial is the empty map.
class HPolynomial {
  public:
    HPolynomial() = default;
    HPolynomial(GaussianRational c) {
        if (!c.is_zero()) coeffs_[0] = std::move(c);
    }
    HPolynomial(long n) : HPolynomial(GaussianRational(n)) {}

    static HPolynomial h_power(int k, GaussianRational c = GaussianRational(1)) {
        HPolynomial p;
        if (!c.is_zero()) p.coeffs_[k] = std::move(c);
        return p;
    }

    const std::map<int, GaussianRational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

    GaussianRational coeff(int k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? GaussianRational() : it->second;
    }

    void add_term(int k, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    HPolynomial operator-() const {
        HPolynomial r;
        for (auto& [k, c] : coeffs_) r.coeffs_[k] = -c;
        return r;
    }
    HPolynomial& operator+=(const HPolynomial& o) {
        for (auto& [k, c] : o.coeffs_) add_term(k, c);
        return *this;
    }
    HPolynomial& operator-=(const HPolynomial& o) {
        for (auto& [k, c] : o.coeffs_) add_term(k, -c);
        return *this;
    }
    friend HPolynomial operator+(HPolynomial a, const HPolynomial& b) { return a += b; }
    friend HPolynomial operator-(HPolynomial a, const HPolynomial& b) { return a -= b; }
    friend HPolynomial operator*(const HPolynomial& a, const HPolynomial& b) {
        HPolynomial r;
        for (auto& [ka, ca] : a.coeffs_)
            for (auto& [kb, cb] : b.coeffs_) r.add_term(ka + kb, ca * cb);
        return r;
    }
    friend bool operator==(const HPolynomial& a, const HPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    HPolynomial scaled(const GaussianRational& c) const {
        HPolynomial r;
        if (c.is_zero()) return r;
        for (auto& [k, v] : coeffs_) r.coeffs_[k] = v * c;
        return r;
    }

    // Drops every term of H-degree above `order`.
    HPolynomial truncated(int order) const {
        HPolynomial r;
        for (auto& [k, c] : coeffs_) {
            if (k <= order) r.coeffs_[k] = c;
        }
        return r;
    }

    // Entrywise complex conjugation under the convention H-bar = -H.
    HPolynomial conj_hbar() const {
        HPolynomial r;
        for (auto& [k, c] : coeffs_) {
            GaussianRational v = c.conj();
            if (k % 2 != 0) v = -v;
            r.coeffs_[k] = v;
        }
        return r;
    }

    std::complex<double> eval(std::complex<double> h) const {
        std::complex<double> acc{0.0, 0.0};
        for (auto& [k, c] : coeffs_) acc += c.to_complex() * std::pow(h, k);
        return acc;
    }

  private:
    std::map<int, GaussianRational> coeffs_;
};

std::string to_string(const HPolynomial& p);

// Deterministic pairwise (fixed-shape tree) summation for numeric reductions.
std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& xs);

}  // namespace starplane
