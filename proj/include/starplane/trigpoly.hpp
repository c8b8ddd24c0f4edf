// Complex Fourier polynomials on a torus cell [0,Lx) x [0,Ly): finite sums of
// c * exp(2 pi i (m s1/Lx + n s2/Ly)). Closed under products and the complex
// derivatives d_z = (d_1 - i d_2)/2, d_zb = (d_1 + i d_2)/2; the cell integral
// keeps only the (0,0) mode.
#pragma once

#include <complex>
#include <map>

#include "starplane/errors.hpp"

namespace starplane {

class TrigPoly {
  public:
    using Key = std::pair<long, long>;
    using TermMap = std::map<Key, std::complex<double>>;

    TrigPoly(double lx, double ly) : lx_(lx), ly_(ly) {
        if (lx <= 0 || ly <= 0) throw PreconditionError("torus cell must have positive sides");
    }

    static TrigPoly mode(double lx, double ly, long m, long n,
                         std::complex<double> c = {1.0, 0.0});

    double lx() const { return lx_; }
    double ly() const { return ly_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const;

    void add_term(long m, long n, std::complex<double> c);

    TrigPoly& operator+=(const TrigPoly& o);
    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b);
    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);

    TrigPoly scaled(std::complex<double> c) const;
    TrigPoly deriv_s1() const;
    TrigPoly deriv_s2() const;
    TrigPoly deriv_z() const;
    TrigPoly deriv_zb() const;

    std::complex<double> eval(double s1, double s2) const;
    // Integral over one cell: Lx Ly times the (0,0) coefficient.
    std::complex<double> cell_integral() const;

  private:
    double lx_, ly_;
    TermMap terms_;
};

// Order-n coefficient of the Moyal expansion for trig polynomials:
// (1/n!) sum_k C(n,k)(-1)^k (dz^(n-k) dzb^k f)(dzb^(n-k) dz^k g).
TrigPoly trig_star_order(const TrigPoly& f, const TrigPoly& g, int order_n);

}  // namespace starplane
