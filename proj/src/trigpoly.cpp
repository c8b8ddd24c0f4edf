#include "starplane/trigpoly.hpp"

#include <cmath>
#include <vector>

namespace starplane {

namespace {
constexpr double kDropTol = 1e-15;
}

TrigPoly TrigPoly::mode(double lx, double ly, long m, long n, std::complex<double> c) {
    TrigPoly p(lx, ly);
    p.add_term(m, n, c);
    return p;
}

bool TrigPoly::is_zero() const { return terms_.empty(); }

void TrigPoly::add_term(long m, long n, std::complex<double> c) {
    if (std::abs(c) < kDropTol) return;
    auto key = std::make_pair(m, n);
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (std::abs(it->second) < kDropTol) terms_.erase(it);
    }
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
    for (auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

TrigPoly operator-(TrigPoly a, const TrigPoly& b) {
    for (auto& [k, c] : b.terms_) a.add_term(k.first, k.second, -c);
    return a;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly r(a.lx_, a.ly_);
    for (auto& [ka, ca] : a.terms_)
        for (auto& [kb, cb] : b.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

TrigPoly TrigPoly::scaled(std::complex<double> c) const {
    TrigPoly r(lx_, ly_);
    for (auto& [k, v] : terms_) r.add_term(k.first, k.second, v * c);
    return r;
}

TrigPoly TrigPoly::deriv_s1() const {
    TrigPoly r(lx_, ly_);
    for (auto& [k, v] : terms_) {
        if (k.first == 0) continue;
        std::complex<double> factor{0.0, 2.0 * M_PI * k.first / lx_};
        r.add_term(k.first, k.second, v * factor);
    }
    return r;
}

TrigPoly TrigPoly::deriv_s2() const {
    TrigPoly r(lx_, ly_);
    for (auto& [k, v] : terms_) {
        if (k.second == 0) continue;
        std::complex<double> factor{0.0, 2.0 * M_PI * k.second / ly_};
        r.add_term(k.first, k.second, v * factor);
    }
    return r;
}

TrigPoly TrigPoly::deriv_z() const {
    TrigPoly d1 = deriv_s1();
    TrigPoly d2 = deriv_s2();
    return d1.scaled({0.5, 0.0}) + d2.scaled({0.0, -0.5});
}

TrigPoly TrigPoly::deriv_zb() const {
    TrigPoly d1 = deriv_s1();
    TrigPoly d2 = deriv_s2();
    return d1.scaled({0.5, 0.0}) + d2.scaled({0.0, 0.5});
}

std::complex<double> TrigPoly::eval(double s1, double s2) const {
    std::complex<double> acc{0.0, 0.0};
    for (auto& [k, c] : terms_) {
        double phase = 2.0 * M_PI * (k.first * s1 / lx_ + k.second * s2 / ly_);
        acc += c * std::polar(1.0, phase);
    }
    return acc;
}

std::complex<double> TrigPoly::cell_integral() const {
    auto it = terms_.find({0, 0});
    if (it == terms_.end()) return {0.0, 0.0};
    return it->second * (lx_ * ly_);
}

TrigPoly trig_star_order(const TrigPoly& f, const TrigPoly& g, int order_n) {
    std::vector<std::vector<TrigPoly>> fd, gd;
    fd.assign(static_cast<size_t>(order_n) + 1, {});
    gd.assign(static_cast<size_t>(order_n) + 1, {});
    for (int p = 0; p <= order_n; ++p) {
        fd[static_cast<size_t>(p)].assign(static_cast<size_t>(order_n - p) + 1, TrigPoly(f.lx(), f.ly()));
        gd[static_cast<size_t>(p)].assign(static_cast<size_t>(order_n - p) + 1, TrigPoly(f.lx(), f.ly()));
    }
    fd[0][0] = f;
    gd[0][0] = g;
    for (int p = 1; p <= order_n; ++p) {
        fd[static_cast<size_t>(p)][0] = fd[static_cast<size_t>(p - 1)][0].deriv_z();
        gd[static_cast<size_t>(p)][0] = gd[static_cast<size_t>(p - 1)][0].deriv_z();
    }
    for (int p = 0; p <= order_n; ++p) {
        for (int q = 1; p + q <= order_n; ++q) {
            fd[static_cast<size_t>(p)][static_cast<size_t>(q)] =
                fd[static_cast<size_t>(p)][static_cast<size_t>(q - 1)].deriv_zb();
            gd[static_cast<size_t>(p)][static_cast<size_t>(q)] =
                gd[static_cast<size_t>(p)][static_cast<size_t>(q - 1)].deriv_zb();
        }
    }
    double inv_fact = 1.0;
    for (int j = 1; j <= order_n; ++j) inv_fact /= j;
    TrigPoly out(f.lx(), f.ly());
    double binom = 1.0;
    for (int k = 0; k <= order_n; ++k) {
        double c = binom * inv_fact * (k % 2 == 0 ? 1.0 : -1.0);
        out += (fd[static_cast<size_t>(order_n - k)][static_cast<size_t>(k)] *
                gd[static_cast<size_t>(k)][static_cast<size_t>(order_n - k)])
                   .scaled({c, 0.0});
        binom = binom * (order_n - k) / (k + 1);
    }
    return out;
}

}  // namespace starplane
