#include "starplane/quadrature.hpp"

#include <boost/math/special_functions/legendre.hpp>
#include <cmath>

#include "starplane/scalars.hpp"

namespace starplane {

QuadratureSpec QuadratureSpec::disc(double radius, int nodes) {
    QuadratureSpec s;
    s.domain = Domain::Disc;
    s.r1 = radius;
    s.nodes = nodes;
    s.validate();
    return s;
}

QuadratureSpec QuadratureSpec::annulus(double inner, double outer, int nodes) {
    QuadratureSpec s;
    s.domain = Domain::Annulus;
    s.r0 = inner;
    s.r1 = outer;
    s.nodes = nodes;
    s.validate();
    return s;
}

QuadratureSpec QuadratureSpec::rectangle(double x0, double x1, double y0, double y1, int nodes) {
    QuadratureSpec s;
    s.domain = Domain::Rectangle;
    s.x0 = x0;
    s.x1 = x1;
    s.y0 = y0;
    s.y1 = y1;
    s.nodes = nodes;
    s.validate();
    return s;
}

QuadratureSpec QuadratureSpec::torus(double lx, double ly, int nodes) {
    QuadratureSpec s;
    s.domain = Domain::Torus;
    s.x0 = 0.0;
    s.x1 = lx;
    s.y0 = 0.0;
    s.y1 = ly;
    s.nodes = nodes;
    s.validate();
    return s;
}

void QuadratureSpec::validate() const {
    if (nodes < 8) throw PreconditionError("quadrature needs at least 8 nodes per axis");
    switch (domain) {
        case Domain::Disc:
            if (r1 <= 0) throw PreconditionError("disc radius must be positive");
            break;
        case Domain::Annulus:
            if (r0 <= 0 || r1 <= r0) throw PreconditionError("annulus needs 0 < r0 < r1");
            break;
        case Domain::Rectangle:
        case Domain::Torus:
            if (x1 <= x0 || y1 <= y0) throw PreconditionError("degenerate rectangle");
            break;
    }
}

QuadratureSpec QuadratureSpec::refined() const {
    QuadratureSpec s = *this;
    s.nodes *= 2;
    return s;
}

void gauss_legendre(int n, std::vector<double>& xs, std::vector<double>& ws) {
    xs.clear();
    ws.clear();
    auto pos = boost::math::legendre_p_zeros<double>(n);
    for (double x : pos) {
        double d = boost::math::legendre_p_prime(n, x);
        double w = 2.0 / ((1.0 - x * x) * d * d);
        if (x == 0.0) {
            xs.push_back(0.0);
            ws.push_back(w);
        } else {
            xs.push_back(-x);
            ws.push_back(w);
            xs.push_back(x);
            ws.push_back(w);
        }
    }
}

std::vector<QuadNode> build_nodes(const QuadratureSpec& spec) {
    spec.validate();
    std::vector<QuadNode> out;
    switch (spec.domain) {
        case Domain::Disc:
        case Domain::Annulus: {
            // Polar: Gauss-Legendre in r with weight r dr, trapezoid in theta.
            double a = spec.domain == Domain::Disc ? 0.0 : spec.r0;
            double b = spec.r1;
            std::vector<double> xs, ws;
            gauss_legendre(spec.nodes, xs, ws);
            int ntheta = 2 * spec.nodes;
            double dtheta = 2.0 * M_PI / ntheta;
            out.reserve(xs.size() * static_cast<size_t>(ntheta));
            for (size_t i = 0; i < xs.size(); ++i) {
                double r = 0.5 * (b - a) * xs[i] + 0.5 * (b + a);
                double wr = 0.5 * (b - a) * ws[i] * r;
                for (int j = 0; j < ntheta; ++j) {
                    double th = dtheta * j;
                    out.push_back({std::polar(r, th), wr * dtheta});
                }
            }
            return out;
        }
        case Domain::Rectangle: {
            std::vector<double> xs, ws;
            gauss_legendre(spec.nodes, xs, ws);
            out.reserve(xs.size() * xs.size());
            for (size_t i = 0; i < xs.size(); ++i) {
                double x = 0.5 * (spec.x1 - spec.x0) * xs[i] + 0.5 * (spec.x1 + spec.x0);
                double wx = 0.5 * (spec.x1 - spec.x0) * ws[i];
                for (size_t j = 0; j < xs.size(); ++j) {
                    double y = 0.5 * (spec.y1 - spec.y0) * xs[j] + 0.5 * (spec.y1 + spec.y0);
                    double wy = 0.5 * (spec.y1 - spec.y0) * ws[j];
                    out.push_back({{x, y}, wx * wy});
                }
            }
            return out;
        }
        case Domain::Torus: {
            double lx = spec.x1 - spec.x0;
            double ly = spec.y1 - spec.y0;
            double dx = lx / spec.nodes;
            double dy = ly / spec.nodes;
            out.reserve(static_cast<size_t>(spec.nodes) * spec.nodes);
            for (int i = 0; i < spec.nodes; ++i) {
                for (int j = 0; j < spec.nodes; ++j) {
                    out.push_back({{spec.x0 + dx * i, spec.y0 + dy * j}, dx * dy});
                }
            }
            return out;
        }
    }
    throw std::logic_error("bad domain");
}

std::complex<double> contour_trapezoid(
    const std::function<std::complex<double>(std::complex<double>)>& f, double r, int samples) {
    if (samples < 16 || samples % 2 != 0)
        throw PreconditionError("contour sampling needs an even count >= 16");
    std::vector<std::complex<double>> vals(static_cast<size_t>(samples));
    double dtheta = 2.0 * M_PI / samples;
    for (int j = 0; j < samples; ++j) {
        double th = dtheta * j;
        std::complex<double> z = std::polar(r, th);
        vals[static_cast<size_t>(j)] = f(z) * std::complex<double>{0.0, 1.0} * z * dtheta;
    }
    return pairwise_sum(vals);
}

}  // namespace starplane
