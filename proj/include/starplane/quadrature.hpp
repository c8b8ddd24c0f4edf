// Quadrature node construction for the numeric layer: tensor Gauss-Legendre
// on rectangles, Gauss-Legendre x trapezoid in polar form for discs and
// annuli, and periodic trapezoid on tori. Weights carry the area measure
// d(sigma1) d(sigma2).
#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "starplane/errors.hpp"

namespace starplane {

enum class Domain { Disc, Annulus, Rectangle, Torus };

struct QuadratureSpec {
    Domain domain = Domain::Disc;
    double r0 = 0.0;  // inner radius (annulus)
    double r1 = 1.0;  // outer radius (disc/annulus)
    double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;  // rectangle / torus cell
    int nodes = 16;   // per axis

    static QuadratureSpec disc(double radius, int nodes);
    static QuadratureSpec annulus(double inner, double outer, int nodes);
    static QuadratureSpec rectangle(double x0, double x1, double y0, double y1, int nodes);
    static QuadratureSpec torus(double lx, double ly, int nodes);

    void validate() const;
    QuadratureSpec refined() const;  // doubled node count
};

struct QuadNode {
    std::complex<double> z;
    double w;
};

std::vector<QuadNode> build_nodes(const QuadratureSpec& spec);

// Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& xs, std::vector<double>& ws);

// Uniform-angle trapezoid approximation of a closed contour integral
// \oint f(z) dz over |z| = r.
std::complex<double> contour_trapezoid(const std::function<std::complex<double>(std::complex<double>)>& f,
                                       double r, int samples);

}  // namespace starplane
