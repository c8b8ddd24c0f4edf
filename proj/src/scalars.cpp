#include "starplane/scalars.hpp"

#include <sstream>

namespace starplane {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const GaussianRational& g) {
    if (g.is_zero()) return "0";
    std::ostringstream out;
    bool has_re = g.re != 0;
    bool has_im = g.im != 0;
    if (has_re && has_im) {
        out << "(" << to_string(g.re);
        if (g.im > 0) out << "+";
        if (g.im == 1)
            out << "i";
        else if (g.im == -1)
            out << "-i";
        else
            out << to_string(g.im) << "*i";
        out << ")";
    } else if (has_re) {
        out << to_string(g.re);
    } else {
        if (g.im == 1)
            out << "i";
        else if (g.im == -1)
            out << "-i";
        else
            out << to_string(g.im) << "*i";
    }
    return out.str();
}

std::string to_string(const HPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [k, c] : p.coeffs()) {
        std::string cs = to_string(c);
        bool neg = cs.size() > 0 && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
        if (first) {
            first = false;
            if (neg) {
                out << "-";
                cs = cs.substr(1);
            }
        } else {
            if (neg) {
                out << " - ";
                cs = cs.substr(1);
            } else {
                out << " + ";
            }
        }
        if (k == 0) {
            out << cs;
        } else {
            if (cs != "1") out << cs << "*";
            out << "H";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& xs) {
    // Fixed-shape reduction tree: results are bit-stable for a given input
    // order regardless of how callers later parallelize node evaluation.
    if (xs.empty()) return {0.0, 0.0};
    std::vector<std::complex<double>> level = xs;
    while (level.size() > 1) {
        std::vector<std::complex<double>> next;
        next.reserve((level.size() + 1) / 2);
        for (size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] + level[i + 1]);
        if (level.size() % 2 == 1) next.push_back(level.back());
        level = std::move(next);
    }
    return level[0];
}

}  // namespace starplane
