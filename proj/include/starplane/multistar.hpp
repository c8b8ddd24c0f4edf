// Star product for N commuting complex variables with [z_j, z_j'] = c_jj' H:
//   f exp[(i/2) sum_{j<j'} c_jj' H (<-d_j ->d_j' - <-d_j' ->d_j)] g
// truncated in H. The entries of the commutator matrix are exact rational
// multiples of a single formal parameter H.
#pragma once

#include <map>
#include <vector>

#include "starplane/scalars.hpp"
#include "starplane/errors.hpp"

namespace starplane {

class HMatrix {
  public:
    explicit HMatrix(int n) : n_(n), entries_(static_cast<size_t>(n) * n) {}

    int dim() const { return n_; }
    void set(int j, int k, const GaussianRational& c) {
        if (j == k && !c.is_zero()) throw PreconditionError("HMatrix diagonal must vanish");
        entries_[idx(j, k)] = c;
        entries_[idx(k, j)] = -c;
    }
    const GaussianRational& at(int j, int k) const { return entries_[idx(j, k)]; }

  private:
    size_t idx(int j, int k) const {
        if (j < 0 || j >= n_ || k < 0 || k >= n_) throw PreconditionError("HMatrix index");
        return static_cast<size_t>(j) * n_ + k;
    }
    int n_;
    std::vector<GaussianRational> entries_;
};

// Finite map from exponent vectors to coefficients in H.
class MultiSymbol {
  public:
    using Key = std::vector<int>;
    using TermMap = std::map<Key, HPolynomial>;

    explicit MultiSymbol(int vars) : vars_(vars) {}

    static MultiSymbol variable(int vars, int j);

    int vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const HPolynomial& c);

    MultiSymbol& operator+=(const MultiSymbol& o);
    friend MultiSymbol operator+(MultiSymbol a, const MultiSymbol& b) { return a += b; }
    friend MultiSymbol operator-(MultiSymbol a, const MultiSymbol& b);
    friend MultiSymbol operator*(const MultiSymbol& a, const MultiSymbol& b);
    friend bool operator==(const MultiSymbol& a, const MultiSymbol& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    MultiSymbol scaled(const HPolynomial& c) const;
    MultiSymbol deriv(int j) const;
    MultiSymbol h_coefficient(int k) const;

  private:
    int vars_;
    TermMap terms_;
};

MultiSymbol moyal_star_multi(const MultiSymbol& f, const MultiSymbol& g, const HMatrix& h,
                             int order);

}  // namespace starplane
