#pragma once

#include <map>
#include <string>
#include <vector>

#include "klrw/rational.hpp"

namespace klrw {

// Polynomial in commuting dot variables y_1..y_n over Q. Exponent vectors
// have fixed length n; deg y_k = 2 in the diagrammatic grading.
class MultiPoly {
  public:
    using Expo = std::vector<int>;

    explicit MultiPoly(size_t nvars = 0) : n_(nvars) {}
    static MultiPoly constant(size_t nvars, const Rat& c) {
        MultiPoly p(nvars);
        if (c != 0) p.coeffs_[Expo(nvars, 0)] = c;
        return p;
    }
    static MultiPoly variable(size_t nvars, size_t k, int power = 1) {
        MultiPoly p(nvars);
        Expo e(nvars, 0);
        e.at(k) = power;
        p.coeffs_[e] = Rat(1);
        return p;
    }
    static MultiPoly monomial(const Expo& e, const Rat& c) {
        MultiPoly p(e.size());
        if (c != 0) p.coeffs_[e] = c;
        return p;
    }

    size_t nvars() const { return n_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Expo, Rat>& coeffs() const { return coeffs_; }
    Rat coeff(const Expo& e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }

    void add(const Expo& e, const Rat& c);
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rat& c, const MultiPoly& a);
    bool operator==(const MultiPoly& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // transposition of variables y_{k+1} <-> y_{k+2} (0-indexed k swaps slots k, k+1)
    MultiPoly swapped(size_t k) const;

    // 2 * (total y-degree); -1 for the zero polynomial. Only defined when
    // homogeneous; throws otherwise.
    int graded_degree() const;
    bool homogeneous() const;

    std::string str() const;

  private:
    size_t n_;
    std::map<Expo, Rat> coeffs_;
};

// Demazure operator: (f - s_k f)/(y_{k+1} - y_{k+2}) with 0-indexed k
// (acts on variable slots k, k+1). Exact; computed monomial-wise.
MultiPoly divided_difference(const MultiPoly& f, size_t k);

// Exact division of f by (y_a - y_b), a != b. Throws if the division leaves
// a remainder.
MultiPoly divide_by_var_difference(const MultiPoly& f, size_t a, size_t b);

}  // namespace klrw
