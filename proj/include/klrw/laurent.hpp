#pragma once

#include <map>
#include <string>

#include "klrw/rational.hpp"

namespace klrw {

// Laurent polynomial in one variable q with exact rational coefficients.
// The coefficient table is always kept free of explicit zeros.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rat& c) {
        if (c != 0) coeffs_[0] = c;
    }
    static LaurentPoly monomial(int exp, const Rat& c = Rat(1)) {
        LaurentPoly p;
        if (c != 0) p.coeffs_[exp] = c;
        return p;
    }
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(Rat(1)); }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }
    int min_exp() const;  // throws on zero
    int max_exp() const;

    void add(int exp, const Rat& c) {
        if (c == 0) return;
        Rat& slot = coeffs_[exp];
        slot += c;
        if (slot == 0) coeffs_.erase(exp);
    }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    friend LaurentPoly operator*(const Rat& c, const LaurentPoly& a);
    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const { return coeffs_ < o.coeffs_; }

    // q -> q^{-1}; an anti-automorphism of the coefficient ring fixing
    // quantum integers.
    LaurentPoly bar() const;

    Rat eval(const Rat& x) const;  // requires x != 0 when negative exponents occur

    // Canonical form: descending exponents, "q^-2" style, q^0 suppressed,
    // e.g. "q^2 + 2 + q^-2" or "-3/2*q + 1".
    std::string str() const;

  private:
    std::map<int, Rat> coeffs_;
};

// Parses exactly the grammar produced by LaurentPoly::str (whitespace tolerant).
LaurentPoly laurent_from_string(const std::string& s);

// [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}; [0] = 0; [-n] = -[n].
LaurentPoly quantum_integer(int n);

// [n]! = [n][n-1]...[1] for n >= 0.
LaurentPoly quantum_factorial(int n);

}  // namespace klrw
