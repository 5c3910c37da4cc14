#include "klrw/multipoly.hpp"

#include <numeric>
#include <sstream>

namespace klrw {

void MultiPoly::add(const Expo& e, const Rat& c) {
    if (c == 0) return;
    if (e.size() != n_) throw Error("exponent length mismatch");
    Rat& slot = coeffs_[e];
    slot += c;
    if (slot == 0) coeffs_.erase(e);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (n_ != o.n_) throw Error("variable count mismatch");
    for (const auto& [e, c] : o.coeffs_) add(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (n_ != o.n_) throw Error("variable count mismatch");
    for (const auto& [e, c] : o.coeffs_) add(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.n_ != b.n_) throw Error("variable count mismatch");
    MultiPoly r(a.n_);
    MultiPoly::Expo e(a.n_);
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) {
            for (size_t k = 0; k < a.n_; ++k) e[k] = ea[k] + eb[k];
            r.add(e, ca * cb);
        }
    return r;
}

MultiPoly operator*(const Rat& c, const MultiPoly& a) {
    MultiPoly r(a.n_);
    if (c == 0) return r;
    for (const auto& [e, k] : a.coeffs_) r.coeffs_[e] = c * k;
    return r;
}

MultiPoly MultiPoly::swapped(size_t k) const {
    if (k + 1 >= n_) throw Error("transposition index out of range");
    MultiPoly r(n_);
    for (const auto& [e, c] : coeffs_) {
        Expo f = e;
        std::swap(f[k], f[k + 1]);
        r.coeffs_[f] = c;
    }
    return r;
}

int MultiPoly::graded_degree() const {
    if (coeffs_.empty()) return -1;
    int deg = -1;
    for (const auto& [e, c] : coeffs_) {
        (void)c;
        int d = 2 * std::accumulate(e.begin(), e.end(), 0);
        if (deg == -1)
            deg = d;
        else if (deg != d)
            throw Error("graded_degree of inhomogeneous polynomial");
    }
    return deg;
}

bool MultiPoly::homogeneous() const {
    int deg = -2;
    for (const auto& [e, c] : coeffs_) {
        (void)c;
        int d = std::accumulate(e.begin(), e.end(), 0);
        if (deg == -2)
            deg = d;
        else if (deg != d)
            return false;
    }
    return true;
}

std::string MultiPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = c < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        Rat a = neg ? Rat(-c) : c;
        bool constant = true;
        for (int x : e) constant = constant && x == 0;
        bool printed_coeff = false;
        if (a != 1 || constant) {
            os << rat_to_string(a);
            printed_coeff = true;
        }
        for (size_t k = 0; k < e.size(); ++k) {
            if (!e[k]) continue;
            if (printed_coeff) os << "*";
            os << "y" << (k + 1);
            if (e[k] != 1) os << "^" << e[k];
            printed_coeff = true;
        }
        first = false;
    }
    return os.str();
}

namespace {

// (u^a v^b - u^b v^a)/(u - v) on slots (k, k+1), telescoped exactly.
void divided_monomial(MultiPoly& out, const MultiPoly::Expo& e, const Rat& c, size_t k) {
    int a = e[k], b = e[k + 1];
    if (a == b) return;
    MultiPoly::Expo f = e;
    if (a > b) {
        for (int s = b; s < a; ++s) {
            f[k] = s;
            f[k + 1] = a + b - 1 - s;
            out.add(f, c);
        }
    } else {
        for (int s = a; s < b; ++s) {
            f[k] = s;
            f[k + 1] = a + b - 1 - s;
            out.add(f, -c);
        }
    }
}

}  // namespace

MultiPoly divided_difference(const MultiPoly& f, size_t k) {
    if (k + 1 >= f.nvars()) throw Error("divided_difference index out of range");
    MultiPoly r(f.nvars());
    for (const auto& [e, c] : f.coeffs()) divided_monomial(r, e, c, k);
    return r;
}

MultiPoly divide_by_var_difference(const MultiPoly& f, size_t a, size_t b) {
    if (a == b || a >= f.nvars() || b >= f.nvars())
        throw Error("divide_by_var_difference: bad variable pair");
    // Treat f as a polynomial in y_a and divide by (y_a - y_b) by synthetic
    // division: iteratively peel the highest y_a power.
    MultiPoly rem = f;
    MultiPoly quot(f.nvars());
    while (!rem.is_zero()) {
        // find a term with maximal y_a exponent
        auto best = rem.coeffs().begin();
        for (auto it = rem.coeffs().begin(); it != rem.coeffs().end(); ++it)
            if (it->first[a] > best->first[a]) best = it;
        if (best->first[a] == 0) throw Error("inexact division by variable difference");
        MultiPoly::Expo e = best->first;
        Rat c = best->second;
        e[a] -= 1;
        quot.add(e, c);
        // rem -= (y_a - y_b) * c y^e
        MultiPoly::Expo t = e;
        t[a] += 1;
        rem.add(t, -c);
        t = e;
        t[b] += 1;
        rem.add(t, c);
    }
    return quot;
}

}  // namespace klrw
