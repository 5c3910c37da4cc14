#include "klrw/laurent.hpp"

#include <cctype>
#include <sstream>

namespace klrw {

int LaurentPoly::min_exp() const {
    if (coeffs_.empty()) throw Error("min_exp of zero Laurent polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (coeffs_.empty()) throw Error("max_exp of zero Laurent polynomial");
    return coeffs_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) r.add(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly operator*(const Rat& c, const LaurentPoly& a) {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, k] : a.coeffs_) r.coeffs_[e] = c * k;
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
}

Rat LaurentPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (const auto& [e, c] : coeffs_) {
        if (e >= 0) {
            Rat p(1);
            for (int k = 0; k < e; ++k) p *= x;
            acc += c * p;
        } else {
            if (x == 0) throw Error("evaluating negative q-power at 0");
            Rat p(1);
            for (int k = 0; k < -e; ++k) p *= x;
            acc += c / p;
        }
    }
    return acc;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        int e = it->first;
        Rat c = it->second;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        Rat a = neg ? Rat(-c) : c;
        if (e == 0) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

namespace {

struct LaurentParser {
    const std::string& s;
    size_t pos = 0;

    explicit LaurentParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    [[noreturn]] void fail(const std::string& expected) {
        throw Error("Laurent parse error at position " + std::to_string(pos) + ": expected " +
                    expected);
    }
    Int integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("integer");
        return Int(s.substr(start, pos - start));
    }
    Rat rational() {
        Int num = integer();
        skip_ws();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            Int den = integer();
            if (den == 0) fail("nonzero denominator");
            return Rat(num, den);
        }
        return Rat(num);
    }
    // term := [rational '*'] 'q' ['^' int] | rational
    void term(LaurentPoly& out, bool negate) {
        skip_ws();
        Rat c(1);
        bool have_coeff = false;
        if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '-' ||
                               s[pos] == '+')) {
            c = rational();
            have_coeff = true;
        }
        skip_ws();
        int exp = 0;
        if (pos < s.size() && s[pos] == 'q') {
            ++pos;
            exp = 1;
            skip_ws();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                exp = static_cast<int>(integer());
            }
        } else if (pos < s.size() && s[pos] == '*') {
            fail("'q' after '*'");
        } else if (!have_coeff) {
            fail("coefficient or 'q'");
        }
        out.add(exp, negate ? Rat(-c) : c);
    }
    LaurentPoly parse() {
        LaurentPoly out;
        skip_ws();
        bool neg = false;
        if (pos < s.size() && s[pos] == '-') {
            neg = true;
            ++pos;
        }
        // leading term, then ('+'|'-') term ...
        term_with_star(out, neg);
        while (!eof()) {
            skip_ws();
            if (s[pos] == '+') {
                ++pos;
                term_with_star(out, false);
            } else if (s[pos] == '-') {
                ++pos;
                term_with_star(out, true);
            } else {
                fail("'+' or '-'");
            }
        }
        return out;
    }
    // handles the optional 'c*q^e' form; '*' may only follow a coefficient
    void term_with_star(LaurentPoly& out, bool negate) {
        skip_ws();
        if (pos < s.size() && s[pos] == 'q') {
            term(out, negate);
            return;
        }
        Rat c = rational();
        skip_ws();
        if (pos < s.size() && s[pos] == '*') {
            ++pos;
            skip_ws();
            if (pos >= s.size() || s[pos] != 'q') fail("'q' after '*'");
            ++pos;
            int exp = 1;
            skip_ws();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                exp = static_cast<int>(integer());
            }
            out.add(exp, negate ? Rat(-c) : c);
        } else {
            out.add(0, negate ? Rat(-c) : c);
        }
    }
};

}  // namespace

LaurentPoly laurent_from_string(const std::string& s) {
    LaurentParser p(s);
    return p.parse();
}

LaurentPoly quantum_integer(int n) {
    if (n == 0) return LaurentPoly::zero();
    bool neg = n < 0;
    int m = neg ? -n : n;
    LaurentPoly r;
    for (int e = m - 1; e >= 1 - m; e -= 2) r.add(e, neg ? Rat(-1) : Rat(1));
    return r;
}

LaurentPoly quantum_factorial(int n) {
    if (n < 0) throw Error("quantum_factorial of negative argument");
    LaurentPoly r = LaurentPoly::one();
    for (int k = 2; k <= n; ++k) r *= quantum_integer(k);
    return r;
}

}  // namespace klrw
