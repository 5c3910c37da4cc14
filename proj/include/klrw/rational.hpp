#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace klrw {

// Exact rational scalars. Everything in the workbench is computed over Q
// (or Q(q)); floating point never appears.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "n" or "n/d" with an optional leading sign.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw Error("zero denominator in rational literal '" + s + "'");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw Error("bad rational literal '" + s + "'");
    }
}

}  // namespace klrw
