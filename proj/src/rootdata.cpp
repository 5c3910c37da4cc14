#include "klrw/rootdata.hpp"

#include <algorithm>
#include <sstream>

namespace klrw {

Weight Weight::operator+(const Weight& o) const {
    if (coords.size() != o.coords.size()) throw Error("weight rank mismatch");
    Weight r = *this;
    for (size_t k = 0; k < coords.size(); ++k) r.coords[k] += o.coords[k];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    if (coords.size() != o.coords.size()) throw Error("weight rank mismatch");
    Weight r = *this;
    for (size_t k = 0; k < coords.size(); ++k) r.coords[k] -= o.coords[k];
    return r;
}

std::string Weight::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < coords.size(); ++k) {
        if (k) os << ",";
        os << coords[k];
    }
    os << ")";
    return os.str();
}

Weight weight_from_string(const std::string& s, size_t rank) {
    std::string t = s;
    for (char& c : t)
        if (c == '(' || c == ')' || c == ',') c = ' ';
    std::istringstream is(t);
    std::vector<int> coords;
    int x;
    while (is >> x) coords.push_back(x);
    if (coords.size() != rank)
        throw Error("weight '" + s + "' has " + std::to_string(coords.size()) +
                    " coordinates, expected " + std::to_string(rank));
    return Weight(coords);
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
    BivariatePoly r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add(k.first, k.second, c);
    return r;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
    BivariatePoly r;
    for (const auto& [ka, ca] : coeffs_)
        for (const auto& [kb, cb] : o.coeffs_)
            r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

BivariatePoly BivariatePoly::swapped() const {
    BivariatePoly r;
    for (const auto& [k, c] : coeffs_) r.add(k.second, k.first, c);
    return r;
}

Rat BivariatePoly::eval(const Rat& u, const Rat& v) const {
    Rat acc(0);
    for (const auto& [k, c] : coeffs_) {
        Rat p(1);
        for (int t = 0; t < k.first; ++t) p *= u;
        for (int t = 0; t < k.second; ++t) p *= v;
        acc += c * p;
    }
    return acc;
}

std::string BivariatePoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [k, c] = *it;
        bool neg = c < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        Rat a = neg ? Rat(-c) : c;
        bool unit = (a == 1) && (k.first or k.second);
        if (!unit) os << rat_to_string(a);
        if (k.first) {
            if (!unit) os << "*";
            os << "u";
            if (k.first != 1) os << "^" << k.first;
            unit = false;
        }
        if (k.second) {
            if (!unit) os << "*";
            os << "v";
            if (k.second != 1) os << "^" << k.second;
        }
        first = false;
    }
    return os.str();
}

RootDatum::RootDatum(std::vector<int> labels, const std::vector<std::pair<int, int>>& edges)
    : labels_(std::move(labels)) {
    size_t r = labels_.size();
    for (size_t a = 0; a < r; ++a)
        for (size_t b = a + 1; b < r; ++b)
            if (labels_[a] == labels_[b])
                throw Error("duplicate vertex label " + std::to_string(labels_[a]));
    epsilon_.assign(r, std::vector<int>(r, 0));
    cartan_.assign(r, std::vector<int>(r, 0));
    for (const auto& [a, b] : edges) {
        int i = index_of(a), j = index_of(b);
        if (i == j) throw Error("loop edge at vertex " + std::to_string(a));
        edges_.emplace_back(i, j);
        epsilon_[i][j] += 1;
    }
    for (size_t i = 0; i < r; ++i) {
        cartan_[i][i] = 2;
        for (size_t j = 0; j < r; ++j)
            if (i != j) cartan_[i][j] = -(epsilon_[i][j] + epsilon_[j][i]);
    }
}

int RootDatum::index_of(int label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw Error("unknown vertex " + std::to_string(label));
    return static_cast<int>(it - labels_.begin());
}

Weight RootDatum::simple_root(int i) const {
    Weight w = Weight::zero(rank());
    for (size_t k = 0; k < rank(); ++k) w.coords[k] = cartan_[i][k];
    return w;
}

Weight RootDatum::fundamental(int i) const {
    Weight w = Weight::zero(rank());
    w.coords[i] = 1;
    return w;
}

RootDatum build_root_datum(const std::vector<int>& vertices,
                           const std::vector<std::pair<int, int>>& edges) {
    return RootDatum(vertices, edges);
}

BivariatePoly q_polynomial(const RootDatum& d, int i, int j) {
    if (i == j) throw Error("Q_ii is not defined as a polynomial");
    int e = d.epsilon(i, j) + d.epsilon(j, i);
    Rat sign = (d.epsilon(i, j) % 2 == 0) ? Rat(1) : Rat(-1);
    // (u - v)^e expanded
    BivariatePoly umv;
    umv.add(1, 0, Rat(1));
    umv.add(0, 1, Rat(-1));
    BivariatePoly r = BivariatePoly::constant(sign);
    for (int k = 0; k < e; ++k) r = r * umv;
    return r;
}

int t_scalar(const RootDatum& d, int i, int j) {
    if (i == j) return 1;
    return d.epsilon(i, j) % 2 == 0 ? 1 : -1;
}

int cartan_pairing(const RootDatum&, const Weight& mu, int i) {
    return mu.coords.at(i);
}

DimvecResult mu_from_dimvec(const RootDatum& d, const Weight& lambda, const std::vector<int>& v) {
    if (!lambda.dominant()) throw Error("mu_from_dimvec requires a dominant weight");
    if (v.size() != d.rank()) throw Error("dimension vector rank mismatch");
    DimvecResult out;
    out.mu = lambda;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) throw Error("negative dimension vector entry");
        for (size_t k = 0; k < d.rank(); ++k)
            out.mu.coords[k] -= v[i] * d.cartan(static_cast<int>(i), static_cast<int>(k));
    }
    out.framing_w = lambda.coords;
    return out;
}

Weight simple_reflection(const RootDatum& d, const Weight& mu, int i) {
    Weight r = mu;
    int n = mu.coords.at(i);
    for (size_t k = 0; k < d.rank(); ++k) r.coords[k] -= n * d.cartan(i, static_cast<int>(k));
    return r;
}

}  // namespace klrw
