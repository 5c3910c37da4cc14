#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "klrw/laurent.hpp"
#include "klrw/rational.hpp"

namespace klrw {

// Weight given by its values on the simple coroots: coords[i] = alpha_i^vee(weight).
// The symmetric form <w, alpha_i> equals d_i * alpha_i^vee(w) = alpha_i^vee(w)
// since all d_i = 1 here.
struct Weight {
    std::vector<int> coords;

    Weight() = default;
    explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
    static Weight zero(size_t rank) { return Weight(std::vector<int>(rank, 0)); }

    size_t rank() const { return coords.size(); }
    bool dominant() const {
        for (int c : coords)
            if (c < 0) return false;
        return true;
    }
    bool is_zero() const {
        for (int c : coords)
            if (c != 0) return false;
        return true;
    }
    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    bool operator==(const Weight& o) const { return coords == o.coords; }
    bool operator!=(const Weight& o) const { return coords != o.coords; }
    bool operator<(const Weight& o) const { return coords < o.coords; }

    std::string str() const;  // "(2,0,-1)"
};

Weight weight_from_string(const std::string& s, size_t rank);

// Polynomial in two commuting variables u, v; houses Q_ij(u,v).
class BivariatePoly {
  public:
    BivariatePoly() = default;
    static BivariatePoly constant(const Rat& c) {
        BivariatePoly p;
        if (c != 0) p.coeffs_[{0, 0}] = c;
        return p;
    }
    static BivariatePoly monomial(int du, int dv, const Rat& c = Rat(1)) {
        BivariatePoly p;
        if (c != 0) p.coeffs_[{du, dv}] = c;
        return p;
    }
    const std::map<std::pair<int, int>, Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    void add(int du, int dv, const Rat& c) {
        if (c == 0) return;
        auto key = std::make_pair(du, dv);
        Rat& slot = coeffs_[key];
        slot += c;
        if (slot == 0) coeffs_.erase(key);
    }
    BivariatePoly operator+(const BivariatePoly& o) const;
    BivariatePoly operator*(const BivariatePoly& o) const;
    bool operator==(const BivariatePoly& o) const { return coeffs_ == o.coeffs_; }
    // swap of the two variables: p(v,u)
    BivariatePoly swapped() const;
    Rat eval(const Rat& u, const Rat& v) const;
    std::string str() const;

  private:
    std::map<std::pair<int, int>, Rat> coeffs_;
};

// Oriented graph with the derived Cartan data. Vertices are externally
// labelled; internally everything is indexed 0..rank-1.
class RootDatum {
  public:
    // labels: external vertex names; edges: oriented pairs of labels.
    RootDatum(std::vector<int> labels, const std::vector<std::pair<int, int>>& edges);

    size_t rank() const { return labels_.size(); }
    const std::vector<int>& labels() const { return labels_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }  // by index
    int index_of(int label) const;  // throws on unknown label

    int epsilon(int i, int j) const { return epsilon_[i][j]; }  // #edges i -> j
    int cartan(int i, int j) const { return cartan_[i][j]; }
    int d(int) const { return 1; }  // symmetric case throughout
    bool adjacent(int i, int j) const { return i != j && cartan_[i][j] != 0; }

    // <alpha_i, alpha_j> symmetric form on roots; equals cartan(i,j) since d = 1.
    int root_pairing(int i, int j) const { return cartan_[i][j]; }

    Weight simple_root(int i) const;  // alpha_i in coroot coordinates
    Weight fundamental(int i) const;  // omega_i: coroot values e_i

    // test-only hook: corrupts epsilon(i,j) without touching the derived
    // Cartan matrix, for negative-control runs of the relation checker
    void corrupt_epsilon_for_tests(int i, int j, int value) { epsilon_[i][j] = value; }

  private:
    std::vector<int> labels_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> epsilon_;
    std::vector<std::vector<int>> cartan_;
};

// --- operations ----------------------------------------------------------

RootDatum build_root_datum(const std::vector<int>& vertices,
                           const std::vector<std::pair<int, int>>& edges);

// Q_ij(u,v) = (-1)^{eps_ij} (u-v)^{eps_ij + eps_ji}; requires i != j.
BivariatePoly q_polynomial(const RootDatum& d, int i, int j);

// t_ij = Q_ij(1,0) = (-1)^{eps_ij} for i != j, and t_ii = 1.
int t_scalar(const RootDatum& d, int i, int j);

// alpha_i^vee(mu)
int cartan_pairing(const RootDatum& d, const Weight& mu, int i);

struct DimvecResult {
    Weight mu;                   // lambda - sum v_i alpha_i
    std::vector<int> framing_w;  // w_i = alpha_i^vee(lambda)
};

// Requires lambda dominant; v is a nonnegative dimension vector by index.
DimvecResult mu_from_dimvec(const RootDatum& d, const Weight& lambda, const std::vector<int>& v);

// s_i(mu) = mu - alpha_i^vee(mu) alpha_i
Weight simple_reflection(const RootDatum& d, const Weight& mu, int i);

}  // namespace klrw
