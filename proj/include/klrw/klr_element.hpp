#pragma once

#include <map>
#include <string>
#include <vector>

#include "klrw/rational.hpp"
#include "klrw/rootdata.hpp"

namespace klrw::klr {

// Word in the vertex set (stored by internal vertex index).
using Word = std::vector<int>;

// Permutation of strand positions: perm[p] = top position of the strand
// entering at bottom position p.
using Perm = std::vector<int>;

Perm perm_identity(size_t n);
size_t perm_length(const Perm& w);  // inversion count
Perm perm_of_psi_word(const std::vector<int>& letters, size_t n);
// s_k o w (crossing applied above w)
Perm compose_stop(int k, const Perm& w);
// word transported along the diagram: result[w[p]] = i[p]
Word top_word(const Word& i, const Perm& w);

// Normal-form basis diagram psi_w y^dots e(word): idempotent at the bottom,
// one fixed reduced expression of the permutation, dots at the top (indexed
// by top positions).
struct DiagramBasisElement {
    Word word;
    Perm perm;
    std::vector<int> dots;

    size_t strands() const { return word.size(); }
    Word top() const { return top_word(word, perm); }
    auto operator<=>(const DiagramBasisElement& o) const = default;
};

// Finitely supported rational combination of basis diagrams on n strands.
class KLRElement {
  public:
    explicit KLRElement(size_t n = 0) : n_(n) {}

    size_t strands() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<DiagramBasisElement, Rat>& terms() const { return terms_; }

    void add_term(const DiagramBasisElement& b, const Rat& c);
    KLRElement& operator+=(const KLRElement& o);
    KLRElement& operator-=(const KLRElement& o);
    friend KLRElement operator+(KLRElement a, const KLRElement& b) { return a += b; }
    friend KLRElement operator-(KLRElement a, const KLRElement& b) { return a -= b; }
    friend KLRElement operator*(const Rat& c, const KLRElement& x);
    bool operator==(const KLRElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const KLRElement& o) const { return !(*this == o); }

    // Adds exponent vector (indexed by top positions) to every term.
    KLRElement with_dots(const std::vector<int>& expo) const;

    // Homogeneous degree; throws on inhomogeneous input. Zero element: 0.
    int degree(const RootDatum& d) const;
    bool homogeneous(const RootDatum& d) const;

    // Canonical printing as a sum of generator products, e.g.
    // "y(1)*psi(1)*e(1 2) - 2*e(2 1)"; vertex indices are printed as the
    // datum's external labels. Reparseable by the expression grammar.
    std::string str(const RootDatum& d) const;

  private:
    size_t n_;
    std::map<DiagramBasisElement, Rat> terms_;
};

// Degree of a single basis diagram: dots contribute <a_i,a_i> = 2, a crossing
// of labels a,b contributes -<a_a,a_b>.
int diagram_degree(const RootDatum& d, const DiagramBasisElement& b);

}  // namespace klrw::klr
