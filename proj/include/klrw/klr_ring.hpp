#pragma once

#include <map>
#include <utility>
#include <vector>

#include "klrw/klr_element.hpp"
#include "klrw/multipoly.hpp"
#include "klrw/rootdata.hpp"

namespace klrw::klr {

// Rewriting engine for R_nu on n strands over a fixed root datum. Products
// are straightened to the normal-form basis {psi_w y^a e(i)} with one fixed
// reduced expression per permutation (greedy least left descent) and dots at
// the top. Caches are per-instance; use one ring per thread.
class KlrRing {
  public:
    KlrRing(const RootDatum& datum, size_t n) : datum_(datum), n_(n) {}

    const RootDatum& datum() const { return datum_; }
    size_t strands() const { return n_; }

    KLRElement idempotent(const Word& i) const;
    KLRElement dot(size_t k, const Word& i) const;       // y_{k+1} e(i), 0-indexed k
    KLRElement crossing(size_t k, const Word& i) const;  // psi_{k+1} e(i)

    KLRElement multiply(const KLRElement& x, const KLRElement& y);

    // Left multiplication by single generators (all words).
    KLRElement left_dot(size_t k, const KLRElement& x) const;
    KLRElement left_crossing(size_t k, const KLRElement& x);

    // Canonical reduced expression of w (letters are 0-indexed positions).
    const std::vector<int>& canonical_word(const Perm& w);

    // Hom-space graded dimension: sum of q^{deg} over basis diagrams with
    // bottom word i, top word j, degree <= max_deg. Different content gives
    // the zero series.
    std::map<int, Int> graded_dim_hom(const Word& i, const Word& j, int max_deg);

    // All words of given content (counts per vertex index), sorted.
    static std::vector<Word> words_of_content(const std::vector<int>& content);
    // Enumerate all permutations of S_n, sorted by (length, lex).
    std::vector<Perm> all_perms() const;

    // Figure-4 relation instances used by both the checker and the tests.
    // Correction polynomial of the braid relation on bottom labels (t1,t2,t3):
    // (Q_{t1,t2}(y_{m0+2}, y_{m0+1}) - Q_{t1,t2}(y_{m0}, y_{m0+1}))/(y_{m0+2} - y_{m0}).
    MultiPoly braid_correction(int t1, int t2, size_t m0) const;
    // Q_{a,b}(y_k, y_{k+1}) as a dot polynomial.
    MultiPoly q_poly_dots(int a, int b, size_t k) const;

  private:
    KLRElement to_normal(const std::vector<int>& psi_word, const Word& i);
    KLRElement left_crossing_term(size_t k, const DiagramBasisElement& b, const Rat& c);
    KLRElement fold_moves(std::vector<int> word, size_t prefix_len, const Word& i);

    const RootDatum& datum_;
    size_t n_;
    std::map<Perm, std::vector<int>> canon_;
    std::map<std::pair<std::vector<int>, Word>, KLRElement> normal_memo_;
};

}  // namespace klrw::klr
