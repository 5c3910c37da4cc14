#include "klrw/klr_element.hpp"

#include <numeric>
#include <sstream>

namespace klrw::klr {

Perm perm_identity(size_t n) {
    Perm w(n);
    std::iota(w.begin(), w.end(), 0);
    return w;
}

size_t perm_length(const Perm& w) {
    size_t inv = 0;
    for (size_t a = 0; a < w.size(); ++a)
        for (size_t b = a + 1; b < w.size(); ++b)
            if (w[a] > w[b]) ++inv;
    return inv;
}

Perm perm_of_psi_word(const std::vector<int>& letters, size_t n) {
    // element psi_{k_1}...psi_{k_m}: rightmost letter acts first (bottom)
    Perm w = perm_identity(n);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w = compose_stop(*it, w);
    return w;
}

Perm compose_stop(int k, const Perm& w) {
    Perm r = w;
    for (size_t p = 0; p < w.size(); ++p) {
        if (r[p] == k)
            r[p] = k + 1;
        else if (r[p] == k + 1)
            r[p] = k;
    }
    return r;
}

Word top_word(const Word& i, const Perm& w) {
    Word j(i.size());
    for (size_t p = 0; p < i.size(); ++p) j[w[p]] = i[p];
    return j;
}

void KLRElement::add_term(const DiagramBasisElement& b, const Rat& c) {
    if (c == 0) return;
    if (b.word.size() != n_) throw Error("strand count mismatch in add_term");
    Rat& slot = terms_[b];
    slot += c;
    if (slot == 0) terms_.erase(b);
}

KLRElement& KLRElement::operator+=(const KLRElement& o) {
    if (n_ != o.n_) throw Error("strand count mismatch");
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
}

KLRElement& KLRElement::operator-=(const KLRElement& o) {
    if (n_ != o.n_) throw Error("strand count mismatch");
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
}

KLRElement operator*(const Rat& c, const KLRElement& x) {
    KLRElement r(x.n_);
    if (c == 0) return r;
    for (const auto& [b, k] : x.terms_) r.terms_[b] = c * k;
    return r;
}

KLRElement KLRElement::with_dots(const std::vector<int>& expo) const {
    KLRElement r(n_);
    for (const auto& [b, c] : terms_) {
        DiagramBasisElement nb = b;
        for (size_t p = 0; p < n_; ++p) nb.dots[p] += expo[p];
        r.terms_[nb] = c;
    }
    return r;
}

int diagram_degree(const RootDatum& d, const DiagramBasisElement& b) {
    int deg = 0;
    for (int a : b.dots) deg += 2 * a;
    // walk the crossings bottom-up along any reduced expression; the degree
    // only depends on which pairs of labels cross
    Word cur = b.word;
    Perm w = b.perm;
    // bubble-sort w to the identity from the bottom: repeatedly find a
    // left-descent of the remaining permutation... simpler: count crossing
    // pairs directly: strands p<q cross iff w[p] > w[q].
    for (size_t p = 0; p < cur.size(); ++p)
        for (size_t q = p + 1; q < cur.size(); ++q)
            if (w[p] > w[q]) deg -= d.root_pairing(b.word[p], b.word[q]);
    return deg;
}

int KLRElement::degree(const RootDatum& d) const {
    if (terms_.empty()) return 0;
    int deg = diagram_degree(d, terms_.begin()->first);
    for (const auto& [b, c] : terms_) {
        (void)c;
        if (diagram_degree(d, b) != deg) throw Error("degree of inhomogeneous element");
    }
    return deg;
}

bool KLRElement::homogeneous(const RootDatum& d) const {
    if (terms_.empty()) return true;
    int deg = diagram_degree(d, terms_.begin()->first);
    for (const auto& [b, c] : terms_) {
        (void)c;
        if (diagram_degree(d, b) != deg) return false;
    }
    return true;
}

std::string KLRElement::str(const RootDatum& d) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        bool neg = c < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        Rat a = neg ? Rat(-c) : c;
        bool lead = true;
        if (a != 1) {
            os << rat_to_string(a);
            lead = false;
        }
        auto sep = [&]() {
            if (!lead) os << "*";
            lead = false;
        };
        for (size_t p = 0; p < b.dots.size(); ++p)
            for (int t = 0; t < b.dots[p]; ++t) {
                sep();
                os << "y(" << (p + 1) << ")";
            }
        // canonical reduced word of the permutation, top-down order
        {
            // rebuild greedily: least left descent first
            Perm w = b.perm;
            while (perm_length(w) > 0) {
                int m = -1;
                for (size_t k = 0; k + 1 < w.size(); ++k) {
                    // left descent: position of k comes after position of k+1
                    size_t pk = 0, pk1 = 0;
                    for (size_t p = 0; p < w.size(); ++p) {
                        if (w[p] == static_cast<int>(k)) pk = p;
                        if (w[p] == static_cast<int>(k) + 1) pk1 = p;
                    }
                    if (pk > pk1) {
                        m = static_cast<int>(k);
                        break;
                    }
                }
                sep();
                os << "psi(" << (m + 1) << ")";
                w = compose_stop(m, w);
            }
        }
        sep();
        os << "e(";
        for (size_t p = 0; p < b.word.size(); ++p) {
            if (p) os << " ";
            os << d.labels().at(b.word[p]);
        }
        os << ")";
        first = false;
    }
    return os.str();
}

}  // namespace klrw::klr
