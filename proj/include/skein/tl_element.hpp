// Formal Z[A^{+-1}]-linear combinations of Temperley-Lieb diagrams.
// Composition inserts the loop value delta = -A^2 - A^-2 per closed loop.
#pragma once

#include "skein/laurent.hpp"
#include "skein/tl_diagram.hpp"

#include <map>

namespace skein {

class TLElement {
public:
    // The zero element of TL(m, n).
    TLElement(int m, int n) : m_(m), n_(n) {}
    TLElement(const TLDiagram& d);

    static TLElement identity(int k) { return TLElement(TLDiagram::identity(k)); }
    static TLElement generator(int k, int i) { return TLElement(TLDiagram::generator(k, i)); }

    int left_points() const { return m_; }
    int right_points() const { return n_; }
    bool is_zero() const { return combo_.empty(); }
    size_t term_count() const { return combo_.size(); }
    const std::map<TLDiagram, Laurent>& terms() const { return combo_; }
    const Laurent& coeff(const TLDiagram& d) const;
    void add_term(const TLDiagram& d, const Laurent& c);

    TLElement operator-() const;
    TLElement& operator+=(const TLElement& o);
    TLElement& operator-=(const TLElement& o);
    friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
    friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
    friend TLElement operator*(const Laurent& c, const TLElement& x);

    // Composition (gluing right boundary of *this to left of o), bilinear.
    TLElement compose(const TLElement& o) const;
    friend TLElement operator*(const TLElement& a, const TLElement& b) { return a.compose(b); }

    // Vertical stacking, *this above o; boundary counts add.
    TLElement tensor(const TLElement& o) const;

    // Mirror image: reflect diagrams left-right and conjugate A -> A^-1.
    // Anti-multiplicative involution.
    TLElement bar() const;
    // Top-bottom flip; on generators e_i -> e_{k-i}.  Multiplicative
    // involution, coefficients unchanged.
    TLElement sigma() const;

    bool operator==(const TLElement& o) const;

private:
    int m_, n_;
    std::map<TLDiagram, Laurent> combo_;  // invariant: no zero coefficients
};

}  // namespace skein
