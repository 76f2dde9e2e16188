#include "skein/tl_element.hpp"

#include <stdexcept>

namespace skein {

TLElement::TLElement(const TLDiagram& d) : m_(d.left_points()), n_(d.right_points()) {
    combo_.emplace(d, Laurent(1));
}

const Laurent& TLElement::coeff(const TLDiagram& d) const {
    static const Laurent zero;
    auto it = combo_.find(d);
    return it == combo_.end() ? zero : it->second;
}

void TLElement::add_term(const TLDiagram& d, const Laurent& c) {
    if (d.left_points() != m_ || d.right_points() != n_)
        throw std::invalid_argument("diagram boundary mismatch");
    auto it = combo_.find(d);
    if (it == combo_.end()) {
        if (!c.is_zero()) combo_.emplace(d, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) combo_.erase(it);
}

TLElement TLElement::operator-() const {
    TLElement r(m_, n_);
    for (const auto& [d, c] : combo_) r.combo_.emplace(d, -c);
    return r;
}

TLElement& TLElement::operator+=(const TLElement& o) {
    if (o.m_ != m_ || o.n_ != n_) throw std::invalid_argument("element boundary mismatch");
    for (const auto& [d, c] : o.combo_) add_term(d, c);
    return *this;
}

TLElement& TLElement::operator-=(const TLElement& o) {
    if (o.m_ != m_ || o.n_ != n_) throw std::invalid_argument("element boundary mismatch");
    for (const auto& [d, c] : o.combo_) add_term(d, -c);
    return *this;
}

TLElement operator*(const Laurent& c, const TLElement& x) {
    TLElement r(x.m_, x.n_);
    if (c.is_zero()) return r;
    for (const auto& [d, cd] : x.combo_) r.combo_.emplace(d, c * cd);
    return r;
}

TLElement TLElement::compose(const TLElement& o) const {
    if (n_ != o.m_) throw std::invalid_argument("composition boundary mismatch");
    TLElement r(m_, o.n_);
    const Laurent delta = Laurent::loop_value();
    for (const auto& [d1, c1] : combo_)
        for (const auto& [d2, c2] : o.combo_) {
            Composition comp = compose_diagrams(d1, d2);
            Laurent c = c1 * c2;
            for (int i = 0; i < comp.loops; ++i) c *= delta;
            r.add_term(comp.diagram, c);
        }
    return r;
}

TLElement TLElement::tensor(const TLElement& o) const {
    TLElement r(m_ + o.m_, n_ + o.n_);
    for (const auto& [d1, c1] : combo_)
        for (const auto& [d2, c2] : o.combo_) {
            // d1 occupies the top boundary points, d2 the bottom ones.
            const int m1 = d1.left_points(), n1 = d1.right_points();
            const int m2 = d2.left_points(), n2 = d2.right_points();
            auto map1 = [&](int p) { return p < m1 ? p : (m1 + m2) + (p - m1); };
            auto map2 = [&](int p) { return p < m2 ? m1 + p : (m1 + m2 + n1) + (p - m2); };
            std::vector<int> pr(m1 + m2 + n1 + n2);
            for (int p = 0; p < m1 + n1; ++p) pr[map1(p)] = map1(d1.partner(p));
            for (int p = 0; p < m2 + n2; ++p) pr[map2(p)] = map2(d2.partner(p));
            r.add_term(TLDiagram(m1 + m2, n1 + n2, std::move(pr)), c1 * c2);
        }
    return r;
}

TLElement TLElement::bar() const {
    TLElement r(n_, m_);
    for (const auto& [d, c] : combo_) r.add_term(d.transposed(), c.conj());
    return r;
}

TLElement TLElement::sigma() const {
    TLElement r(m_, n_);
    for (const auto& [d, c] : combo_) r.add_term(d.flipped(), c);
    return r;
}

bool TLElement::operator==(const TLElement& o) const {
    return m_ == o.m_ && n_ == o.n_ && combo_ == o.combo_;
}

}  // namespace skein
