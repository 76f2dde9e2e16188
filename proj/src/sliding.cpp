#include "skein/sliding.hpp"

#include "skein/tl_expr.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace skein {

const std::vector<SlideVariant>& all_variants() {
    static const std::vector<SlideVariant> v{kLowerPositive, kUpperPositive, kLowerNegative,
                                             kUpperNegative};
    return v;
}

std::string variant_str(SlideVariant v) {
    std::string s = v.arc == Arc::lower ? "lower" : "upper";
    s += v.sign == Sign::positive ? "+" : "-";
    return s;
}

SlideVariant parse_variant(const std::string& s) {
    for (SlideVariant v : all_variants())
        if (variant_str(v) == s) return v;
    throw std::invalid_argument("unknown slide variant '" + s +
                                "' (expected lower+, lower-, upper+ or upper-)");
}

const TLElement& w_id(int k) {
    if (k < 2) throw std::invalid_argument("w(Id_k) requires k >= 2");
    static std::map<int, TLElement> memo;
    static std::mutex memo_mutex;
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;

    if (memo.empty()) {
        TLElement base = Laurent::power_of_A(2) * TLElement::identity(2) +
                         (Laurent(1) - Laurent::power_of_A(-4)) * TLElement::generator(2, 1);
        memo.emplace(2, std::move(base));
    }
    for (int j = static_cast<int>(memo.rbegin()->first) + 1; j <= k; ++j) {
        const TLElement& prev = memo.at(j - 1);
        TLElement ext = prev.tensor(TLElement::identity(1));
        TLElement ext_bar = prev.bar().tensor(TLElement::identity(1));
        TLElement e = TLElement::generator(j, j - 1);
        TLElement next = Laurent::power_of_A(2) * ext + ext.compose(e) -
                         Laurent::power_of_A(-4) * e.compose(ext_bar);
        memo.emplace(j, std::move(next));
    }
    return memo.at(k);
}

TLElement u_id(int k) { return w_id(k).sigma(); }

TLElement phi(SlideVariant v, int k) {
    if (k < 2) throw std::invalid_argument("slide image requires k >= 2");
    if (v.sign == Sign::positive) {
        TLElement core = v.arc == Arc::lower ? w_id(k) : u_id(k);
        return Laurent::power_of_A(6) * core;
    }
    TLElement core = w_id(k).bar();
    if (v.arc == Arc::upper) core = core.sigma();
    return Laurent::power_of_A(-6) * core;
}

SlidingRelation slide_relation(const TLDiagram& d, SlideVariant v) {
    if (d.left_points() != d.right_points())
        throw std::invalid_argument("slide relations require square diagrams");
    ThroughFactorization f = through_factor(d);
    if (f.through < 2) return SlidingRelation{d, v, TLElement(d.left_points(), d.right_points())};
    TLElement slid =
        TLElement(f.front).compose(phi(v, f.through)).compose(TLElement(f.back));
    return SlidingRelation{d, v, TLElement(d) - slid};
}

std::vector<SlidingRelation> relation_set(int k, const std::vector<SlideVariant>& variants,
                                          int min_through) {
    const int cutoff = std::max(min_through, 2);
    std::vector<SlidingRelation> out;
    for (const TLDiagram& d : TLDiagram::enumerate(k, k)) {
        if (d.through_count() < cutoff) continue;
        for (SlideVariant v : variants) {
            SlidingRelation r = slide_relation(d, v);
            if (!r.vector.is_zero()) out.push_back(std::move(r));
        }
    }
    return out;
}

namespace tabulated {

namespace {
TLElement parsed(int k, const std::string& text) { return parse_element(text, k); }
}  // namespace

TLElement w2() { return parsed(2, "A^2*Id2 + (1 - A^-4)*e1"); }

TLElement w3() {
    return parsed(3,
                  "A^4*Id3 + (A^2 - A^-6)*e2 + (A^2 - A^-2)*e1 + (1 - A^-4)*(e1*e2 + e2*e1)");
}

TLElement w4() {
    return parsed(4,
                  "A^6*Id4 + (A^4 - 1)*e1 + (A^4 - A^-4)*e2 + (A^2 - A^-2)*(e1*e2 + e2*e1)"
                  " + (A^4 - A^-8)*e3 + (A^2 - A^-6)*(e1*e3 + e2*e3 + e3*e2)"
                  " + (1 - A^-4)*(e1*e2*e3 + e3*e2*e1 + e1*e3*e2 + e2*e3*e1)");
}

TLElement phi_lower4() {
    return parsed(4,
                  "A^12*Id4 + (A^10 - A^6)*e1 + (A^10 - A^-2)*e3 + (A^10 - A^2)*e2"
                  " + (A^8 - A^4)*(e2*e1 + e1*e2) + (A^8 - 1)*(e2*e3 + e3*e2 + e1*e3)"
                  " + (A^6 - A^2)*(e3*e2*e1 + e1*e3*e2 + e2*e3*e1 + e1*e2*e3)");
}

TLElement phi_upper4() {
    return parsed(4,
                  "A^12*Id4 + (A^10 - A^-2)*e1 + (A^10 - A^6)*e3 + (A^10 - A^2)*e2"
                  " + (A^8 - A^4)*(e2*e3 + e3*e2) + (A^8 - 1)*(e2*e1 + e1*e2 + e1*e3)"
                  " + (A^6 - A^2)*(e1*e2*e3 + e1*e3*e2 + e2*e3*e1 + e3*e2*e1)");
}

TLElement variant_diff4() {
    return parsed(4,
                  "A^-2*(A^8 - 1)*(e1 - e3) + (A^4 - 1)*(e2*e1 + e1*e2 - e2*e3 - e3*e2)");
}

TLElement two_strand_lhs(int which) {
    static const char* lhs[6] = {"e1", "e3", "e1*e2", "e2*e1", "e1*e2*e3", "e3*e2*e1"};
    if (which < 0 || which >= 6) throw std::invalid_argument("relation index out of range");
    return parsed(4, std::string("(A^8 - 1)*") + lhs[which]);
}

TLElement two_strand_rhs(int which) {
    static const char* rhs[6] = {"e1*e3",    "e3*e1",    "e3*e1*e2",
                                 "e2*e1*e3", "e1*e3",    "e3*e1"};
    if (which < 0 || which >= 6) throw std::invalid_argument("relation index out of range");
    return parsed(4, std::string("(A^2 - A^6)*") + rhs[which]);
}

TLElement mirror_combo4() {
    return parsed(4,
                  "A^2*(A^4 - 1)*(A^4 - 1)*(e3 - e3*e2*e1 - e1*e2*e3 - e3*e1*e2 - e2*e1*e3)"
                  " + A^-2*(A^12 - 1)*(1 - A^4)*e1"
                  " + (A^8 - 1)*(1 - A^4)*(e1*e3 + e2*e1 + e1*e2)");
}

TLElement mirror_combo_reduced4() {
    return parsed(4, "(A^4 - 1)*(A^4 - 1)*(e1 + e3 - e1*e2*e3 - e3*e2*e1)");
}

TLElement final_relation4() {
    return parsed(4, "(A^4 - 1)*(e2*e1 - e2*e3 + e1*e2 - e3*e2)");
}

}  // namespace tabulated

}  // namespace skein
