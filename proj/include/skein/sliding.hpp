// Handle-slide elements and the relations they impose on Temperley-Lieb
// elements: the recursive element w(Id_k) produced by sliding the k-strand
// bundle over the lower handle arc, its top-bottom flip u(Id_k) for the
// upper arc, the four slide maps (positive and negative, lower and upper),
// and one relation per basis diagram via its through-strand factorization.
#pragma once

#include "skein/tl_element.hpp"

#include <string>
#include <vector>

namespace skein {

enum class Arc { lower, upper };
enum class Sign { positive, negative };

struct SlideVariant {
    Arc arc;
    Sign sign;
    bool operator==(const SlideVariant&) const = default;
    auto operator<=>(const SlideVariant&) const = default;
};

inline constexpr SlideVariant kLowerPositive{Arc::lower, Sign::positive};
inline constexpr SlideVariant kUpperPositive{Arc::upper, Sign::positive};
inline constexpr SlideVariant kLowerNegative{Arc::lower, Sign::negative};
inline constexpr SlideVariant kUpperNegative{Arc::upper, Sign::negative};

const std::vector<SlideVariant>& all_variants();
std::string variant_str(SlideVariant v);            // "lower+", "upper-", ...
SlideVariant parse_variant(const std::string& s);   // throws on bad input

// w(Id_k): base case A^2 Id_2 + (1 - A^-4) e_1, then
//   w(Id_k) = A^2 (w(Id_{k-1}) (x) Id_1)
//           + (w(Id_{k-1}) (x) Id_1) . e_{k-1}
//           - A^-4 e_{k-1} . (bar(w(Id_{k-1})) (x) Id_1).
// Memoized.  Pre: k >= 2.
const TLElement& w_id(int k);

// u(Id_k) := sigma(w(Id_k)), the upper-arc slide of the strand bundle.
TLElement u_id(int k);

// The slide image of the identity bundle:
//   lower/positive: A^6 w(Id_k)         upper/positive: A^6 u(Id_k)
//   lower/negative: A^-6 bar(w(Id_k))   upper/negative: A^-6 sigma(bar(w(Id_k)))
TLElement phi(SlideVariant v, int k);

struct SlidingRelation {
    TLDiagram source;
    SlideVariant variant;
    TLElement vector;  // source - slide(source), understood as == 0
};

// Replace the through-strand bundle of d (via its canonical factorization)
// by the slide image; vector is zero when fewer than two strands meet the
// compressing disc.
SlidingRelation slide_relation(const TLDiagram& d, SlideVariant v);

// One relation per basis diagram of TL(k,k) with through count
// >= max(min_through, 2), per requested variant, in deterministic order;
// zero vectors omitted.
std::vector<SlidingRelation> relation_set(int k, const std::vector<SlideVariant>& variants,
                                          int min_through = 2);

// Fixed reference expansions used by the verification suite and tests.
namespace tabulated {
TLElement w2();
TLElement w3();
TLElement w4();
TLElement phi_lower4();        // A^6 w(Id_4), fully expanded
TLElement phi_upper4();        // e_1/e_3 exchange of phi_lower4
TLElement variant_diff4();     // phi_upper4 relation minus phi_lower4 relation
TLElement two_strand_lhs(int which);   // left side of the six t = 2 relations
TLElement two_strand_rhs(int which);   // right side of the six t = 2 relations
TLElement mirror_combo4();     // the displayed combination of the upper slide
                               // relation with A^12 times its mirror
TLElement mirror_combo_reduced4();  // (A^4-1)^2 (e1 + e3 - e1e2e3 - e3e2e1)
TLElement final_relation4();   // (A^4-1)(e2e1 - e2e3 + e1e2 - e3e2)
}  // namespace tabulated

}  // namespace skein
