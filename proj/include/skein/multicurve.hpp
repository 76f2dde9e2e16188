// Isotopy classes of multicurves in a disc with punctures, encoded as
// laminar multisets of enclosed-puncture subsets, and free-module vectors
// over them.
#pragma once

#include "skein/laurent.hpp"

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace skein {

// Components are nonempty sets of puncture indices (0-based); the multiset
// must be laminar (components pairwise nested or disjoint).  The empty
// multicurve is the empty link.
class Multicurve {
public:
    Multicurve() = default;
    explicit Multicurve(std::vector<std::vector<int>> components);

    bool empty() const { return comps_.empty(); }
    size_t component_count() const { return comps_.size(); }
    const std::vector<std::vector<int>>& components() const { return comps_; }

    Multicurve with_component(std::vector<int> comp) const;

    bool operator==(const Multicurve&) const = default;
    std::strong_ordering operator<=>(const Multicurve& o) const { return comps_ <=> o.comps_; }

    // Display convention: singletons bare ("a1"), larger subsets bracketed
    // ("[a2a3]"), the full puncture set as the bracketed outer boundary
    // label, repeated components with an exponent.  Empty prints "1".
    std::string str(int puncture_count) const;

private:
    std::vector<std::vector<int>> comps_;  // each sorted; multiset sorted
};

bool is_laminar(const std::vector<std::vector<int>>& components);

// A free-module vector over multicurves with Laurent coefficients.
class SkeinVector {
public:
    SkeinVector() = default;
    explicit SkeinVector(const Multicurve& m) { combo_.emplace(m, Laurent(1)); }

    bool is_zero() const { return combo_.empty(); }
    size_t term_count() const { return combo_.size(); }
    const std::map<Multicurve, Laurent>& terms() const { return combo_; }
    const Laurent& coeff(const Multicurve& m) const;
    void add_term(const Multicurve& m, const Laurent& c);

    SkeinVector operator-() const;
    SkeinVector& operator+=(const SkeinVector& o);
    SkeinVector& operator-=(const SkeinVector& o);
    friend SkeinVector operator+(SkeinVector a, const SkeinVector& b) { return a += b; }
    friend SkeinVector operator-(SkeinVector a, const SkeinVector& b) { return a -= b; }
    friend SkeinVector operator*(const Laurent& c, const SkeinVector& x);

    bool operator==(const SkeinVector&) const = default;

    std::string str(int puncture_count) const;

private:
    std::map<Multicurve, Laurent> combo_;
};

}  // namespace skein
