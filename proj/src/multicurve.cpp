#include "skein/multicurve.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skein {

bool is_laminar(const std::vector<std::vector<int>>& components) {
    auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    auto disjoint = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> tmp;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(tmp));
        return tmp.empty();
    };
    for (size_t i = 0; i < components.size(); ++i)
        for (size_t j = i + 1; j < components.size(); ++j) {
            const auto& a = components[i];
            const auto& b = components[j];
            if (!contains(a, b) && !contains(b, a) && !disjoint(a, b)) return false;
        }
    return true;
}

Multicurve::Multicurve(std::vector<std::vector<int>> components) : comps_(std::move(components)) {
    for (auto& c : comps_) {
        if (c.empty()) throw std::invalid_argument("multicurve component cannot be empty");
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
    }
    std::sort(comps_.begin(), comps_.end());
    if (!is_laminar(comps_)) throw std::invalid_argument("multicurve components are not laminar");
}

Multicurve Multicurve::with_component(std::vector<int> comp) const {
    std::vector<std::vector<int>> cs = comps_;
    cs.push_back(std::move(comp));
    return Multicurve(std::move(cs));
}

std::string Multicurve::str(int puncture_count) const {
    if (comps_.empty()) return "1";
    auto component_str = [&](const std::vector<int>& c) -> std::string {
        if (static_cast<int>(c.size()) == puncture_count)
            return "[a" + std::to_string(puncture_count + 1) + "]";
        if (c.size() == 1) return "a" + std::to_string(c[0] + 1);
        std::string s = "[";
        for (int i : c) s += "a" + std::to_string(i + 1);
        return s + "]";
    };
    // Display order: smaller components first, then lexicographic.
    std::vector<std::vector<int>> ordered = comps_;
    std::sort(ordered.begin(), ordered.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < ordered.size();) {
        size_t j = i;
        while (j < ordered.size() && ordered[j] == ordered[i]) ++j;
        if (!first) os << " ";
        first = false;
        os << component_str(ordered[i]);
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

const Laurent& SkeinVector::coeff(const Multicurve& m) const {
    static const Laurent zero;
    auto it = combo_.find(m);
    return it == combo_.end() ? zero : it->second;
}

void SkeinVector::add_term(const Multicurve& m, const Laurent& c) {
    auto it = combo_.find(m);
    if (it == combo_.end()) {
        if (!c.is_zero()) combo_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) combo_.erase(it);
}

SkeinVector SkeinVector::operator-() const {
    SkeinVector r;
    for (const auto& [m, c] : combo_) r.combo_.emplace(m, -c);
    return r;
}

SkeinVector& SkeinVector::operator+=(const SkeinVector& o) {
    for (const auto& [m, c] : o.combo_) add_term(m, c);
    return *this;
}

SkeinVector& SkeinVector::operator-=(const SkeinVector& o) {
    for (const auto& [m, c] : o.combo_) add_term(m, -c);
    return *this;
}

SkeinVector operator*(const Laurent& c, const SkeinVector& x) {
    SkeinVector r;
    if (c.is_zero()) return r;
    for (const auto& [m, cm] : x.combo_) r.combo_.emplace(m, c * cm);
    return r;
}

std::string SkeinVector::str(int puncture_count) const {
    if (combo_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : combo_) {
        Laurent body = c;
        std::string sign = "+";
        if (c.is_monomial() && c.terms().begin()->second < 0) {
            sign = "-";
            body = -body;
        }
        if (first) {
            if (sign == "-") os << "-";
        } else {
            os << " " << sign << " ";
        }
        first = false;
        if (body.is_one())
            os << m.str(puncture_count);
        else if (body.is_monomial())
            os << body << "*" << m.str(puncture_count);
        else
            os << "(" << body << ")*" << m.str(puncture_count);
    }
    return os.str();
}

}  // namespace skein
