#include "skein/geometry.hpp"

#include <stdexcept>

namespace skein {

int orientation(const Pt& a, const Pt& b, const Pt& c) {
    Rat cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sgn(cross);
}

bool on_segment(const Pt& p, const Pt& a, const Pt& b) {
    if (orientation(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(c, a, b)) return true;
    if (o2 == 0 && on_segment(d, a, b)) return true;
    if (o3 == 0 && on_segment(a, c, d)) return true;
    if (o4 == 0 && on_segment(b, c, d)) return true;
    return false;
}

bool segments_cross_beyond_shared_endpoints(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;  // proper crossing
    if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
        // Collinear: any overlap longer than a single point is a violation;
        // a single shared point is necessarily an endpoint of both.
        bool vertical = a.x == b.x;
        auto key = [&](const Pt& p) { return vertical ? p.y : p.x; };
        Rat lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
        Rat lo2 = std::min(key(c), key(d)), hi2 = std::max(key(c), key(d));
        Rat lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
        return lo < hi;
    }
    // An endpoint of one segment in the other's interior is a violation.
    auto interior_touch = [&](const Pt& e, const Pt& s1, const Pt& s2) {
        return on_segment(e, s1, s2) && !(e == s1) && !(e == s2);
    };
    if (interior_touch(c, a, b)) return true;
    if (interior_touch(d, a, b)) return true;
    if (interior_touch(a, c, d)) return true;
    if (interior_touch(b, c, d)) return true;
    return false;
}

bool point_on_polyline(const Pt& p, const Polyline& poly) {
    for (size_t i = 0; i + 1 < poly.size(); ++i)
        if (on_segment(p, poly[i], poly[i + 1])) return true;
    return false;
}

bool enclosed_by(const Pt& p, const Polyline& curve, RayDir dir) {
    if (curve.size() < 2) return false;
    bool odd = false;
    size_t n = curve.size();
    bool explicitly_closed = curve.front() == curve.back();
    size_t segments = explicitly_closed ? n - 1 : n;
    for (size_t i = 0; i < segments; ++i) {
        const Pt& a = curve[i];
        const Pt& b = curve[(i + 1) % n];
        if (a == b) continue;
        // Half-open rule: a segment is counted when its endpoints straddle
        // the ray line, so vertices on the line are counted exactly once.
        if (dir == RayDir::pos_x || dir == RayDir::neg_x) {
            if ((a.y > p.y) == (b.y > p.y)) continue;
            Rat xi = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (dir == RayDir::pos_x ? xi > p.x : xi < p.x) odd = !odd;
        } else {
            if ((a.x > p.x) == (b.x > p.x)) continue;
            Rat yi = a.y + (p.x - a.x) * (b.y - a.y) / (b.x - a.x);
            if (dir == RayDir::pos_y ? yi > p.y : yi < p.y) odd = !odd;
        }
    }
    return odd;
}

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    for (char c : text)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw std::invalid_argument("bad rational literal '" + text + "'");
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace skein
