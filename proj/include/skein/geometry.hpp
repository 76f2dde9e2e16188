// Exact rational planar geometry: every predicate is a decision, never an
// approximation.  Used to validate scenario curve systems and to compute
// which punctures a glued closed curve encloses.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace skein {

using Rat = mpq_class;

struct Pt {
    Rat x, y;
    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
};

using Polyline = std::vector<Pt>;

// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right, 0 collinear.
int orientation(const Pt& a, const Pt& b, const Pt& c);

// Is p on the closed segment [a, b]?
bool on_segment(const Pt& p, const Pt& a, const Pt& b);

// Do closed segments [a,b] and [c,d] share any point?
bool segments_intersect(const Pt& a, const Pt& b, const Pt& c, const Pt& d);

// Do they share a point other than a common endpoint?  Endpoint-only
// contact (one segment's endpoint equal to one of the other's) is allowed;
// an endpoint lying in the other segment's interior is not.
bool segments_cross_beyond_shared_endpoints(const Pt& a, const Pt& b, const Pt& c, const Pt& d);

bool point_on_polyline(const Pt& p, const Polyline& poly);

enum class RayDir { pos_x, neg_x, pos_y, neg_y };

// Crossing parity of an axis ray from p with a closed polygonal curve
// (first vertex == last vertex, or closure implied).  Pre: p is not on the
// curve.  Odd parity means "enclosed".
bool enclosed_by(const Pt& p, const Polyline& closed_curve, RayDir dir = RayDir::pos_x);

// Parse "p/q", "p", or "-p/q" into an exact rational.
Rat parse_rat(const std::string& text);
std::string rat_str(const Rat& r);

}  // namespace skein
