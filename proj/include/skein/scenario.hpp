// Exact-rational planar scenarios: a punctured disc, a Temperley-Lieb box
// with 2k marked boundary points, and a fixed curve system kappa outside
// the box.  Gluing a box diagram to kappa along the marked points yields a
// multicurve; extending linearly gives the module homomorphism rho_*.
#pragma once

#include "skein/geometry.hpp"
#include "skein/multicurve.hpp"
#include "skein/tl_element.hpp"

#include <map>
#include <string>
#include <vector>

namespace skein {

struct Rect {
    Rat x0, y0, x1, y1;  // x0 < x1, y0 < y1; y grows upward
};

struct ScenarioArc {
    int from, to;        // marked point indices
    Polyline interior;   // vertices strictly between the two marked points
};

// Marked points are indexed 0..k-1 down the left box edge (top to bottom)
// and k..2k-1 down the right edge, equally spaced.
class Scenario {
public:
    static Scenario load_string(const std::string& json_text, const std::string& display_name);
    static Scenario load_file(const std::string& path);

    const std::string& name() const { return name_; }
    const std::string& notes() const { return notes_; }
    int k() const { return k_; }
    int puncture_count() const { return static_cast<int>(punctures_.size()); }
    const std::vector<Pt>& punctures() const { return punctures_; }
    const Rect& outer() const { return outer_; }
    const Rect& box() const { return box_; }

    Pt marked_point(int p) const;
    // Marked point index for a name like "L3" or "R1".
    int point_index(const std::string& name) const;
    std::string point_name(int p) const;

    int kappa_partner(int p) const { return kappa_partner_[p]; }
    // Full polyline of the kappa arc leaving marked point p (oriented
    // away from p).
    Polyline kappa_polyline_from(int p) const;

private:
    Scenario() = default;
    void validate() const;

    std::string name_, notes_;
    int k_ = 0;
    Rect outer_{}, box_{};
    std::vector<Pt> punctures_;          // index i is label a_{i+1}
    std::vector<ScenarioArc> arcs_;
    std::vector<int> kappa_partner_;     // induced perfect matching
    std::vector<int> arc_of_point_;
};

// Deterministic crossingless drawing of a box diagram: same-side pairs as
// nested U-shapes, through pairs as monotone three-segment polylines.
// Returned polylines are keyed by their lower point index and oriented
// from the smaller to the larger marked point index.
std::map<int, Polyline> embed_box_diagram(const TLDiagram& d, const Rect& box);

struct GluedCurves {
    std::vector<Polyline> closed_curves;         // one per component, closed
    std::vector<std::vector<int>> enclosed;      // puncture indices per curve
    std::vector<int> midline_crossings;          // per curve, as drawn
    int trivial_components = 0;                  // curves enclosing nothing
    Multicurve multicurve;                       // the nonempty sets
    Laurent coefficient;                         // loop value ^ trivial count
};

// Glue the box diagram to the scenario's curve system along the marked
// points and classify every resulting closed curve by the punctures it
// encloses.  Pre: d is a (k, k) diagram matching the scenario.
GluedCurves glue(const Scenario& s, const TLDiagram& d);

// Linear extension of glue to elements.
SkeinVector rho_star(const Scenario& s, const TLElement& x);

// Shipped scenarios, embedded in the library.
struct ShippedScenario {
    std::string name;
    std::string provenance;
    std::string json_text;
};
const std::vector<ShippedScenario>& shipped_scenarios();
// Resolve a short name or a filesystem path.
Scenario find_scenario(const std::string& name_or_path);
// When set, short names resolve to <dir>/<name>.json before the embedded
// copies; empty string restores the default.
void set_scenario_directory(const std::string& dir);

}  // namespace skein
