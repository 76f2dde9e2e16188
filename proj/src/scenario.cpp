#include "skein/scenario.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace skein {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& scenario, const std::string& msg) {
    throw std::invalid_argument("scenario '" + scenario + "': " + msg);
}

Rat coord(const json& v, const std::string& scenario, const std::string& what) {
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return parse_rat(v.get<std::string>());
    bad(scenario, what + " must be an integer or a rational string \"p/q\"");
}

Rect rect_from(const json& j, const std::string& scenario, const std::string& what) {
    for (const char* f : {"x0", "y0", "x1", "y1"})
        if (!j.contains(f)) bad(scenario, what + " is missing field '" + f + "'");
    Rect r{coord(j["x0"], scenario, what), coord(j["y0"], scenario, what),
           coord(j["x1"], scenario, what), coord(j["y1"], scenario, what)};
    if (!(r.x0 < r.x1 && r.y0 < r.y1)) bad(scenario, what + " is degenerate");
    return r;
}

bool strictly_inside(const Pt& p, const Rect& r) {
    return r.x0 < p.x && p.x < r.x1 && r.y0 < p.y && p.y < r.y1;
}

bool inside_closed(const Pt& p, const Rect& r) {
    return r.x0 <= p.x && p.x <= r.x1 && r.y0 <= p.y && p.y <= r.y1;
}

std::vector<std::pair<Pt, Pt>> rect_edges(const Rect& r) {
    Pt a{r.x0, r.y0}, b{r.x1, r.y0}, c{r.x1, r.y1}, d{r.x0, r.y1};
    return {{a, b}, {b, c}, {c, d}, {d, a}};
}

std::string pt_str(const Pt& p) { return "(" + rat_str(p.x) + ", " + rat_str(p.y) + ")"; }

// A point where the two segments meet, for diagnostics.
Pt intersection_witness(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    Rat den = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
    if (den != 0) {
        Rat t = ((c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x)) / den;
        return Pt{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    }
    for (const Pt& p : {c, d, a, b})
        if (on_segment(p, a, b) && on_segment(p, c, d)) return p;
    return a;
}

}  // namespace

Pt Scenario::marked_point(int p) const {
    if (p < 0 || p >= 2 * k_) throw std::out_of_range("marked point index");
    Rat h = (box_.y1 - box_.y0) / (k_ + 1);
    int row = p < k_ ? p : p - k_;
    Rat y = box_.y1 - Rat(row + 1) * h;
    return Pt{p < k_ ? box_.x0 : box_.x1, y};
}

int Scenario::point_index(const std::string& name) const {
    if (name.size() < 2 || (name[0] != 'L' && name[0] != 'R'))
        bad(name_, "bad marked point name '" + name + "'");
    int idx = 0;
    for (size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i])))
            bad(name_, "bad marked point name '" + name + "'");
        idx = idx * 10 + (name[i] - '0');
    }
    if (idx < 1 || idx > k_) bad(name_, "marked point '" + name + "' out of range");
    return name[0] == 'L' ? idx - 1 : k_ + idx - 1;
}

std::string Scenario::point_name(int p) const {
    return p < k_ ? "L" + std::to_string(p + 1) : "R" + std::to_string(p - k_ + 1);
}

Polyline Scenario::kappa_polyline_from(int p) const {
    const ScenarioArc& arc = arcs_[arc_of_point_[p]];
    Polyline full;
    full.push_back(marked_point(arc.from));
    full.insert(full.end(), arc.interior.begin(), arc.interior.end());
    full.push_back(marked_point(arc.to));
    if (arc.from != p) std::reverse(full.begin(), full.end());
    return full;
}

Scenario Scenario::load_string(const std::string& json_text, const std::string& display_name) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        bad(display_name, std::string("invalid JSON: ") + e.what());
    }
    Scenario s;
    s.name_ = j.value("name", display_name);
    s.notes_ = j.value("notes", "");

    if (!j.contains("outer") || !j.contains("box") || !j.contains("punctures") ||
        !j.contains("arcs"))
        bad(s.name_, "required fields: punctures, outer, box, arcs");
    s.outer_ = rect_from(j["outer"], s.name_, "outer");
    s.box_ = rect_from(j["box"], s.name_, "box");
    if (!j["box"].contains("k") || !j["box"]["k"].is_number_integer())
        bad(s.name_, "box.k must be an integer");
    s.k_ = j["box"]["k"].get<int>();
    if (s.k_ < 1) bad(s.name_, "box.k must be positive");

    int index = 0;
    for (const auto& pj : j["punctures"]) {
        if (!pj.contains("label") || !pj.contains("x") || !pj.contains("y"))
            bad(s.name_, "puncture entries need label, x, y");
        std::string label = pj["label"].get<std::string>();
        std::string expected = "a" + std::to_string(index + 1);
        if (label != expected)
            bad(s.name_, "puncture labels must be a1, a2, ... in order; got '" + label + "'");
        s.punctures_.push_back(Pt{coord(pj["x"], s.name_, "puncture"),
                                  coord(pj["y"], s.name_, "puncture")});
        ++index;
    }
    if (s.punctures_.empty()) bad(s.name_, "at least one puncture is required");

    s.kappa_partner_.assign(2 * s.k_, -1);
    s.arc_of_point_.assign(2 * s.k_, -1);
    for (const auto& aj : j["arcs"]) {
        if (!aj.contains("from") || !aj.contains("to"))
            bad(s.name_, "arc entries need from and to");
        ScenarioArc arc;
        arc.from = s.point_index(aj["from"].get<std::string>());
        arc.to = s.point_index(aj["to"].get<std::string>());
        if (aj.contains("points"))
            for (const auto& vj : aj["points"]) {
                if (!vj.is_array() || vj.size() != 2)
                    bad(s.name_, "arc points must be [x, y] pairs");
                arc.interior.push_back(
                    Pt{coord(vj[0], s.name_, "arc point"), coord(vj[1], s.name_, "arc point")});
            }
        if (arc.from == arc.to) bad(s.name_, "arc endpoints must be distinct");
        int id = static_cast<int>(s.arcs_.size());
        for (int e : {arc.from, arc.to}) {
            if (s.kappa_partner_[e] != -1)
                bad(s.name_, "marked point " + s.point_name(e) + " used twice");
            s.arc_of_point_[e] = id;
        }
        s.kappa_partner_[arc.from] = arc.to;
        s.kappa_partner_[arc.to] = arc.from;
        s.arcs_.push_back(std::move(arc));
    }
    for (int p = 0; p < 2 * s.k_; ++p)
        if (s.kappa_partner_[p] == -1)
            bad(s.name_, "marked point " + s.point_name(p) + " is not matched by any arc");

    s.validate();
    return s;
}

Scenario Scenario::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_string(buf.str(), path);
}

namespace {

// True when two intersecting segments meet in more than a single point.
bool contact_beyond_point(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    if (orientation(a, b, c) == 0 && orientation(a, b, d) == 0 && orientation(c, d, a) == 0 &&
        orientation(c, d, b) == 0) {
        bool vertical = a.x == b.x && c.x == d.x;
        auto key = [&](const Pt& q) { return vertical ? q.y : q.x; };
        Rat lo = std::max(std::min(key(a), key(b)), std::min(key(c), key(d)));
        Rat hi = std::min(std::max(key(a), key(b)), std::max(key(c), key(d)));
        return lo < hi;
    }
    return false;  // non-collinear segments meet in at most one point
}

}  // namespace

void Scenario::validate() const {
    // Box inside the outer rectangle.
    for (const Pt& c : {Pt{box_.x0, box_.y0}, Pt{box_.x1, box_.y1}})
        if (!strictly_inside(c, outer_)) bad(name_, "box must lie strictly inside outer");

    // Punctures: inside outer, outside the closed box, pairwise distinct.
    for (size_t i = 0; i < punctures_.size(); ++i) {
        const Pt& p = punctures_[i];
        if (!strictly_inside(p, outer_))
            bad(name_, "puncture a" + std::to_string(i + 1) + " is not strictly inside outer");
        if (inside_closed(p, box_))
            bad(name_, "puncture a" + std::to_string(i + 1) + " meets the box");
        for (size_t j = i + 1; j < punctures_.size(); ++j)
            if (p == punctures_[j])
                bad(name_, "punctures a" + std::to_string(i + 1) + " and a" +
                               std::to_string(j + 1) + " coincide");
    }

    // Assemble full polylines once.
    std::vector<Polyline> fulls;
    for (const ScenarioArc& arc : arcs_) {
        Polyline full;
        full.push_back(marked_point(arc.from));
        full.insert(full.end(), arc.interior.begin(), arc.interior.end());
        full.push_back(marked_point(arc.to));
        fulls.push_back(std::move(full));
    }

    auto edges = rect_edges(box_);
    for (size_t ai = 0; ai < fulls.size(); ++ai) {
        const Polyline& full = fulls[ai];
        const std::string where = "arc " + point_name(arcs_[ai].from) + "-" +
                                  point_name(arcs_[ai].to);
        for (size_t v = 0; v + 1 < full.size(); ++v)
            if (full[v] == full[v + 1]) bad(name_, where + " has a zero-length segment");
        // Vertices: strictly inside outer; interior vertices clear of the box.
        for (size_t v = 0; v < full.size(); ++v) {
            if (!strictly_inside(full[v], outer_))
                bad(name_, where + " leaves the outer rectangle at " + pt_str(full[v]));
            if (v > 0 && v + 1 < full.size() && inside_closed(full[v], box_))
                bad(name_, where + " touches the box at " + pt_str(full[v]));
        }
        const Pt from_pt = full.front(), to_pt = full.back();
        for (size_t sv = 0; sv + 1 < full.size(); ++sv) {
            const Pt& sa = full[sv];
            const Pt& sb = full[sv + 1];
            // No segment may pass through the open box.
            Pt mid{(sa.x + sb.x) / 2, (sa.y + sb.y) / 2};
            if (strictly_inside(mid, box_)) bad(name_, where + " passes through the box");
            for (const auto& [ea, eb] : edges) {
                if (!segments_intersect(sa, sb, ea, eb)) continue;
                bool ok = false;
                for (const Pt& mp : {from_pt, to_pt})
                    if ((sa == mp || sb == mp) && on_segment(mp, ea, eb) &&
                        !contact_beyond_point(sa, sb, ea, eb))
                        ok = true;
                if (!ok)
                    bad(name_, where + " meets the box boundary away from its endpoints near " +
                                   pt_str(intersection_witness(sa, sb, ea, eb)));
            }
            // Punctures must not lie on the arc.
            for (size_t pi = 0; pi < punctures_.size(); ++pi)
                if (on_segment(punctures_[pi], sa, sb))
                    bad(name_, where + " passes through puncture a" + std::to_string(pi + 1));
        }
        // Simplicity: non-adjacent segments disjoint, adjacent ones meeting
        // only at the shared vertex.
        for (size_t i = 0; i + 1 < full.size(); ++i)
            for (size_t j = i + 1; j + 1 < full.size(); ++j) {
                bool adjacent = (j == i + 1);
                if (adjacent) {
                    if (contact_beyond_point(full[i], full[i + 1], full[j], full[j + 1]))
                        bad(name_, where + " doubles back on itself at " + pt_str(full[i + 1]));
                } else if (segments_intersect(full[i], full[i + 1], full[j], full[j + 1])) {
                    bad(name_, where + " crosses itself near " +
                                   pt_str(intersection_witness(full[i], full[i + 1], full[j],
                                                               full[j + 1])));
                }
            }
    }
    // Arcs pairwise disjoint.
    for (size_t a1 = 0; a1 < fulls.size(); ++a1)
        for (size_t a2 = a1 + 1; a2 < fulls.size(); ++a2)
            for (size_t i = 0; i + 1 < fulls[a1].size(); ++i)
                for (size_t j = 0; j + 1 < fulls[a2].size(); ++j)
                    if (segments_intersect(fulls[a1][i], fulls[a1][i + 1], fulls[a2][j],
                                           fulls[a2][j + 1]))
                        bad(name_,
                            "arcs " + point_name(arcs_[a1].from) + "-" +
                                point_name(arcs_[a1].to) + " and " + point_name(arcs_[a2].from) +
                                "-" + point_name(arcs_[a2].to) + " cross near " +
                                pt_str(intersection_witness(fulls[a1][i], fulls[a1][i + 1],
                                                            fulls[a2][j], fulls[a2][j + 1])));
}

std::map<int, Polyline> embed_box_diagram(const TLDiagram& d, const Rect& box) {
    const int k = d.left_points();
    if (d.right_points() != k) throw std::invalid_argument("box diagrams must be square");
    const Rat W = box.x1 - box.x0;
    const Rat H = box.y1 - box.y0;
    Rat h = H / (k + 1);
    auto left_y = [&](int i) -> Rat { return box.y1 - Rat(i + 1) * h; };  // i in [0,k)
    auto right_y = left_y;

    std::vector<std::pair<int, int>> left_caps, right_caps;
    std::vector<std::pair<int, int>> throughs;  // (left index, right index)
    for (int p = 0; p < 2 * k; ++p) {
        int q = d.partner(p);
        if (q < p) continue;
        if (p < k && q < k)
            left_caps.emplace_back(p, q);
        else if (p >= k && q >= k)
            right_caps.emplace_back(p - k, q - k);
        else
            throughs.emplace_back(p, q - k);
    }
    std::sort(throughs.begin(), throughs.end());

    // Depth = 1 + max depth of caps nested strictly inside, so outer caps
    // reach further into the box and enclose their nested ones.
    auto depths = [&](const std::vector<std::pair<int, int>>& caps) {
        std::vector<int> dep(caps.size(), 1);
        // caps sorted by span width guarantees inner caps are computed first
        std::vector<size_t> order(caps.size());
        for (size_t i = 0; i < caps.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return caps[a].second - caps[a].first < caps[b].second - caps[b].first;
        });
        for (size_t oi : order)
            for (size_t ii = 0; ii < caps.size(); ++ii)
                if (caps[oi].first < caps[ii].first && caps[ii].second < caps[oi].second)
                    dep[oi] = std::max(dep[oi], dep[ii] + 1);
        return dep;
    };

    std::map<int, Polyline> out;
    int max_depth = k / 2 + 1;
    Rat cap_unit = W / (3 * max_depth);

    auto add_caps = [&](const std::vector<std::pair<int, int>>& caps, bool left_side) {
        std::vector<int> dep = depths(caps);
        for (size_t i = 0; i < caps.size(); ++i) {
            auto [a, b] = caps[i];
            Rat off = Rat(dep[i]) * cap_unit;
            Rat xa = left_side ? box.x0 : box.x1;
            Rat xb = left_side ? Rat(box.x0 + off) : Rat(box.x1 - off);
            Rat ya = left_side ? left_y(a) : right_y(a);
            Rat yb = left_side ? left_y(b) : right_y(b);
            Polyline pl{Pt{xa, ya}, Pt{xb, ya}, Pt{xb, yb}, Pt{xa, yb}};
            out.emplace(left_side ? a : k + a, std::move(pl));
        }
    };
    add_caps(left_caps, true);
    add_caps(right_caps, false);

    Rat xm1 = box.x0 + W / 3, xm2 = box.x1 - W / 3;
    for (auto [li, ri] : throughs) {
        Polyline pl{Pt{box.x0, left_y(li)}, Pt{xm1, left_y(li)}, Pt{xm2, right_y(ri)},
                    Pt{box.x1, right_y(ri)}};
        out.emplace(li, std::move(pl));
    }
    return out;
}

GluedCurves glue(const Scenario& s, const TLDiagram& d) {
    const int k = s.k();
    if (d.left_points() != k || d.right_points() != k)
        throw std::invalid_argument("diagram strand count does not match scenario (k = " +
                                    std::to_string(k) + ")");
    // Diagram point indices coincide with scenario marked point indices.
    std::map<int, Polyline> box_polys = embed_box_diagram(d, s.box());
    auto box_poly_from = [&](int p) {
        int q = d.partner(p);
        int lo = std::min(p, q);
        Polyline pl = box_polys.at(lo);
        if (p != lo) std::reverse(pl.begin(), pl.end());
        return pl;
    };

    GluedCurves out;
    const Laurent delta = Laurent::loop_value();
    out.coefficient = Laurent(1);
    std::vector<bool> seen(2 * k, false);
    std::vector<std::vector<int>> comps;
    Rat midline_x = (s.box().x0 + s.box().x1) / 2;

    for (int start = 0; start < 2 * k; ++start) {
        if (seen[start]) continue;
        Polyline closed;
        int cur = start;
        bool via_box = true;  // leave through the box first
        while (true) {
            seen[cur] = true;
            Polyline piece = via_box ? box_poly_from(cur) : s.kappa_polyline_from(cur);
            int next = via_box ? d.partner(cur) : s.kappa_partner(cur);
            seen[next] = true;
            if (closed.empty())
                closed = piece;
            else
                closed.insert(closed.end(), piece.begin() + 1, piece.end());
            cur = next;
            via_box = !via_box;
            if (cur == start && via_box) break;
        }
        // closed now ends where it started.
        std::vector<int> enc;
        for (int pi = 0; pi < s.puncture_count(); ++pi)
            if (enclosed_by(s.punctures()[pi], closed, RayDir::pos_x)) enc.push_back(pi);
        int crossings = 0;
        for (size_t i = 0; i + 1 < closed.size(); ++i) {
            const Pt& a = closed[i];
            const Pt& b = closed[i + 1];
            if ((a.x > midline_x) != (b.x > midline_x)) ++crossings;
        }
        out.midline_crossings.push_back(crossings);
        out.closed_curves.push_back(std::move(closed));
        out.enclosed.push_back(enc);
        if (enc.empty()) {
            ++out.trivial_components;
            out.coefficient *= delta;
        } else {
            comps.push_back(std::move(enc));
        }
    }
    out.multicurve = Multicurve(std::move(comps));
    return out;
}

SkeinVector rho_star(const Scenario& s, const TLElement& x) {
    SkeinVector out;
    for (const auto& [d, c] : x.terms()) {
        GluedCurves g = glue(s, d);
        out.add_term(g.multicurve, c * g.coefficient);
    }
    return out;
}

namespace {
std::string& scenario_dir() {
    static std::string dir;
    return dir;
}
}  // namespace

void set_scenario_directory(const std::string& dir) { scenario_dir() = dir; }

Scenario find_scenario(const std::string& name_or_path) {
    for (const ShippedScenario& sh : shipped_scenarios())
        if (sh.name == name_or_path) {
            if (!scenario_dir().empty())
                return Scenario::load_file(scenario_dir() + "/" + sh.name + ".json");
            return Scenario::load_string(sh.json_text, sh.name);
        }
    return Scenario::load_file(name_or_path);
}

}  // namespace skein
