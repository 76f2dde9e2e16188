#include "skein/scenario.hpp"
#include "skein/sliding.hpp"
#include "skein/tl_expr.hpp"

#include <doctest.h>

#include <set>

using namespace skein;

namespace {

Multicurve mc(std::vector<std::vector<int>> comps) { return Multicurve(std::move(comps)); }

TLDiagram diagram_of(const std::string& word, int k) {
    return parse_element(word, k).terms().begin()->first;
}

// A minimal valid two-strand scenario used as a template for the
// validation tests; the two placeholders are the arc lists.
std::string tiny_scenario(const std::string& left_arc, const std::string& right_arc) {
    return R"({
      "name": "tiny",
      "punctures": [
        {"label": "a1", "x": 4, "y": 8},
        {"label": "a2", "x": 20, "y": 8}
      ],
      "outer": {"x0": 0, "y0": 0, "x1": 24, "y1": 16},
      "box": {"x0": 10, "y0": 4, "x1": 14, "y1": 12, "k": 2},
      "arcs": [)" +
           left_arc + ",\n" + right_arc + "]}";
}

const char* kGoodLeft =
    R"({"from": "L1", "to": "L2", "points": [["2", "28/3"], ["2", "20/3"]]})";
const char* kGoodRight =
    R"({"from": "R1", "to": "R2", "points": [["22", "28/3"], ["22", "20/3"]]})";

}  // namespace

TEST_CASE("shipped scenarios load and validate") {
    std::set<std::string> names;
    for (const ShippedScenario& sh : shipped_scenarios()) {
        Scenario s = Scenario::load_string(sh.json_text, sh.name);
        names.insert(s.name());
        CHECK(!s.notes().empty());
    }
    CHECK(names == std::set<std::string>{"h2h1", "h2h2", "fig5a", "fig5b", "fig9", "h1h1-k2",
                                          "h1h1-k4", "h1h1-k6"});
    Scenario h2h1 = find_scenario("h2h1");
    CHECK(h2h1.k() == 4);
    CHECK(h2h1.puncture_count() == 3);
    Scenario fig5a = find_scenario("fig5a");
    CHECK(fig5a.k() == 4);
    CHECK(fig5a.puncture_count() == 4);
    Scenario k6 = find_scenario("h1h1-k6");
    CHECK(k6.k() == 6);
}

TEST_CASE("scenario validation rejects bad geometry") {
    CHECK_NOTHROW(Scenario::load_string(tiny_scenario(kGoodLeft, kGoodRight), "tiny"));

    // Two crossing arcs, both routed under the box.
    std::string crossing = tiny_scenario(
        R"({"from": "L1", "to": "R1",
            "points": [["8", "28/3"], ["8", "2"], ["16", "2"], ["16", "28/3"]]})",
        R"({"from": "L2", "to": "R2",
            "points": [["6", "20/3"], ["6", "1"], ["18", "1"], ["18", "20/3"]]})");
    CHECK_THROWS_WITH_AS(Scenario::load_string(crossing, "crossing"),
                         doctest::Contains("cross"), std::invalid_argument);

    // An arc running through a puncture.
    std::string through = tiny_scenario(
        kGoodLeft,
        R"({"from": "R1", "to": "R2", "points": [["20", "28/3"], ["20", "20/3"]]})");
    CHECK_THROWS_WITH_AS(Scenario::load_string(through, "through"),
                         doctest::Contains("puncture"), std::invalid_argument);

    // A self-crossing arc.
    std::string selfx = tiny_scenario(
        kGoodLeft,
        R"({"from": "R1", "to": "R2",
            "points": [["22", "28/3"], ["22", "6"], ["18", "6"], ["18", "7"], ["23", "7"], ["23", "20/3"], ["22", "20/3"]]})");
    CHECK_THROWS_WITH_AS(Scenario::load_string(selfx, "selfx"), doctest::Contains("itself"),
                         std::invalid_argument);

    // A marked point used twice / unmatched points.
    std::string reused = tiny_scenario(
        kGoodLeft, R"({"from": "R1", "to": "R1", "points": [["22", "28/3"]]})");
    CHECK_THROWS(Scenario::load_string(reused, "reused"));
    std::string unmatched = "{\"name\": \"u\", \"punctures\": [{\"label\": \"a1\", \"x\": 4, "
                            "\"y\": 8}], \"outer\": {\"x0\": 0, \"y0\": 0, \"x1\": 24, \"y1\": "
                            "16}, \"box\": {\"x0\": 10, \"y0\": 4, \"x1\": 14, \"y1\": 12, "
                            "\"k\": 2}, \"arcs\": [" +
                            std::string(kGoodLeft) + "]}";
    CHECK_THROWS_WITH_AS(Scenario::load_string(unmatched, "u"), doctest::Contains("matched"),
                         std::invalid_argument);

    // Invalid JSON.
    CHECK_THROWS_WITH_AS(Scenario::load_string("{", "bad"), doctest::Contains("JSON"),
                         std::invalid_argument);

    // Labels must be a1, a2, ... in order.
    std::string labels = tiny_scenario(kGoodLeft, kGoodRight);
    auto pos = labels.find("\"a2\"");
    labels.replace(pos, 4, "\"b2\"");
    CHECK_THROWS_WITH_AS(Scenario::load_string(labels, "labels"), doctest::Contains("label"),
                         std::invalid_argument);

    // Arc leaving the outer rectangle.
    std::string outside = tiny_scenario(
        kGoodLeft,
        R"({"from": "R1", "to": "R2", "points": [["25", "28/3"], ["25", "20/3"]]})");
    CHECK_THROWS_WITH_AS(Scenario::load_string(outside, "outside"), doctest::Contains("outer"),
                         std::invalid_argument);

    // Arc cutting straight through the box.
    std::string through_box = tiny_scenario(
        R"({"from": "L1", "to": "R1", "points": []})",
        R"({"from": "L2", "to": "R2", "points": [["2", "20/3"], ["2", "2"], ["22", "2"], ["22", "20/3"]]})");
    CHECK_THROWS_WITH_AS(Scenario::load_string(through_box, "through_box"),
                         doctest::Contains("box"), std::invalid_argument);

    // A puncture inside the box.
    std::string inbox = tiny_scenario(kGoodLeft, kGoodRight);
    auto px = inbox.find("\"x\": 20");
    inbox.replace(px, 7, "\"x\": 12");
    CHECK_THROWS_WITH_AS(Scenario::load_string(inbox, "inbox"), doctest::Contains("box"),
                         std::invalid_argument);
}

TEST_CASE("box diagram embedding is exactly disjoint") {
    Rect box{Rat(0), Rat(0), Rat(12), Rat(8)};
    for (int k = 1; k <= 6; ++k) {
        for (const TLDiagram& d : TLDiagram::enumerate(k, k)) {
            std::map<int, Polyline> polys = embed_box_diagram(d, box);
            REQUIRE(polys.size() == static_cast<size_t>(k));
            std::vector<Polyline> all;
            for (const auto& [lo, pl] : polys) all.push_back(pl);
            for (size_t i = 0; i < all.size(); ++i)
                for (size_t j = i + 1; j < all.size(); ++j)
                    for (size_t si = 0; si + 1 < all[i].size(); ++si)
                        for (size_t sj = 0; sj + 1 < all[j].size(); ++sj)
                            CHECK(!segments_intersect(all[i][si], all[i][si + 1], all[j][sj],
                                                      all[j][sj + 1]));
        }
    }
}

TEST_CASE("glued values in the genus-2 # genus-1 scenario") {
    Scenario s = find_scenario("h2h1");
    struct Row {
        const char* word;
        Multicurve curve;
        int deltas;
    };
    const std::vector<Row> table = {
        {"e1*e2", mc({{0}, {2}, {1, 2}}), 0},
        {"e3*e2", mc({{1}, {2}, {0, 2}}), 0},
        {"e2*e1", mc({{0, 1}}), 0},
        {"e2*e3", mc({{0, 1}}), 0},
        {"Id4", mc({{0, 1}}), 0},
        {"e1", mc({{0}, {1}}), 0},
        {"e3", mc({{0}, {1}}), 0},
        {"e2", mc({{0, 1, 2}, {2}}), 0},
        {"e1*e3", mc({{0}, {1}}), 1},
        {"e1*e2*e3", mc({{0}, {1}}), 0},
        {"e3*e2*e1", mc({{0}, {1}}), 0},
        {"e1*e3*e2", mc({{0}, {1}, {2}, {2}}), 0},
        {"e2*e3*e1", mc({{0, 1}}), 1},
    };
    for (const Row& row : table) {
        GluedCurves g = glue(s, diagram_of(row.word, 4));
        CHECK(g.multicurve == row.curve);
        CHECK(g.trivial_components == row.deltas);
    }
    CHECK(glue(s, diagram_of("e2*e1", 4)).multicurve ==
          glue(s, diagram_of("e2*e3", 4)).multicurve);
}

TEST_CASE("glued curves are simple, disjoint and laminar on all scenarios") {
    for (const ShippedScenario& sh : shipped_scenarios()) {
        Scenario s = Scenario::load_string(sh.json_text, sh.name);
        for (const TLDiagram& d : TLDiagram::enumerate(s.k(), s.k())) {
            GluedCurves g = glue(s, d);
            // Closed curves pairwise disjoint and individually simple,
            // allowing only consecutive-segment vertex contact.
            for (size_t a = 0; a < g.closed_curves.size(); ++a) {
                const Polyline& pa = g.closed_curves[a];
                for (size_t i = 0; i + 1 < pa.size(); ++i)
                    for (size_t j = i + 1; j + 1 < pa.size(); ++j) {
                        bool adjacent = (j == i + 1) || (i == 0 && j + 2 == pa.size());
                        if (adjacent) continue;
                        CHECK(!segments_intersect(pa[i], pa[i + 1], pa[j], pa[j + 1]));
                    }
                for (size_t b = a + 1; b < g.closed_curves.size(); ++b)
                    for (size_t i = 0; i + 1 < pa.size(); ++i)
                        for (size_t j = 0; j + 1 < g.closed_curves[b].size(); ++j)
                            CHECK(!segments_intersect(pa[i], pa[i + 1], g.closed_curves[b][j],
                                                      g.closed_curves[b][j + 1]));
            }
            CHECK(is_laminar(g.multicurve.components()));
            // Component bookkeeping.
            CHECK(g.closed_curves.size() ==
                  g.multicurve.component_count() + static_cast<size_t>(g.trivial_components));
            // Ray direction independence of the enclosed sets.
            for (size_t c = 0; c < g.closed_curves.size(); ++c) {
                for (int pi = 0; pi < s.puncture_count(); ++pi) {
                    bool ref = enclosed_by(s.punctures()[pi], g.closed_curves[c], RayDir::pos_x);
                    CHECK(enclosed_by(s.punctures()[pi], g.closed_curves[c], RayDir::neg_x) == ref);
                    CHECK(enclosed_by(s.punctures()[pi], g.closed_curves[c], RayDir::pos_y) == ref);
                    CHECK(enclosed_by(s.punctures()[pi], g.closed_curves[c], RayDir::neg_y) == ref);
                }
            }
            // Each through strand crosses the separating line exactly once.
            int total = 0;
            for (int c : g.midline_crossings) {
                total += c;
                CHECK(c % 2 == 0);
            }
            CHECK(total == d.through_count());
        }
    }
}

TEST_CASE("isotopic redrawings glue identically") {
    Scenario a = find_scenario("fig5a");
    Scenario b = find_scenario("fig5b");
    for (const TLDiagram& d : TLDiagram::enumerate(4, 4)) {
        GluedCurves ga = glue(a, d), gb = glue(b, d);
        CHECK(ga.multicurve == gb.multicurve);
        CHECK(ga.coefficient == gb.coefficient);
    }
}

TEST_CASE("affine reparametrization leaves glued values unchanged") {
    // Scale all coordinates by 3 and translate by 1/7: every exact
    // predicate is invariant under this, so the glue output must be too.
    for (const char* name : {"h2h1", "h1h1-k4"}) {
        const ShippedScenario* sh = nullptr;
        for (const ShippedScenario& c : shipped_scenarios())
            if (c.name == name) sh = &c;
        REQUIRE(sh);
        Scenario orig = Scenario::load_string(sh->json_text, sh->name);

        // Rewrite every coordinate in the JSON through the affine map.
        std::string text = sh->json_text;
        auto map_rat = [](const Rat& r) -> Rat { return Rat(3) * r + Rat(1, 7); };
        // Parse and rebuild via nlohmann would duplicate the loader; use the
        // scenario accessors plus a fresh JSON document instead.
        std::string rebuilt = "{\"name\": \"affine\", \"punctures\": [";
        for (int i = 0; i < orig.puncture_count(); ++i) {
            if (i) rebuilt += ",";
            rebuilt += "{\"label\": \"a" + std::to_string(i + 1) + "\", \"x\": \"" +
                       rat_str(map_rat(orig.punctures()[i].x)) + "\", \"y\": \"" +
                       rat_str(map_rat(orig.punctures()[i].y)) + "\"}";
        }
        auto rect_json = [&](const Rect& r) {
            return "{\"x0\": \"" + rat_str(map_rat(r.x0)) + "\", \"y0\": \"" +
                   rat_str(map_rat(r.y0)) + "\", \"x1\": \"" + rat_str(map_rat(r.x1)) +
                   "\", \"y1\": \"" + rat_str(map_rat(r.y1)) + "\"";
        };
        rebuilt += "], \"outer\": " + rect_json(orig.outer()) + "}";
        rebuilt += ", \"box\": " + rect_json(orig.box()) + ", \"k\": " +
                   std::to_string(orig.k()) + "}";
        rebuilt += ", \"arcs\": [";
        bool first_arc = true;
        for (int p = 0; p < 2 * orig.k(); ++p) {
            int q = orig.kappa_partner(p);
            if (q < p) continue;
            if (!first_arc) rebuilt += ",";
            first_arc = false;
            Polyline pl = orig.kappa_polyline_from(p);
            rebuilt += "{\"from\": \"" + orig.point_name(p) + "\", \"to\": \"" +
                       orig.point_name(q) + "\", \"points\": [";
            for (size_t v = 1; v + 1 < pl.size(); ++v) {
                if (v > 1) rebuilt += ",";
                rebuilt += "[\"" + rat_str(map_rat(pl[v].x)) + "\", \"" +
                           rat_str(map_rat(pl[v].y)) + "\"]";
            }
            rebuilt += "]}";
        }
        rebuilt += "]}";
        Scenario moved = Scenario::load_string(rebuilt, "affine");
        for (const TLDiagram& d : TLDiagram::enumerate(orig.k(), orig.k())) {
            GluedCurves g0 = glue(orig, d), g1 = glue(moved, d);
            CHECK(g0.multicurve == g1.multicurve);
            CHECK(g0.coefficient == g1.coefficient);
        }
        (void)text;
    }
}

TEST_CASE("linearity of the gluing map") {
    Scenario s = find_scenario("h2h1");
    TLElement x = parse_element("A^2*e1 + (1 - A^4)*e2*e1", 4);
    TLElement y = parse_element("e3*e2 - A^-2*e1*e3", 4);
    CHECK(rho_star(s, x + y) == rho_star(s, x) + rho_star(s, y));
    CHECK(rho_star(s, Laurent::parse("A^6 - 1") * x) ==
          Laurent::parse("A^6 - 1") * rho_star(s, x));
}

TEST_CASE("multicurve printing") {
    CHECK(mc({{0}, {2}, {1, 2}}).str(3) == "a1 a3 [a2a3]");
    CHECK(mc({{0, 1}, {0, 1}}).str(3) == "[a1a2]^2");
    CHECK(mc({}).str(3) == "1");
    CHECK(mc({{0, 1, 2}}).str(3) == "[a4]");
    CHECK(mc({{0, 1}, {0, 1}}).str(2) == "[a3]^2");
    CHECK_THROWS(mc({{0, 1}, {1, 2}}));  // not laminar
    CHECK_THROWS(mc({{}}));              // empty component

    SkeinVector v;
    v.add_term(mc({{0}}), Laurent(1));
    v.add_term(mc({{1}}), -Laurent::power_of_A(2));
    CHECK(v.str(2) == "a1 - A^2*a2");
}

TEST_CASE("identity closures of the winding scenarios") {
    CHECK(glue(find_scenario("h1h1-k2"), TLDiagram::identity(2)).multicurve ==
          mc({{0, 1}}));
    CHECK(glue(find_scenario("h1h1-k4"), TLDiagram::identity(4)).multicurve ==
          mc({{0, 1}, {0, 1}}));
    CHECK(glue(find_scenario("h1h1-k6"), TLDiagram::identity(6)).multicurve ==
          mc({{0, 1}, {0, 1}, {0, 1}}));
    CHECK(glue(find_scenario("h2h2"), TLDiagram::identity(4)).multicurve ==
          mc({{0, 3}, {1, 2}}));
}
