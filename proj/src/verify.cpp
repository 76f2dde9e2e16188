#include "skein/verify.hpp"

#include "skein/relmod.hpp"
#include "skein/scenario.hpp"
#include "skein/sliding.hpp"
#include "skein/tl_expr.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace skein {

namespace {

struct Check {
    std::string name;
    std::function<CheckResult()> run;
};

CheckResult ok(const std::string& name, const std::string& detail = "") {
    return CheckResult{name, true, detail};
}

CheckResult fail(const std::string& name, const std::string& detail) {
    return CheckResult{name, false, detail};
}

CheckResult compare_elements(const std::string& name, const TLElement& got,
                             const TLElement& want, const std::string& note = "") {
    if (got == want) return ok(name, note);
    return fail(name, "mismatch:\n  computed: " + print_element(got) +
                          "\n  expected: " + print_element(want));
}

std::string certificate_str(const Certificate& c, const RelationMatrix& m) {
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < c.coeffs.size(); ++j) {
        if (c.coeffs[j].is_zero()) continue;
        if (!first) os << ", ";
        first = false;
        os << m.row_labels[j] << ": " << c.coeffs[j];
    }
    if (first) os << "all zero";
    return os.str();
}

std::string residual_str(const Certificate& c, const RelationMatrix& m) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [col, v] : c.residual) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v << ")*" << m.basis[col];
    }
    if (first) os << "0";
    return os.str();
}

// The six two-strand slide relations as vectors over the TL(4,4) basis.
RelationMatrix two_strand_matrix(const std::vector<TLDiagram>& basis) {
    RelationMatrix m;
    for (const TLDiagram& d : basis) m.basis.push_back(word_str(d));
    const char* sources[6] = {"e1", "e3", "e1*e2", "e2*e1", "e1*e2*e3", "e3*e2*e1"};
    for (const char* src : sources) {
        TLElement e = parse_element(src, 4);
        const TLDiagram& d = e.terms().begin()->first;
        SlidingRelation r = slide_relation(d, kLowerPositive);
        m.rows.push_back(row_from_element(r.vector, basis));
        m.row_labels.push_back(std::string(src) + " lower+");
    }
    return m;
}

CheckResult check_w2() { return compare_elements("w2_base", w_id(2), tabulated::w2()); }
CheckResult check_w3() { return compare_elements("w3_recursion", w_id(3), tabulated::w3()); }
CheckResult check_w4() { return compare_elements("w4_recursion", w_id(4), tabulated::w4()); }

CheckResult check_slide_lower() {
    TLElement expanded = Laurent::power_of_A(6) * tabulated::w4();
    if (!(expanded == tabulated::phi_lower4()))
        return fail("slide_lower_id4",
                    "tabulated lower-slide expansion is not A^6 times the tabulated w value");
    return compare_elements("slide_lower_id4", phi(kLowerPositive, 4), tabulated::phi_lower4());
}

CheckResult check_slide_upper() {
    if (!(tabulated::phi_lower4().sigma() == tabulated::phi_upper4()))
        return fail("slide_upper_id4",
                    "tabulated upper-slide expansion is not the flip of the lower one");
    return compare_elements("slide_upper_id4", phi(kUpperPositive, 4), tabulated::phi_upper4());
}

CheckResult check_variant_difference() {
    TLElement r_lower = slide_relation(TLDiagram::identity(4), kLowerPositive).vector;
    TLElement r_upper = slide_relation(TLDiagram::identity(4), kUpperPositive).vector;
    return compare_elements("variant_difference", r_lower - r_upper, tabulated::variant_diff4(),
                            "upper-slide image minus lower-slide image of Id4");
}

CheckResult check_two_strand_relations() {
    const char* sources[6] = {"e1", "e3", "e1*e2", "e2*e1", "e1*e2*e3", "e3*e2*e1"};
    for (int i = 0; i < 6; ++i) {
        TLElement e = parse_element(sources[i], 4);
        const TLDiagram& d = e.terms().begin()->first;
        SlidingRelation r = slide_relation(d, kLowerPositive);
        TLElement want = tabulated::two_strand_rhs(i) - tabulated::two_strand_lhs(i);
        if (!(r.vector == want))
            return fail("two_strand_relations",
                        std::string("relation of ") + sources[i] + " mismatch:\n  computed: " +
                            print_element(r.vector) + "\n  expected: " + print_element(want));
    }
    return ok("two_strand_relations", "all six relations match, including the word reductions");
}

CheckResult check_word_reductions() {
    if (!(parse_element("e1*e2*e3*e1", 4) == parse_element("e1*e3", 4)))
        return fail("word_reductions", "e1*e2*e3*e1 did not reduce to e1*e3");
    if (!(parse_element("e3*e2*e1*e3", 4) == parse_element("e3*e1", 4)))
        return fail("word_reductions", "e3*e2*e1*e3 did not reduce to e3*e1");
    return ok("word_reductions");
}

TLElement mirror_combination() {
    TLElement r_upper = slide_relation(TLDiagram::identity(4), kUpperPositive).vector;
    TLElement r_upper_neg = slide_relation(TLDiagram::identity(4), kUpperNegative).vector;
    return Laurent::power_of_A(12) * r_upper_neg + r_upper;
}

CheckResult check_mirror_combo() {
    TLElement combo = mirror_combination();
    TLElement display = tabulated::mirror_combo4();
    if (combo == display) return ok("mirror_combo", "matches the displayed combination exactly");
    if (combo == -display)
        return ok("mirror_combo",
                  "matches the displayed combination up to a global sign (relations here are "
                  "oriented source - slide; the display uses the opposite orientation)");
    return fail("mirror_combo", "mismatch:\n  computed: " + print_element(combo) +
                                    "\n  displayed: " + print_element(display));
}

CheckResult check_mirror_combo_reduction() {
    std::vector<TLDiagram> basis = TLDiagram::enumerate(4, 4);
    RelationMatrix rows = two_strand_matrix(basis);
    SpanSolver solver(rows);
    TLElement display = tabulated::mirror_combo4();
    TLElement reduced = tabulated::mirror_combo_reduced4();
    // Display == mu * reduced + (Laurent combination of the two-strand
    // relations) for a unit mu; search the unit.
    for (int mag = 0; mag <= 16; ++mag)
        for (int sign : {1, -1})
            for (int dir : {1, -1}) {
                if (mag == 0 && dir == -1) continue;
                Laurent mu = Laurent::monomial(sign, mag * dir);
                TLElement delta = display - mu * reduced;
                Certificate c = solver.membership(row_from_element(delta, basis));
                if (c.member && c.all_laurent) {
                    std::string note =
                        "reduces to the stated relation times the unit " + mu.str() +
                        "; certificate: " + certificate_str(c, rows);
                    if (!mu.is_one())
                        note += " (the literal unit 1 admits no Laurent certificate: the "
                                "reduced relation is recovered up to this unit)";
                    return ok("mirror_combo_reduction", note);
                }
            }
    Certificate diag = solver.membership(row_from_element(display - reduced, basis));
    return fail("mirror_combo_reduction",
                "no unit normalization admits a Laurent certificate against the two-strand "
                "relations; at unit 1 the " +
                    std::string(diag.member ? "certificate is " + certificate_str(diag, rows)
                                            : "residual is " + residual_str(diag, rows)));
}

CheckResult check_final_relation_reduction() {
    std::vector<TLDiagram> basis = TLDiagram::enumerate(4, 4);
    RelationMatrix rows = two_strand_matrix(basis);
    SpanSolver solver(rows);
    TLElement delta = tabulated::variant_diff4() - tabulated::final_relation4();
    Certificate c = solver.membership(row_from_element(delta, basis));
    if (!c.member)
        return fail("final_relation_reduction",
                    "variant difference minus the final relation is not in the span; "
                    "residual: " + residual_str(c, rows));
    if (!c.all_laurent)
        return fail("final_relation_reduction",
                    "certificate is not Laurent: " + certificate_str(c, rows));
    return ok("final_relation_reduction", "certificate: " + certificate_str(c, rows));
}

CheckResult check_tamper_detection() {
    TLElement perturbed = tabulated::w4() + TLElement::identity(4);
    if (Laurent::power_of_A(6) * perturbed == tabulated::phi_lower4())
        return fail("tamper_detection", "a perturbed expansion passed the exact comparison");
    return ok("tamper_detection", "a unit perturbation of the w expansion is detected");
}

Multicurve mc(std::vector<std::vector<int>> comps) { return Multicurve(std::move(comps)); }

CheckResult check_glued_images() {
    Scenario s = find_scenario("h2h1");
    struct Expected {
        const char* expr;
        Multicurve curve;
    };
    const std::vector<Expected> table = {
        {"e1*e2", mc({{0}, {2}, {1, 2}})},
        {"e3*e2", mc({{1}, {2}, {0, 2}})},
        {"e2*e1", mc({{0, 1}})},
        {"e2*e3", mc({{0, 1}})},
    };
    for (const Expected& e : table) {
        TLElement x = parse_element(e.expr, 4);
        const TLDiagram& d = x.terms().begin()->first;
        GluedCurves g = glue(s, d);
        if (!g.coefficient.is_one())
            return fail("glued_images", std::string(e.expr) + " glued with coefficient " +
                                            g.coefficient.str() + ", expected exactly 1");
        if (!(g.multicurve == e.curve))
            return fail("glued_images", std::string(e.expr) + " glued to " +
                                            g.multicurve.str(s.puncture_count()) +
                                            ", expected " + e.curve.str(s.puncture_count()));
    }
    return ok("glued_images",
              "e1*e2 -> a1 a3 [a2a3], e3*e2 -> a2 a3 [a1a3], e2*e1 = e2*e3 -> [a1a2], "
              "all with coefficient 1");
}

CheckResult check_glued_final_relation() {
    Scenario s = find_scenario("h2h1");
    SkeinVector got = rho_star(s, tabulated::final_relation4());
    Laurent c = Laurent::parse("A^4 - 1");
    SkeinVector want;
    want.add_term(mc({{0}, {2}, {1, 2}}), c);
    want.add_term(mc({{1}, {2}, {0, 2}}), -c);
    if (!(got == want))
        return fail("glued_final_relation",
                    "glued value: " + got.str(s.puncture_count()) +
                        ", expected: " + want.str(s.puncture_count()));
    return ok("glued_final_relation", got.str(s.puncture_count()) + " == 0");
}

CheckResult check_vanishing_h1_embedding() {
    Scenario s = find_scenario("fig9");
    SkeinVector got = rho_star(s, tabulated::mirror_combo_reduced4());
    if (!got.is_zero())
        return fail("vanishing_h1_embedding",
                    "expected zero, got " + got.str(s.puncture_count()));
    return ok("vanishing_h1_embedding",
              "the reduced mirror combination vanishes under the genus-1 side embedding");
}

CheckResult check_nonvanishing_h2_embedding() {
    Scenario s = find_scenario("h2h2");
    SkeinVector got = rho_star(s, tabulated::mirror_combo_reduced4());
    if (got.is_zero())
        return fail("nonvanishing_h2_embedding", "expected a nonzero glued value, got zero");
    return ok("nonvanishing_h2_embedding", "glued value: " + got.str(s.puncture_count()));
}

CheckResult check_ideal_obstruction() {
    Scenario s = find_scenario("h2h1");
    IdealGenerators ideal = ideal_I_generators(s, 4);
    SpanSolver solver(ideal.matrix);

    SkeinVector target = rho_star(s, tabulated::final_relation4());
    SparseRow row;
    try {
        row = row_from_skein(target, ideal.curve_basis);
    } catch (const std::exception& e) {
        return fail("ideal_obstruction", std::string("target leaves the generator support: ") +
                                             e.what());
    }

    if (!solver.rows_independent())
        return fail("ideal_obstruction", "generator rows are unexpectedly dependent over Q(A)");
    Certificate qa = solver.membership(row);
    if (!qa.member)
        return fail("ideal_obstruction",
                    "target is not even in the Q(A)-span of the bounded generator list; "
                    "residual: " + residual_str(qa, ideal.matrix));
    if (qa.all_laurent)
        return fail("ideal_obstruction",
                    "certificate is Laurent, no obstruction: " + certificate_str(qa, ideal.matrix));
    Laurent want_den = Laurent::parse("A^4 + 1");
    for (const RationalFn& c : qa.coeffs)
        if (!c.is_zero() && !c.is_laurent() && !(c.den() == want_den))
            return fail("ideal_obstruction",
                        "unexpected certificate denominator " + c.den().str());
    ZResult z = solver.z_decision(row);
    if (z.decision != ZDecision::non_member)
        return fail("ideal_obstruction",
                    "expected non_member over Z[A^+-1], got " + decision_str(z.decision));
    if (Laurent::parse("A^4 - 1").divided_exactly_by(Laurent::parse("A^8 - 1")))
        return fail("ideal_obstruction", "(A^4 - 1) divided exactly by (A^8 - 1)");
    auto q = Laurent::parse("A^8 - 1").divided_exactly_by(Laurent::parse("A^4 - 1"));
    if (!q || !(*q == Laurent::parse("A^4 + 1")))
        return fail("ideal_obstruction", "(A^8 - 1)/(A^4 - 1) did not come out as A^4 + 1");
    return ok("ideal_obstruction",
              "member over Q(A) with unique non-Laurent certificate (" +
                  certificate_str(qa, ideal.matrix) +
                  "), hence not in the bounded ideal over Z[A^+-1]");
}

const std::vector<Check>& checks() {
    static const std::vector<Check> table = {
        {"w2_base", check_w2},
        {"w3_recursion", check_w3},
        {"w4_recursion", check_w4},
        {"slide_lower_id4", check_slide_lower},
        {"slide_upper_id4", check_slide_upper},
        {"variant_difference", check_variant_difference},
        {"two_strand_relations", check_two_strand_relations},
        {"word_reductions", check_word_reductions},
        {"mirror_combo", check_mirror_combo},
        {"mirror_combo_reduction", check_mirror_combo_reduction},
        {"final_relation_reduction", check_final_relation_reduction},
        {"tamper_detection", check_tamper_detection},
        {"glued_images", check_glued_images},
        {"glued_final_relation", check_glued_final_relation},
        {"vanishing_h1_embedding", check_vanishing_h1_embedding},
        {"nonvanishing_h2_embedding", check_nonvanishing_h2_embedding},
        {"ideal_obstruction", check_ideal_obstruction},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& verification_check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> ns;
        for (const Check& c : checks()) ns.push_back(c.name);
        return ns;
    }();
    return names;
}

std::vector<CheckResult> run_verification(const std::vector<std::string>& only) {
    for (const std::string& name : only) {
        bool known = false;
        for (const Check& c : checks())
            if (c.name == name) known = true;
        if (!known) throw std::invalid_argument("unknown check '" + name + "'");
    }
    std::vector<CheckResult> results;
    for (const Check& c : checks()) {
        if (!only.empty() &&
            std::find(only.begin(), only.end(), c.name) == only.end())
            continue;
        try {
            results.push_back(c.run());
        } catch (const std::exception& e) {
            results.push_back(fail(c.name, std::string("exception: ") + e.what()));
        }
    }
    return results;
}

}  // namespace skein
