#include "skein/sliding.hpp"
#include "skein/tl_expr.hpp"
#include "skein/verify.hpp"

#include <doctest.h>

using namespace skein;

namespace {

TLDiagram diagram_of(const std::string& word, int k) {
    TLElement e = parse_element(word, k);
    REQUIRE(e.term_count() == 1);
    return e.terms().begin()->first;
}

// The conjugated recursion: running the strand-extension recursion with
// every coefficient mirrored must agree with the mirror of the result.
TLElement conjugated_recursion(int k) {
    TLElement cur = parse_element("A^-2*Id2 + (1 - A^4)*e1", 2);
    TLElement cur_bar = cur.bar();
    for (int j = 3; j <= k; ++j) {
        TLElement ext = cur.tensor(TLElement::identity(1));
        TLElement ext_bar = cur_bar.tensor(TLElement::identity(1));
        TLElement e = TLElement::generator(j, j - 1);
        TLElement next = Laurent::power_of_A(-2) * ext + e.compose(ext) -
                         Laurent::power_of_A(4) * ext_bar.compose(e);
        cur = next;
        cur_bar = cur.bar();
    }
    return cur;
}

}  // namespace

TEST_CASE("slide element expansions") {
    CHECK(TLElement(w_id(2)) == tabulated::w2());
    CHECK(TLElement(w_id(3)) == tabulated::w3());
    CHECK(TLElement(w_id(4)) == tabulated::w4());
    CHECK_THROWS(w_id(1));

    // Identity coefficient is A^{2(k-1)} and term counts stay within the
    // basis size.
    for (int k = 2; k <= 6; ++k) {
        const TLElement& w = w_id(k);
        CHECK(w.coeff(TLDiagram::identity(k)) == Laurent::power_of_A(2 * (k - 1)));
        CHECK(w.term_count() <= TLDiagram::enumerate(k, k).size());
    }
}

TEST_CASE("upper-arc variant") {
    CHECK(u_id(2) == TLElement(w_id(2)));
    CHECK(u_id(3) == TLElement(w_id(3)).sigma());
    // Generator-index reversal oracle at three strands.
    CHECK(u_id(3) == parse_element(
                         "A^4*Id3 + (A^2 - A^-6)*e1 + (A^2 - A^-2)*e2 + "
                         "(1 - A^-4)*(e2*e1 + e1*e2)",
                         3));
    CHECK(u_id(4).coeff(diagram_of("e3", 4)) == Laurent::parse("A^4 - 1"));
}

TEST_CASE("slide images of the identity bundle") {
    CHECK(phi(kLowerPositive, 4) == tabulated::phi_lower4());
    CHECK(phi(kUpperPositive, 4) == tabulated::phi_upper4());
    CHECK(phi(kLowerNegative, 2) == parse_element("A^-8*Id2 + (A^-6 - A^-2)*e1", 2));
    CHECK(phi(kUpperPositive, 2) == phi(kLowerPositive, 2));
    CHECK(phi(kUpperNegative, 4) == phi(kLowerNegative, 4).sigma());
}

TEST_CASE("slide relations of basis diagrams") {
    SlidingRelation r1 = slide_relation(diagram_of("e1", 4), kLowerPositive);
    CHECK(r1.vector == parse_element("(1 - A^8)*e1 + (A^2 - A^6)*e1*e3", 4));

    SlidingRelation r2 = slide_relation(diagram_of("e2*e1", 4), kLowerPositive);
    CHECK(r2.vector == parse_element("(1 - A^8)*e2*e1 + (A^2 - A^6)*e2*e1*e3", 4));

    for (SlideVariant v : all_variants())
        CHECK(slide_relation(diagram_of("e1*e3", 4), v).vector.is_zero());
}

TEST_CASE("relation sets") {
    std::vector<SlidingRelation> k2 = relation_set(2, {kLowerPositive});
    REQUIRE(k2.size() == 1);
    CHECK(k2[0].vector == parse_element("(1 - A^8)*Id2 + (A^2 - A^6)*e1", 2));

    // Four variants on the fourteen four-strand diagrams, four of which
    // miss the compressing disc.
    CHECK(relation_set(4, all_variants()).size() == 4 * (14 - 4));
    // Only the identity has full through count.
    std::vector<SlidingRelation> top = relation_set(4, {kLowerPositive}, 4);
    REQUIRE(top.size() == 1);
    CHECK(top[0].source.is_identity());
}

TEST_CASE("identity-bundle relation equals the direct expansion") {
    for (int k = 2; k <= 6; ++k) {
        SlidingRelation r = slide_relation(TLDiagram::identity(k), kLowerPositive);
        CHECK(r.vector ==
              TLElement::identity(k) - Laurent::power_of_A(6) * TLElement(w_id(k)));
    }
}

TEST_CASE("flip equivariance of the generating set") {
    for (int k : {3, 4, 5}) {
        for (const TLDiagram& d : TLDiagram::enumerate(k, k)) {
            for (Sign s : {Sign::positive, Sign::negative}) {
                TLElement lower = slide_relation(d, SlideVariant{Arc::lower, s}).vector;
                TLElement upper =
                    slide_relation(d.flipped(), SlideVariant{Arc::upper, s}).vector;
                CHECK(lower.sigma() == upper);
            }
        }
    }
}

TEST_CASE("two-strand relations lift through the factorization") {
    for (SlideVariant v : all_variants()) {
        TLElement r2 = slide_relation(TLDiagram::identity(2), v).vector;
        for (const TLDiagram& d : TLDiagram::enumerate(4, 4)) {
            if (d.through_count() != 2) continue;
            ThroughFactorization f = through_factor(d);
            TLElement lifted = TLElement(f.front).compose(r2).compose(TLElement(f.back));
            CHECK(slide_relation(d, v).vector == lifted);
        }
    }
}

TEST_CASE("mirrored recursion agrees with the mirror of the expansion") {
    for (int k = 2; k <= 6; ++k) CHECK(TLElement(w_id(k)).bar() == conjugated_recursion(k));
}

TEST_CASE("variant parsing") {
    for (SlideVariant v : all_variants()) CHECK(parse_variant(variant_str(v)) == v);
    CHECK_THROWS(parse_variant("sideways+"));
}

TEST_CASE("verification suite is green") {
    std::vector<CheckResult> rs = run_verification();
    for (const CheckResult& r : rs) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.pass);
    }
    CHECK(rs.size() == verification_check_names().size());
}

TEST_CASE("verification filter") {
    std::vector<CheckResult> rs = run_verification({"w2_base", "glued_images"});
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].name == "w2_base");
    CHECK(rs[1].name == "glued_images");
    CHECK_THROWS(run_verification({"nonsense"}));
}

TEST_CASE("exact comparison detects tampering") {
    TLElement perturbed = tabulated::w4() + TLElement::identity(4);
    CHECK(!(Laurent::power_of_A(6) * perturbed == tabulated::phi_lower4()));
    TLElement perturbed2 = tabulated::w4() + parse_element("e1*e3", 4);
    CHECK(!(Laurent::power_of_A(6) * perturbed2 == tabulated::phi_lower4()));
}
