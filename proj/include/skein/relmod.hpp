// Linear algebra over the fraction field Q(A) with exact certificates:
// span membership, membership over Z[A^{+-1}] via the unique-certificate
// criterion, submodule comparison, the bounded ideal generator model for a
// glued scenario, and the two-level evidence report for the genus-1 #
// genus-1 generation question.
#pragma once

#include "skein/rational_fn.hpp"
#include "skein/scenario.hpp"
#include "skein/sliding.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace skein {

using SparseRow = std::map<int, Laurent>;

// Rows over a fixed ordered ambient basis; basis entries are display labels.
struct RelationMatrix {
    std::vector<std::string> basis;
    std::vector<SparseRow> rows;
    std::vector<std::string> row_labels;
};

struct Certificate {
    bool member = false;
    std::vector<RationalFn> coeffs;          // one per matrix row
    std::map<int, RationalFn> residual;      // empty iff member
    bool all_laurent = false;
};

enum class ZDecision { member, non_member, undecided };

struct ZResult {
    ZDecision decision = ZDecision::undecided;
    std::optional<Certificate> certificate;
    std::string note;
};

// Exact elimination with certificate tracking.  The matrix must outlive the
// solver.  Every certificate produced is re-verified by multiplication
// before being returned.
class SpanSolver {
public:
    explicit SpanSolver(const RelationMatrix& matrix);
    ~SpanSolver();

    const RelationMatrix& matrix() const;
    int rank() const;
    bool rows_independent() const;

    Certificate membership(const SparseRow& target) const;
    // Member with a Laurent certificate, non-member when that is provably
    // impossible, undecided otherwise (dependent rows, heuristic exhausted).
    ZResult z_decision(const SparseRow& target) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

Certificate span_membership(const SparseRow& target, const RelationMatrix& rels);
ZResult z_span_decision(const SparseRow& target, const RelationMatrix& rels);

enum class Ring { QA, ZA };
enum class CompareVerdict { equal, left_in_right_only, right_in_left_only, incomparable };

struct RowMembership {
    std::string row_label;
    ZDecision decision;          // over QA only member / non_member occur
    std::optional<Certificate> certificate;
};

struct CompareReport {
    Ring ring;
    CompareVerdict verdict;
    bool partial = false;        // some ZA row was undecided
    std::vector<RowMembership> left_rows;   // rows of left vs span(right)
    std::vector<RowMembership> right_rows;  // rows of right vs span(left)
};

// Mutual rowwise membership over the requested ring, shared ambient basis.
CompareReport submodule_compare(const RelationMatrix& left, const RelationMatrix& right,
                                Ring ring);
// Variant reusing already-built solvers (they are expensive for large sets).
CompareReport submodule_compare_with(const RelationMatrix& left, const SpanSolver& left_solver,
                                     const RelationMatrix& right,
                                     const SpanSolver& right_solver, Ring ring);

std::string ring_str(Ring r);
std::string verdict_str(CompareVerdict v);
std::string decision_str(ZDecision d);

// ---- glued matrices -------------------------------------------------------

// A relation matrix over the multicurve basis of a scenario, with the
// originating data kept for reporting.
struct GluedRow {
    std::string source_word;     // generator word of the source diagram
    int through = 0;
    Multicurve top;              // glued image of the source diagram
    SkeinVector vector;
};

struct IdealGenerators {
    std::vector<Multicurve> curve_basis;
    RelationMatrix matrix;
    std::vector<GluedRow> rows;
    int skipped_trivial = 0;     // sources whose glued image had a trivial loop
    int skipped_zero = 0;        // sources whose relation glued to zero
    int skipped_duplicate = 0;   // deduplicated by glued top term
};

// One generator per even through count t <= kmax and per basis diagram of
// TL(k,k) whose glued image has no contractible component: the glued
// upper-arc slide relation, deduplicated by glued top term.
IdealGenerators ideal_I_generators(const Scenario& s, int kmax);

// Index of a multicurve within a basis assembled from skein vectors.
std::vector<Multicurve> collect_curves(const std::vector<const SkeinVector*>& vectors);
SparseRow row_from_skein(const SkeinVector& v, const std::vector<Multicurve>& basis);
SparseRow row_from_element(const TLElement& x, const std::vector<TLDiagram>& basis);

// ---- two-level generation evidence ---------------------------------------

struct ConjectureComparison {
    std::string level;           // "tl" or scenario name
    CompareReport qa;
    CompareReport za;
    size_t full_rows = 0;        // generating-set sizes after gluing/filtering
    size_t reduced_rows = 0;
};

struct ConjectureReport {
    int k = 0;
    std::vector<ConjectureComparison> comparisons;
};

// Compares the full slide-relation set at level k against the upper-arc
// identity relation plus all relations of smaller through count, at the
// Temperley-Lieb level and glued into each supplied scenario, over both
// rings.
ConjectureReport conjecture_evidence(int k, const std::vector<Scenario>& scenarios);

}  // namespace skein
