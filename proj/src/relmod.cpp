#include "skein/relmod.hpp"

#include "skein/tl_expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace skein {

namespace {

// gcd of all entries of a row combined with the common unit power, for
// fraction-free normalization during elimination.  The unit power is
// always the full minimum so that proportional rows normalize to equal
// primitive parts.
Laurent row_content(const SparseRow& r) {
    if (r.empty()) return Laurent(1);
    Laurent g;
    bool gcd_settled = false;
    long min_shift = 0;
    bool first = true;
    for (const auto& [c, v] : r) {
        if (!gcd_settled) {
            g = Laurent::gcd(g, v);
            gcd_settled = g.is_one();
        }
        long me = v.min_exp();
        min_shift = first ? me : std::min(min_shift, me);
        first = false;
    }
    return g.shifted(min_shift);
}

SparseRow scaled_diff(const Laurent& a, const SparseRow& x, const Laurent& b,
                      const SparseRow& y) {
    // a*x - b*y
    SparseRow out;
    for (const auto& [c, v] : x) out[c] = a * v;
    for (const auto& [c, v] : y) {
        auto it = out.find(c);
        if (it == out.end()) {
            Laurent t = -(b * v);
            if (!t.is_zero()) out.emplace(c, std::move(t));
        } else {
            it->second -= b * v;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

}  // namespace

struct SpanSolver::Impl {
    const RelationMatrix& matrix;

    struct ERow {
        SparseRow row;
        std::map<int, RationalFn> combo;  // row == sum combo[j] * matrix.rows[j]
        int pivot;
    };
    std::vector<ERow> erows;  // sorted by pivot column

    // Rows grouped by unit proportionality (row_i = +-A^n * row_j).  One
    // representative per class spans the same lattice over Z[A^+-1]; a
    // class whose scale is a Laurent multiple of another class on the same
    // line is redundant and dropped.
    struct Classes {
        std::vector<size_t> rep_rows;      // indices into matrix.rows
        RelationMatrix reps;
        std::unique_ptr<SpanSolver> solver;
        bool built = false;
    };
    mutable Classes classes;

    explicit Impl(const RelationMatrix& m) : matrix(m) {
        for (size_t i = 0; i < m.rows.size(); ++i) insert_row(i);
    }

    const Classes& unit_classes() const {
        if (classes.built) return classes;
        struct Line {
            SparseRow primitive;
            std::vector<std::pair<size_t, Laurent>> scales;  // (row index, lambda)
        };
        std::vector<Line> lines;
        for (size_t i = 0; i < matrix.rows.size(); ++i) {
            const SparseRow& r = matrix.rows[i];
            if (r.empty()) continue;
            SparseRow prim = r;
            Laurent f = row_content(prim);
            if (prim.begin()->second.terms().rbegin()->second < 0) f = -f;
            for (auto& [c, v] : prim) v = *v.divided_exactly_by(f);
            bool placed = false;
            for (Line& l : lines)
                if (l.primitive == prim) {
                    l.scales.emplace_back(i, f);
                    placed = true;
                    break;
                }
            if (!placed) lines.push_back(Line{std::move(prim), {{i, f}}});
        }
        for (const Line& l : lines) {
            // Unit-equivalence classes of the scales; keep, per line, only
            // scales not exactly divisible by another kept scale.
            std::vector<std::pair<size_t, Laurent>> kept;
            for (const auto& [i, f] : l.scales) {
                bool redundant = false;
                for (const auto& [j, g] : l.scales) {
                    if (i == j) continue;
                    auto q = f.divided_exactly_by(g);
                    if (!q) continue;
                    if (q->is_unit() ? j < i : true) {
                        // exact multiple: unit ties break by index
                        redundant = true;
                        break;
                    }
                }
                if (!redundant) kept.emplace_back(i, f);
            }
            for (const auto& [i, f] : kept) classes.rep_rows.push_back(i);
        }
        std::sort(classes.rep_rows.begin(), classes.rep_rows.end());
        classes.reps.basis = matrix.basis;
        for (size_t i : classes.rep_rows) {
            classes.reps.rows.push_back(matrix.rows[i]);
            classes.reps.row_labels.push_back(
                matrix.row_labels.empty() ? "row " + std::to_string(i) : matrix.row_labels[i]);
        }
        classes.solver = std::make_unique<SpanSolver>(classes.reps);
        classes.built = true;
        return classes;
    }

    // Reduce r (tracking scalar and combo) against the echelon.  Maintains
    //   r == scalar * target - sum_j combo[j] * rows[j].
    void reduce(SparseRow& r, RationalFn& scalar, std::map<int, RationalFn>& combo) const {
        for (const ERow& e : erows) {
            auto it = r.find(e.pivot);
            if (it == r.end()) continue;
            Laurent rc = it->second;
            const Laurent& piv = e.row.at(e.pivot);
            r = scaled_diff(piv, r, rc, e.row);
            RationalFn rp(piv), rr(rc);
            scalar *= rp;
            for (auto& [j, v] : combo) v *= rp;
            for (const auto& [j, v] : e.combo) {
                RationalFn& slot = combo[j];
                slot += rr * v;
                if (slot.is_zero()) combo.erase(j);
            }
            normalize(r, scalar, combo);
        }
    }

    void normalize(SparseRow& r, RationalFn& scalar, std::map<int, RationalFn>& combo) const {
        if (r.empty()) return;
        Laurent f = row_content(r);
        if (r.begin()->second.terms().rbegin()->second < 0) f = -f;
        if (f.is_one()) return;
        for (auto& [c, v] : r) v = *v.divided_exactly_by(f);
        RationalFn rf(Laurent(1), f);
        scalar *= rf;
        for (auto& [j, v] : combo) v *= rf;
    }

    void insert_row(size_t i) {
        SparseRow r = matrix.rows[i];
        RationalFn scalar(1);
        std::map<int, RationalFn> combo;
        reduce(r, scalar, combo);
        if (r.empty()) return;  // dependent row
        ERow e;
        e.pivot = r.begin()->first;
        e.row = std::move(r);
        // r == scalar*row_i - sum combo[j] row_j
        e.combo = std::move(combo);
        for (auto& [j, v] : e.combo) v = -v;
        RationalFn& self = e.combo[static_cast<int>(i)];
        self += scalar;
        if (self.is_zero()) e.combo.erase(static_cast<int>(i));
        auto pos = std::lower_bound(erows.begin(), erows.end(), e.pivot,
                                    [](const ERow& a, int p) { return a.pivot < p; });
        erows.insert(pos, std::move(e));
    }
};

SpanSolver::SpanSolver(const RelationMatrix& m) : impl_(std::make_unique<Impl>(m)) {}
SpanSolver::~SpanSolver() = default;

const RelationMatrix& SpanSolver::matrix() const { return impl_->matrix; }
int SpanSolver::rank() const { return static_cast<int>(impl_->erows.size()); }
bool SpanSolver::rows_independent() const {
    return impl_->erows.size() == impl_->matrix.rows.size();
}

namespace {

std::map<int, RationalFn> evaluate_combination(const std::vector<RationalFn>& coeffs,
                                               const RelationMatrix& m) {
    std::map<int, RationalFn> acc;
    for (size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        for (const auto& [c, v] : m.rows[j]) {
            RationalFn& slot = acc[c];
            slot += coeffs[j] * RationalFn(v);
            if (slot.is_zero()) acc.erase(c);
        }
    }
    return acc;
}

}  // namespace

Certificate SpanSolver::membership(const SparseRow& target) const {
    SparseRow r = target;
    RationalFn scalar(1);
    std::map<int, RationalFn> combo;
    impl_->reduce(r, scalar, combo);

    Certificate cert;
    cert.member = r.empty();
    cert.coeffs.assign(impl_->matrix.rows.size(), RationalFn());
    for (const auto& [j, v] : combo) cert.coeffs[j] = v / scalar;
    for (const auto& [c, v] : r) cert.residual[c] = RationalFn(v) / scalar;
    cert.all_laurent = true;
    for (const RationalFn& c : cert.coeffs)
        if (!c.is_laurent()) cert.all_laurent = false;

    // Exact re-multiplication check of the certificate identity.
    std::map<int, RationalFn> acc = evaluate_combination(cert.coeffs, impl_->matrix);
    for (const auto& [c, v] : cert.residual) {
        RationalFn& slot = acc[c];
        slot += v;
        if (slot.is_zero()) acc.erase(c);
    }
    std::map<int, RationalFn> want;
    for (const auto& [c, v] : target) want[c] = RationalFn(v);
    if (acc != want) throw std::logic_error("certificate verification failed");
    return cert;
}

ZResult SpanSolver::z_decision(const SparseRow& target) const {
    ZResult out;
    Certificate qa = membership(target);
    if (!qa.member) {
        out.decision = ZDecision::non_member;
        out.note = "no certificate exists over Q(A)";
        return out;
    }
    if (qa.all_laurent) {
        out.decision = ZDecision::member;
        out.certificate = qa;
        return out;
    }
    if (rows_independent()) {
        out.decision = ZDecision::non_member;
        out.certificate = qa;
        out.note = "rows are independent over Q(A) and the unique certificate is not Laurent";
        return out;
    }
    // Dependent rows: rows that are unit multiples of each other span the
    // same lattice as a single representative, and a row that is a Laurent
    // multiple of another is redundant.  If the surviving representatives
    // are independent, the certificate over them is unique and decides
    // membership over Z[A^+-1].
    const RelationMatrix& m = impl_->matrix;
    const Impl::Classes& cls = impl_->unit_classes();
    auto widen = [&](const Certificate& rc) {
        Certificate cert;
        cert.member = rc.member;
        cert.all_laurent = rc.all_laurent;
        cert.residual = rc.residual;
        cert.coeffs.assign(m.rows.size(), RationalFn());
        for (size_t r = 0; r < cls.rep_rows.size(); ++r) cert.coeffs[cls.rep_rows[r]] = rc.coeffs[r];
        return cert;
    };
    if (cls.solver->rows_independent()) {
        Certificate rc = cls.solver->membership(target);
        Certificate cert = widen(rc);
        if (!rc.member) throw std::logic_error("representative span lost the target");
        out.certificate = cert;
        if (rc.all_laurent) {
            out.decision = ZDecision::member;
            out.note = "Laurent certificate over the unit-class representatives";
        } else {
            out.decision = ZDecision::non_member;
            out.note =
                "unit-proportionality class representatives are independent over Q(A) and "
                "their unique certificate is not Laurent";
        }
        return out;
    }
    // Representatives still dependent.  A target that is an exact Laurent
    // multiple of a single representative is decided immediately.
    for (size_t jr = 0; jr < cls.rep_rows.size(); ++jr) {
        const SparseRow& row = m.rows[cls.rep_rows[jr]];
        auto it = target.find(row.begin()->first);
        if (it == target.end()) continue;
        auto q = it->second.divided_exactly_by(row.begin()->second);
        if (!q) continue;
        if (scaled_diff(Laurent(1), target, *q, row).empty()) {
            Certificate cert;
            cert.member = true;
            cert.all_laurent = true;
            cert.coeffs.assign(m.rows.size(), RationalFn());
            cert.coeffs[cls.rep_rows[jr]] = RationalFn(*q);
            out.decision = ZDecision::member;
            out.certificate = cert;
            out.note = "target is an exact multiple of one generator";
            return out;
        }
    }
    // Greedy exact-division reduction.
    SparseRow r = target;
    std::map<size_t, Laurent> acc;
    const size_t max_passes = cls.rep_rows.size() + 8;
    for (size_t pass = 0; pass < max_passes && !r.empty(); ++pass) {
        bool changed = false;
        for (size_t jr = 0; jr < cls.rep_rows.size(); ++jr) {
            const SparseRow& row = m.rows[cls.rep_rows[jr]];
            int lead = row.begin()->first;
            auto it = r.find(lead);
            if (it == r.end()) continue;
            auto q = it->second.divided_exactly_by(row.begin()->second);
            if (!q) continue;
            r = scaled_diff(Laurent(1), r, *q, row);
            Laurent& slot = acc[jr];
            slot += *q;
            if (slot.is_zero()) acc.erase(jr);
            changed = true;
        }
        if (!changed) break;
    }
    if (r.empty()) {
        Certificate cert;
        cert.member = true;
        cert.all_laurent = true;
        cert.coeffs.assign(m.rows.size(), RationalFn());
        for (const auto& [jr, v] : acc) cert.coeffs[cls.rep_rows[jr]] = RationalFn(v);
        std::map<int, RationalFn> check = evaluate_combination(cert.coeffs, m);
        std::map<int, RationalFn> want;
        for (const auto& [c, v] : target) want[c] = RationalFn(v);
        if (check != want) throw std::logic_error("greedy certificate verification failed");
        out.decision = ZDecision::member;
        out.certificate = cert;
        out.note = "Laurent certificate found by exact-division reduction";
        return out;
    }
    out.decision = ZDecision::undecided;
    out.certificate = qa;
    out.note =
        "member over Q(A); representatives stay dependent and the exact-division "
        "reduction did not produce a Laurent certificate";
    return out;
}

Certificate span_membership(const SparseRow& target, const RelationMatrix& rels) {
    return SpanSolver(rels).membership(target);
}

ZResult z_span_decision(const SparseRow& target, const RelationMatrix& rels) {
    return SpanSolver(rels).z_decision(target);
}

std::string ring_str(Ring r) { return r == Ring::QA ? "Q(A)" : "Z[A^+-1]"; }

std::string verdict_str(CompareVerdict v) {
    switch (v) {
        case CompareVerdict::equal: return "equal";
        case CompareVerdict::left_in_right_only: return "left_in_right_only";
        case CompareVerdict::right_in_left_only: return "right_in_left_only";
        case CompareVerdict::incomparable: return "incomparable";
    }
    return "?";
}

std::string decision_str(ZDecision d) {
    switch (d) {
        case ZDecision::member: return "member";
        case ZDecision::non_member: return "non_member";
        case ZDecision::undecided: return "undecided";
    }
    return "?";
}

CompareReport submodule_compare_with(const RelationMatrix& left, const SpanSolver& left_solver,
                                     const RelationMatrix& right,
                                     const SpanSolver& right_solver, Ring ring) {
    if (left.basis != right.basis)
        throw std::invalid_argument("submodule comparison requires a shared ambient basis");
    CompareReport rep;
    rep.ring = ring;

    auto run = [&](const RelationMatrix& rows, const SpanSolver& solver,
                   std::vector<RowMembership>* out) {
        bool all_member = true;
        for (size_t i = 0; i < rows.rows.size(); ++i) {
            RowMembership rm;
            rm.row_label = rows.row_labels.empty() ? "row " + std::to_string(i)
                                                   : rows.row_labels[i];
            if (ring == Ring::QA) {
                Certificate c = solver.membership(rows.rows[i]);
                rm.decision = c.member ? ZDecision::member : ZDecision::non_member;
                rm.certificate = std::move(c);
            } else {
                ZResult z = solver.z_decision(rows.rows[i]);
                rm.decision = z.decision;
                rm.certificate = std::move(z.certificate);
                if (z.decision == ZDecision::undecided) rep.partial = true;
            }
            if (rm.decision != ZDecision::member) all_member = false;
            out->push_back(std::move(rm));
        }
        return all_member;
    };

    bool l_in_r = run(left, right_solver, &rep.left_rows);
    bool r_in_l = run(right, left_solver, &rep.right_rows);
    if (l_in_r && r_in_l)
        rep.verdict = CompareVerdict::equal;
    else if (l_in_r)
        rep.verdict = CompareVerdict::left_in_right_only;
    else if (r_in_l)
        rep.verdict = CompareVerdict::right_in_left_only;
    else
        rep.verdict = CompareVerdict::incomparable;
    return rep;
}

CompareReport submodule_compare(const RelationMatrix& left, const RelationMatrix& right,
                                Ring ring) {
    SpanSolver left_solver(left), right_solver(right);
    return submodule_compare_with(left, left_solver, right, right_solver, ring);
}

std::vector<Multicurve> collect_curves(const std::vector<const SkeinVector*>& vectors) {
    std::vector<Multicurve> basis;
    for (const SkeinVector* v : vectors)
        for (const auto& [m, c] : v->terms()) basis.push_back(m);
    std::sort(basis.begin(), basis.end());
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    return basis;
}

SparseRow row_from_skein(const SkeinVector& v, const std::vector<Multicurve>& basis) {
    SparseRow r;
    for (const auto& [m, c] : v.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), m);
        if (it == basis.end() || !(*it == m))
            throw std::invalid_argument("multicurve missing from ambient basis");
        r[static_cast<int>(it - basis.begin())] = c;
    }
    return r;
}

SparseRow row_from_element(const TLElement& x, const std::vector<TLDiagram>& basis) {
    SparseRow r;
    for (const auto& [d, c] : x.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), d);
        if (it == basis.end() || !(*it == d))
            throw std::invalid_argument("diagram missing from ambient basis");
        r[static_cast<int>(it - basis.begin())] = c;
    }
    return r;
}

IdealGenerators ideal_I_generators(const Scenario& s, int kmax) {
    if (kmax % 2 != 0) throw std::invalid_argument("kmax must be even");
    const int k = s.k();
    IdealGenerators out;

    std::vector<GluedRow> rows;
    std::vector<Multicurve> seen_tops;
    for (int t = 2; t <= std::min(kmax, k); t += 2) {
        for (const TLDiagram& d : TLDiagram::enumerate(k, k)) {
            if (d.through_count() != t) continue;
            GluedCurves g = glue(s, d);
            if (g.trivial_components > 0) {
                ++out.skipped_trivial;
                continue;
            }
            SlidingRelation rel = slide_relation(d, kUpperPositive);
            SkeinVector glued = rho_star(s, rel.vector);
            if (glued.is_zero()) {
                ++out.skipped_zero;
                continue;
            }
            if (std::find(seen_tops.begin(), seen_tops.end(), g.multicurve) != seen_tops.end()) {
                ++out.skipped_duplicate;
                continue;
            }
            seen_tops.push_back(g.multicurve);
            rows.push_back(GluedRow{word_str(d), t, g.multicurve, std::move(glued)});
        }
    }

    std::vector<const SkeinVector*> vecs;
    for (const GluedRow& r : rows) vecs.push_back(&r.vector);
    out.curve_basis = collect_curves(vecs);
    for (const Multicurve& m : out.curve_basis)
        out.matrix.basis.push_back(m.str(s.puncture_count()));
    for (const GluedRow& r : rows) {
        out.matrix.rows.push_back(row_from_skein(r.vector, out.curve_basis));
        out.matrix.row_labels.push_back("z[" + r.source_word + "] (t=" +
                                        std::to_string(r.through) + ")");
    }
    out.rows = std::move(rows);
    return out;
}

ConjectureReport conjecture_evidence(int k, const std::vector<Scenario>& scenarios) {
    ConjectureReport rep;
    rep.k = k;

    std::vector<SlidingRelation> full = relation_set(k, all_variants(), 2);
    std::vector<SlidingRelation> reduced;
    reduced.push_back(slide_relation(TLDiagram::identity(k), kUpperPositive));
    for (const SlidingRelation& r : full)
        if (r.source.through_count() < k) reduced.push_back(r);

    auto label_of = [](const SlidingRelation& r) {
        return word_str(r.source) + " " + variant_str(r.variant);
    };

    // Temperley-Lieb level.
    {
        std::vector<TLDiagram> basis = TLDiagram::enumerate(k, k);
        RelationMatrix mfull, mred;
        for (const TLDiagram& d : basis) {
            mfull.basis.push_back(word_str(d));
            mred.basis.push_back(word_str(d));
        }
        for (const SlidingRelation& r : full) {
            mfull.rows.push_back(row_from_element(r.vector, basis));
            mfull.row_labels.push_back(label_of(r));
        }
        for (const SlidingRelation& r : reduced) {
            mred.rows.push_back(row_from_element(r.vector, basis));
            mred.row_labels.push_back(label_of(r));
        }
        SpanSolver full_solver(mfull), red_solver(mred);
        ConjectureComparison cmp;
        cmp.level = "tl";
        cmp.full_rows = mfull.rows.size();
        cmp.reduced_rows = mred.rows.size();
        cmp.qa = submodule_compare_with(mfull, full_solver, mred, red_solver, Ring::QA);
        cmp.za = submodule_compare_with(mfull, full_solver, mred, red_solver, Ring::ZA);
        rep.comparisons.push_back(std::move(cmp));
    }

    // Glued levels.
    for (const Scenario& s : scenarios) {
        if (s.k() != k)
            throw std::invalid_argument("scenario '" + s.name() + "' has k = " +
                                        std::to_string(s.k()) + ", expected " +
                                        std::to_string(k));
        std::vector<std::pair<std::string, SkeinVector>> gfull, gred;
        for (const SlidingRelation& r : full) {
            SkeinVector v = rho_star(s, r.vector);
            if (!v.is_zero()) gfull.emplace_back(label_of(r), std::move(v));
        }
        for (const SlidingRelation& r : reduced) {
            SkeinVector v = rho_star(s, r.vector);
            if (!v.is_zero()) gred.emplace_back(label_of(r), std::move(v));
        }
        std::vector<const SkeinVector*> vecs;
        for (const auto& [l, v] : gfull) vecs.push_back(&v);
        for (const auto& [l, v] : gred) vecs.push_back(&v);
        std::vector<Multicurve> basis = collect_curves(vecs);
        RelationMatrix mfull, mred;
        for (const Multicurve& m : basis) {
            mfull.basis.push_back(m.str(s.puncture_count()));
            mred.basis.push_back(m.str(s.puncture_count()));
        }
        for (const auto& [l, v] : gfull) {
            mfull.rows.push_back(row_from_skein(v, basis));
            mfull.row_labels.push_back(l);
        }
        for (const auto& [l, v] : gred) {
            mred.rows.push_back(row_from_skein(v, basis));
            mred.row_labels.push_back(l);
        }
        SpanSolver full_solver(mfull), red_solver(mred);
        ConjectureComparison cmp;
        cmp.level = s.name();
        cmp.full_rows = mfull.rows.size();
        cmp.reduced_rows = mred.rows.size();
        cmp.qa = submodule_compare_with(mfull, full_solver, mred, red_solver, Ring::QA);
        cmp.za = submodule_compare_with(mfull, full_solver, mred, red_solver, Ring::ZA);
        rep.comparisons.push_back(std::move(cmp));
    }
    return rep;
}

}  // namespace skein
