#pragma once

#include <optional>
#include <vector>

#include "lamrep/strata.hpp"

namespace lamrep {

// Outcome of one reduction/splitting pass.  `steps` act on the full input;
// splitting is bookkeeping at the end: split_rows/split_cols index into the
// input, `result` is the kept block and `summands` the split blocks.
// Replaying the steps must reproduce result (+) summands exactly, with zero
// blocks across the partition; verify_trace checks that.
template <class F>
struct ReductionTrace {
    LabeledMatrix<F> input;
    std::vector<RowColOp<F>> steps;
    LabeledMatrix<F> result;
    std::vector<int> split_rows;
    std::vector<int> split_cols;
    std::vector<LabeledMatrix<F>> summands;
};

namespace detail {

// Applies and records operations, dropping no-ops so that already-reduced
// inputs yield empty traces.
template <class F>
struct OpRecorder {
    LabeledMatrix<F> current;
    std::vector<RowColOp<F>> steps;

    explicit OpRecorder(LabeledMatrix<F> start) : current(std::move(start)) {}

    void apply(const RowColOp<F>& op) {
        const bool is_scale = op.kind == OpKind::ScaleRow || op.kind == OpKind::ScaleCol;
        if (is_scale) {
            TruncPoly<F> one = TruncPoly<F>::constant(op.coeff.field, op.coeff.modulus,
                                                      op.coeff.field.one());
            if (op.coeff == one) return;
        } else if (op.coeff.is_zero()) {
            return;
        }
        current = apply_op(current, op);
        steps.push_back(op);
    }

    void scale_row(int i, TruncPoly<F> u) { apply({OpKind::ScaleRow, i, -1, std::move(u)}); }
    void scale_col(int j, TruncPoly<F> u) { apply({OpKind::ScaleCol, j, -1, std::move(u)}); }
    void add_row(int target, int source, TruncPoly<F> f) {
        apply({OpKind::AddRow, target, source, std::move(f)});
    }
    void add_col(int target, int source, TruncPoly<F> f) {
        apply({OpKind::AddCol, target, source, std::move(f)});
    }
    void swap_lines(bool rows, int i, int j) {
        if (i == j) return;
        for (const auto& op : swap_ops_same_label(current, rows, i, j)) apply(op);
    }
};

// -entry / T^expo as a coefficient with the given modulus.
template <class F>
TruncPoly<F> neg_shifted(const TruncPoly<F>& e, int expo, int modulus) {
    TruncPoly<F> f(e.field, modulus);
    for (int d = expo; d < e.modulus; ++d)
        if (d - expo < modulus) f.c[d - expo] = e.field.neg(e.c[d]);
    return f;
}

// Normalizes the pivot at (row, col) to T^expo by a unit row scale, then
// clears the column above it.  Collateral changes stay left of `col` in the
// not-yet-processed region.
template <class F>
void clear_column_with_tread(OpRecorder<F>& rec, int row, int col, int expo) {
    TruncPoly<F> unit = rec.current.entry(row, col).shifted_down(expo);
    if (!unit.is_unit()) throw Error("tread is not a unit multiple of its power");
    rec.scale_row(row, unit.inverse());
    for (int i = 0; i < row; ++i) {
        const TruncPoly<F>& e = rec.current.entry(i, col);
        if (e.is_zero()) continue;
        rec.add_row(i, row, neg_shifted(e, expo, rec.current.row_labels[i]));
    }
}

// Normalizes the pivot at (row, col) to T^expo by a unit column scale, then
// clears the row to its left.
template <class F>
void clear_row_with_riser(OpRecorder<F>& rec, int row, int col, int expo) {
    const F f = rec.current.field;
    const int k = rec.current.col_labels[col];
    const TruncPoly<F>& pivot = rec.current.entry(row, col);
    TruncPoly<F> unit(f, k);
    for (int d = 0; d < k && expo + d < pivot.modulus; ++d) unit.c[d] = pivot.c[expo + d];
    if (!unit.is_unit()) throw Error("riser is not a unit multiple of its power");
    rec.scale_col(col, unit.inverse());
    for (int c2 = 0; c2 < col; ++c2) {
        const TruncPoly<F>& e = rec.current.entry(row, c2);
        if (e.is_zero()) continue;
        rec.add_col(c2, col, neg_shifted(e, expo, k));
    }
}

// Pivot rescue: find, among the same-label lines at index <= limit, the last
// whose entry at (row, col) has a unit coefficient at T^expo, and swap it
// into position.  Returns false when no candidate exists (the point is not
// general).
template <class F>
bool rescue_pivot(OpRecorder<F>& rec, bool rescue_row, int row, int col, int expo) {
    const F f = rec.current.field;
    const auto coeff_ok = [&](int i, int j) {
        const TruncPoly<F>& e = rec.current.entry(i, j);
        return expo < e.modulus && !f.is_zero(e.c[expo]);
    };
    if (coeff_ok(row, col)) return true;
    if (rescue_row) {
        const int label = rec.current.row_labels[row];
        for (int i = row - 1; i >= 0; --i) {
            if (rec.current.row_labels[i] != label) break;
            if (coeff_ok(i, col)) {
                rec.swap_lines(true, i, row);
                return true;
            }
        }
    } else {
        const int label = rec.current.col_labels[col];
        for (int j = col - 1; j >= 0; --j) {
            if (rec.current.col_labels[j] != label) break;
            if (coeff_ok(row, j)) {
                rec.swap_lines(false, j, col);
                return true;
            }
        }
    }
    return false;
}

}  // namespace detail

// Splits the (1,1)-summand guaranteed at a general point when both label
// partitions have a part of size 1: a nonzero scalar entry in a J_1 row and
// J_1 column is scaled to 1 and its row and column are cleared.
template <class F>
std::optional<ReductionTrace<F>> split_one_one(const LabeledMatrix<F>& m) {
    m.validate();
    if (m.row_labels.min_part() != 1 || m.col_labels.min_part() != 1)
        throw Error("split_one_one requires a part of size 1 on both sides");
    const F f = m.field;
    const int nr = m.nrows(), nc = m.ncols();

    int pr = -1, pc = -1;
    for (int i = nr - 1; i >= 0 && pr < 0; --i) {
        if (m.row_labels[i] != 1) continue;
        for (int j = nc - 1; j >= 0; --j) {
            if (m.col_labels[j] != 1) continue;
            if (!m.entry(i, j).is_zero()) {
                pr = i;
                pc = j;
                break;
            }
        }
    }
    if (pr < 0) return std::nullopt;

    detail::OpRecorder<F> rec(m);
    rec.swap_lines(true, pr, nr - 1);
    rec.swap_lines(false, pc, nc - 1);
    rec.scale_row(nr - 1, rec.current.entry(nr - 1, nc - 1).inverse());
    // row to the left, then the column above (clean since the row is zero)
    for (int j = 0; j < nc - 1; ++j) {
        const TruncPoly<F>& e = rec.current.entry(nr - 1, j);
        if (e.is_zero()) continue;
        rec.add_col(j, nc - 1, TruncPoly<F>::constant(f, 1, f.neg(e.c[0])));
    }
    for (int i = 0; i < nr - 1; ++i) {
        const TruncPoly<F>& e = rec.current.entry(i, nc - 1);
        if (e.is_zero()) continue;
        rec.add_row(i, nr - 1, -e);
    }

    ReductionTrace<F> tr;
    tr.input = m;
    tr.steps = std::move(rec.steps);
    std::vector<int> keep_rows, keep_cols;
    for (int i = 0; i < nr - 1; ++i) keep_rows.push_back(i);
    for (int j = 0; j < nc - 1; ++j) keep_cols.push_back(j);
    tr.result = rec.current.submatrix(keep_rows, keep_cols);
    tr.split_rows = {nr - 1};
    tr.split_cols = {nc - 1};
    tr.summands = {rec.current.submatrix(tr.split_rows, tr.split_cols)};
    return tr;
}

// Splits the minimal-parts summand at a general point:
//  - min(p) = k > 1 and min(q) = l > 1: summand [T^{l-2}] with labels J_l/J_k;
//  - min(p) = 1, some part 2 in p, r = min(q) > 1: summand [T^{r-2}] with
//    labels J_r/J_2.
// The pivot must carry a unit at the minimal legal power; otherwise the point
// is not general and nullopt is returned.
template <class F>
std::optional<ReductionTrace<F>> split_min_parts(const LabeledMatrix<F>& m) {
    m.validate();
    const int nr = m.nrows(), nc = m.ncols();
    const int minp = m.col_labels.min_part(), minq = m.row_labels.min_part();

    int pivot_col_label = 0;
    if (minp > 1 && minq > 1) {
        pivot_col_label = minp;
    } else if (minp == 1 && minq > 1 && m.col_labels.count_part(2) > 0) {
        pivot_col_label = 2;
    } else {
        throw Error("split_min_parts hypotheses not met");
    }
    const int l = minq;
    const int expo = l - 2;

    // last column with the pivot label
    int pc = -1;
    for (int j = nc - 1; j >= 0; --j)
        if (m.col_labels[j] == pivot_col_label) {
            pc = j;
            break;
        }
    const int pr = nr - 1;

    detail::OpRecorder<F> rec(m);
    if (!detail::rescue_pivot(rec, true, pr, pc, expo)) {
        // also try sibling columns of the same label
        if (!detail::rescue_pivot(rec, false, pr, pc, expo)) return std::nullopt;
    }

    TruncPoly<F> unit = rec.current.entry(pr, pc).shifted_down(expo);
    rec.scale_row(pr, unit.inverse());
    // clear the pivot row (both sides), then the pivot column above
    for (int j = 0; j < nc; ++j) {
        if (j == pc) continue;
        const TruncPoly<F>& e = rec.current.entry(pr, j);
        if (e.is_zero()) continue;
        rec.add_col(j, pc, detail::neg_shifted(e, expo, pivot_col_label));
    }
    for (int i = 0; i < pr; ++i) {
        const TruncPoly<F>& e = rec.current.entry(i, pc);
        if (e.is_zero()) continue;
        rec.add_row(i, pr, detail::neg_shifted(e, expo, rec.current.row_labels[i]));
    }

    ReductionTrace<F> tr;
    tr.input = m;
    tr.steps = std::move(rec.steps);
    std::vector<int> keep_rows, keep_cols;
    for (int i = 0; i < nr - 1; ++i) keep_rows.push_back(i);
    for (int j = 0; j < nc; ++j)
        if (j != pc) keep_cols.push_back(j);
    tr.result = rec.current.submatrix(keep_rows, keep_cols);
    tr.split_rows = {pr};
    tr.split_cols = {pc};
    tr.summands = {rec.current.submatrix(tr.split_rows, tr.split_cols)};
    return tr;
}

// Staircase elimination to the normal form M_{p,q}.  Starting from the
// bottom-right corner, treads (scaled by a row unit, clearing their column
// upward) alternate with risers (scaled by a column unit, clearing their row
// leftward) along the two staircase diagonals; each pivot needs a unit
// coefficient at its T^* power, with same-label permutation rescue.
// Returns nullopt (not general) when a pivot cannot be rescued.
template <class F>
std::optional<ReductionTrace<F>> reduce_to_normal_form(const LabeledMatrix<F>& m) {
    m.validate();
    const F f = m.field;
    const int alg_m = m.col_labels.bound, alg_n = m.row_labels.bound;
    if (!is_staircase_shape(alg_m, alg_n, m.col_labels, m.row_labels))
        throw NotCandidate("labels are outside the staircase normal form domain");
    const int nr = m.nrows(), nc = m.ncols();

    detail::OpRecorder<F> rec(m);
    for (int j = 0;; ++j) {
        const int row = nr - 1 - j, col = nc - 1 - j;
        if (row < 0 || col < 0) break;
        const int tread_expo = general_exponent(m.row_labels[row], m.col_labels[col]);
        if (!detail::rescue_pivot(rec, true, row, col, tread_expo)) return std::nullopt;
        detail::clear_column_with_tread(rec, row, col, tread_expo);
        if (col - 1 >= 0) {
            const int riser_expo = general_exponent(m.row_labels[row], m.col_labels[col - 1]);
            if (!detail::rescue_pivot(rec, false, row, col - 1, riser_expo)) return std::nullopt;
            detail::clear_row_with_riser(rec, row, col - 1, riser_expo);
        }
    }

    if (!(rec.current == normal_form(f, alg_m, alg_n, m.col_labels, m.row_labels)))
        throw Error("staircase elimination did not reach the normal form");  // engine bug

    ReductionTrace<F> tr;
    tr.input = m;
    tr.steps = std::move(rec.steps);
    tr.result = rec.current;
    return tr;
}

// On a normal form M_{p,q} with a repeated part, splits off the 1x1 summand
// M_{(p_r),(q_s)}: the riser of column r clears the tread of column r+1 (or
// symmetrically for a repeat in q), one more transvection isolates the cell,
// and unit scalings restore the exact signs of M_{ptilde,qtilde}.
template <class F>
ReductionTrace<F> split_repeated_parts(const LabeledMatrix<F>& m) {
    m.validate();
    const F f = m.field;
    const int alg_m = m.col_labels.bound, alg_n = m.row_labels.bound;
    const Partition& p = m.col_labels;
    const Partition& q = m.row_labels;
    if (!(m == normal_form(f, alg_m, alg_n, p, q)))
        throw Error("split_repeated_parts expects the staircase normal form");
    const int nr = m.nrows(), nc = m.ncols();
    const int delta = nc - nr;

    int rep_col = -1, rep_row = -1;
    for (int r = nc - 2; r >= 0; --r)
        if (p[r] == p[r + 1]) {
            rep_col = r;
            break;
        }
    if (rep_col < 0)
        for (int s = nr - 2; s >= 0; --s)
            if (q[s] == q[s + 1]) {
                rep_row = s;
                break;
            }
    if (rep_col < 0 && rep_row < 0) throw NoRepeatedPart("both partitions are multiplicity-free");

    detail::OpRecorder<F> rec(m);
    int srow, scol;  // the cell that splits off
    if (rep_col >= 0) {
        const int r = rep_col;
        srow = r - delta + 1;  // row of the riser of column r
        if (srow < 0 || srow >= nr)
            throw Error("repeated part sits in a zero column; nothing to split");
        scol = r;
        // riser of column r clears the tread of column r+1 (same row)
        rec.add_col(r + 1, r, TruncPoly<F>::constant(f, p[r], f.neg(f.one())));
        // tread of column r (one row up) is cleared by the riser's row
        if (srow - 1 >= 0) {
            TruncPoly<F> coeff =
                TruncPoly<F>::monomial(f, q[srow - 1], q[srow - 1] - q[srow], f.neg(f.one()));
            rec.add_row(srow - 1, srow, coeff);
        }
    } else {
        const int s = rep_row;
        srow = s;
        scol = s + delta;  // column of the tread of row s
        if (scol < 0 || scol >= nc)
            throw Error("repeated part sits in a zero row; nothing to split");
        // tread of row s clears the riser of row s+1 (same column)
        rec.add_row(s + 1, s, TruncPoly<F>::constant(f, q[s + 1], f.neg(f.one())));
        // riser of row s (one column left) is cleared through its column
        if (scol - 1 >= 0)
            rec.add_col(scol - 1, scol, TruncPoly<F>::constant(f, p[scol], f.neg(f.one())));
    }

    std::vector<int> keep_rows, keep_cols;
    for (int i = 0; i < nr; ++i)
        if (i != srow) keep_rows.push_back(i);
    for (int j = 0; j < nc; ++j)
        if (j != scol) keep_cols.push_back(j);

    // sign normalization along the staircase path of the remaining block:
    // fix the first tread through its column, later treads through their row,
    // risers through their column; each scaling flips at most the next cell.
    Partition pt(rec.current.submatrix(keep_rows, keep_cols).col_labels.parts, alg_m);
    Partition qt(rec.current.submatrix(keep_rows, keep_cols).row_labels.parts, alg_n);
    const int tnr = qt.length(), tnc = pt.length();
    for (int j = 0;; ++j) {
        const int row = tnr - 1 - j, col = tnc - 1 - j;
        if (row < 0 || col < 0) break;
        const int full_row = keep_rows[row], full_col = keep_cols[col];
        const int texpo = general_exponent(qt[row], pt[col]);
        const auto& tval = rec.current.entry(full_row, full_col);
        if (texpo < tval.modulus && f.eq(tval.c[texpo], f.neg(f.one()))) {
            if (j == 0)
                rec.scale_col(full_col,
                              TruncPoly<F>::constant(f, pt[col], f.neg(f.one())));
            else
                rec.scale_row(full_row,
                              TruncPoly<F>::constant(f, qt[row], f.neg(f.one())));
        }
        if (col - 1 >= 0) {
            const int rexpo = general_exponent(qt[row], pt[col - 1]);
            const auto& rval = rec.current.entry(full_row, keep_cols[col - 1]);
            if (rexpo < rval.modulus && f.eq(rval.c[rexpo], f.neg(f.one())))
                rec.scale_col(keep_cols[col - 1],
                              TruncPoly<F>::constant(f, pt[col - 1], f.neg(f.one())));
        }
    }

    ReductionTrace<F> tr;
    tr.input = m;
    tr.steps = std::move(rec.steps);
    tr.result = rec.current.submatrix(keep_rows, keep_cols);
    tr.split_rows = {srow};
    tr.split_cols = {scol};
    tr.summands = {rec.current.submatrix(tr.split_rows, tr.split_cols)};

    if (!(tr.result == normal_form(f, alg_m, alg_n, pt, qt)))
        throw Error("repeated-part split did not reach the smaller normal form");  // engine bug
    return tr;
}

// Replays a trace: applies the recorded steps to the input and checks the
// block decomposition (kept block equals result, split blocks equal the
// summands, mixed blocks vanish).
template <class F>
bool verify_trace(const ReductionTrace<F>& tr) {
    LabeledMatrix<F> cur = tr.input;
    for (const auto& op : tr.steps) cur = apply_op(cur, op);
    std::vector<bool> row_split(cur.nrows(), false), col_split(cur.ncols(), false);
    for (int i : tr.split_rows) row_split[i] = true;
    for (int j : tr.split_cols) col_split[j] = true;
    for (int i = 0; i < cur.nrows(); ++i)
        for (int j = 0; j < cur.ncols(); ++j)
            if (row_split[i] != col_split[j] && !cur.entry(i, j).is_zero()) return false;
    std::vector<int> keep_rows, keep_cols;
    for (int i = 0; i < cur.nrows(); ++i)
        if (!row_split[i]) keep_rows.push_back(i);
    for (int j = 0; j < cur.ncols(); ++j)
        if (!col_split[j]) keep_cols.push_back(j);
    if (!(cur.submatrix(keep_rows, keep_cols) == tr.result)) return false;
    if (!tr.summands.empty() &&
        !(cur.submatrix(tr.split_rows, tr.split_cols) == tr.summands.front()))
        return false;
    return true;
}

}  // namespace lamrep
