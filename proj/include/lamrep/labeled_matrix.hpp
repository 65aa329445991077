#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamrep/jordan.hpp"
#include "lamrep/partition.hpp"
#include "lamrep/rep_triple.hpp"
#include "lamrep/truncpoly.hpp"

namespace lamrep {

// dim soc^2 Hom(J_k, J_l) = min(2, k, l).
inline int soc2_hom_dim(int k, int l) {
    if (k < 1 || l < 1) throw Error("soc2_hom_dim: block sizes must be >= 1");
    return std::min(2, std::min(k, l));
}

// Degrees that may carry a nonzero coefficient in an entry J_k -> J_l of
// soc^2 Hom: a scalar if l = 1, aT^{l-1} if k = 1, and aT^{l-1} + bT^{l-2}
// otherwise.
inline std::vector<int> soc2_legal_degrees(int k, int l) {
    if (l == 1) return {0};
    if (k == 1) return {l - 1};
    return {l - 2, l - 1};
}

// Exponent of the general entry "T^*" in a row labeled J_l, column labeled
// J_k: l-1 when k = 1, else l-2 (0 when l = 1).
inline int general_exponent(int l, int k) {
    if (k == 1) return l - 1;
    return std::max(l - 2, 0);
}

// Matrix over k[T] encoding an element of soc^2 Hom(X, Y) for
// X = (+) J_{p_j} and Y = (+) J_{q_i}.  Row i is labeled J_{q_i}, column j is
// labeled J_{p_j}; the entry at (i, j) lives in k[T]/(T^{q_i}) and satisfies
// the soc^2 degree constraints above.
template <class F>
struct LabeledMatrix {
    F field{};
    Partition row_labels;  // q
    Partition col_labels;  // p
    std::vector<TruncPoly<F>> entries;  // row-major

    LabeledMatrix() = default;
    LabeledMatrix(F f, Partition q, Partition p)
        : field(f), row_labels(std::move(q)), col_labels(std::move(p)) {
        entries.reserve(static_cast<std::size_t>(nrows()) * ncols());
        for (int i = 0; i < nrows(); ++i)
            for (int j = 0; j < ncols(); ++j) entries.emplace_back(f, row_labels[i]);
    }

    int nrows() const { return row_labels.length(); }
    int ncols() const { return col_labels.length(); }
    int d1() const { return col_labels.weight(); }
    int d2() const { return row_labels.weight(); }

    TruncPoly<F>& entry(int i, int j) { return entries[static_cast<std::size_t>(i) * ncols() + j]; }
    const TruncPoly<F>& entry(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * ncols() + j];
    }

    bool operator==(const LabeledMatrix& o) const {
        return row_labels == o.row_labels && col_labels == o.col_labels && entries == o.entries;
    }

    bool is_zero() const {
        for (const auto& e : entries)
            if (!e.is_zero()) return false;
        return true;
    }

    // Checks label ordering, entry moduli, and the soc^2 degree constraints.
    void validate() const {
        row_labels.validate();
        col_labels.validate();
        if (static_cast<std::size_t>(nrows()) * ncols() != entries.size())
            throw ShapeMismatch("labeled matrix entry grid mismatch");
        for (int i = 0; i < nrows(); ++i)
            for (int j = 0; j < ncols(); ++j) {
                const TruncPoly<F>& e = entry(i, j);
                if (e.modulus != row_labels[i])
                    throw ShapeMismatch("entry modulus differs from row label");
                auto legal = soc2_legal_degrees(col_labels[j], row_labels[i]);
                for (int deg = 0; deg < e.modulus; ++deg) {
                    if (e.field.is_zero(e.c[deg])) continue;
                    bool ok = false;
                    for (int l : legal) ok = ok || l == deg;
                    if (!ok)
                        throw Error("entry violates the soc^2 form at degree " +
                                    std::to_string(deg));
                }
            }
    }

    LabeledMatrix submatrix(const std::vector<int>& keep_rows,
                            const std::vector<int>& keep_cols) const {
        std::vector<int> q, p;
        for (int i : keep_rows) q.push_back(row_labels[i]);
        for (int j : keep_cols) p.push_back(col_labels[j]);
        LabeledMatrix s(field, Partition(q, row_labels.bound), Partition(p, col_labels.bound));
        for (std::size_t i = 0; i < keep_rows.size(); ++i)
            for (std::size_t j = 0; j < keep_cols.size(); ++j)
                s.entry(static_cast<int>(i), static_cast<int>(j)) =
                    entry(keep_rows[i], keep_cols[j]);
        return s;
    }

    std::string str() const {
        std::string out;
        for (int i = 0; i < nrows(); ++i) {
            out += "J" + std::to_string(row_labels[i]) + " | ";
            for (int j = 0; j < ncols(); ++j) {
                if (j) out += " , ";
                out += entry(i, j).str();
            }
            out += "\n";
        }
        return out;
    }
};

enum class OpKind { ScaleRow, ScaleCol, AddRow, AddCol };

inline const char* op_kind_name(OpKind k) {
    switch (k) {
        case OpKind::ScaleRow: return "scale_row";
        case OpKind::ScaleCol: return "scale_col";
        case OpKind::AddRow: return "add_row";
        case OpKind::AddCol: return "add_col";
    }
    return "?";
}

// One legal row/column operation, i.e. one elementary element of
// Aut(X) x Aut(Y) in matrix form:
//   ScaleRow/ScaleCol: multiply by a unit of k[T]/(T^label);
//   AddRow:  row_target += coeff * row_source, coeff in Hom(J_src, J_tgt),
//            i.e. ord(coeff) >= tgt - src when tgt > src;
//   AddCol:  col_target += col_source * coeff, coeff in Hom(J_tgt, J_src),
//            i.e. ord(coeff) >= src - tgt when src > tgt.
template <class F>
struct RowColOp {
    OpKind kind;
    int target = 0;
    int source = -1;  // unused for scales
    TruncPoly<F> coeff;
};

// Applies one operation, enforcing legality.  The result stays inside
// soc^2 Hom with unchanged labels.
template <class F>
LabeledMatrix<F> apply_op(const LabeledMatrix<F>& m, const RowColOp<F>& op) {
    using Kind = OpKind;
    LabeledMatrix<F> r = m;
    const auto check_index = [](int idx, int n, const char* what) {
        if (idx < 0 || idx >= n) throw IllegalOperation(std::string("bad ") + what + " index");
    };
    switch (op.kind) {
        case Kind::ScaleRow: {
            check_index(op.target, m.nrows(), "row");
            const int l = m.row_labels[op.target];
            if (op.coeff.modulus != l) throw IllegalOperation("scale coefficient modulus mismatch");
            if (!op.coeff.is_unit()) throw IllegalOperation("row scaling by a non-unit");
            for (int j = 0; j < m.ncols(); ++j)
                r.entry(op.target, j) = op.coeff.mul_mod(m.entry(op.target, j), l);
            break;
        }
        case Kind::ScaleCol: {
            check_index(op.target, m.ncols(), "column");
            const int k = m.col_labels[op.target];
            if (op.coeff.modulus != k) throw IllegalOperation("scale coefficient modulus mismatch");
            if (!op.coeff.is_unit()) throw IllegalOperation("column scaling by a non-unit");
            for (int i = 0; i < m.nrows(); ++i)
                r.entry(i, op.target) =
                    m.entry(i, op.target).mul_mod(op.coeff, m.row_labels[i]);
            break;
        }
        case Kind::AddRow: {
            check_index(op.target, m.nrows(), "row");
            check_index(op.source, m.nrows(), "row");
            if (op.target == op.source) throw IllegalOperation("row added to itself");
            const int tgt = m.row_labels[op.target], src = m.row_labels[op.source];
            if (op.coeff.modulus != tgt) throw IllegalOperation("row coefficient modulus mismatch");
            if (tgt > src && op.coeff.order() < tgt - src)
                throw IllegalOperation("row coefficient needs a factor T^" +
                                       std::to_string(tgt - src));
            for (int j = 0; j < m.ncols(); ++j) {
                auto delta = op.coeff.mul_mod(m.entry(op.source, j), tgt);
                r.entry(op.target, j) = m.entry(op.target, j) + delta;
            }
            break;
        }
        case Kind::AddCol: {
            check_index(op.target, m.ncols(), "column");
            check_index(op.source, m.ncols(), "column");
            if (op.target == op.source) throw IllegalOperation("column added to itself");
            const int tgt = m.col_labels[op.target], src = m.col_labels[op.source];
            if (op.coeff.modulus != src)
                throw IllegalOperation("column coefficient modulus mismatch");
            if (src > tgt && op.coeff.order() < src - tgt)
                throw IllegalOperation("column coefficient needs a factor T^" +
                                       std::to_string(src - tgt));
            for (int i = 0; i < m.nrows(); ++i) {
                auto delta = m.entry(i, op.source).mul_mod(op.coeff, m.row_labels[i]);
                r.entry(i, op.target) = m.entry(i, op.target) + delta;
            }
            break;
        }
    }
    r.validate();
    return r;
}

// Random element of soc^2 Hom with the given labels: every legal coefficient
// is drawn independently, uniformly over all of F_p, or over the nonzero
// integers in [-100, 100] for Q (a Zariski-generic sampler; zero draws over
// the infinite field would only manufacture artificial non-general points).
template <class F>
LabeledMatrix<F> sample_soc2(F f, const Partition& q, const Partition& p, Rng& rng) {
    LabeledMatrix<F> m(f, q, p);
    for (int i = 0; i < m.nrows(); ++i)
        for (int j = 0; j < m.ncols(); ++j)
            for (int deg : soc2_legal_degrees(p[j], q[i])) {
                if constexpr (F::prime_field) {
                    m.entry(i, j).c[deg] = rng.below(f.p);
                } else {
                    const long v = 1 + static_cast<long>(rng.below(200));
                    m.entry(i, j).c[deg] = f.from_int(v <= 100 ? v : 100 - v);
                }
            }
    return m;
}

// Expansion into an explicit representation: A, B block-diagonal lower-shift
// nilpotents of types p, q and C the scalar matrix of the entries in the
// cyclic bases {1, T, ..., T^{k-1}} of each block.
template <class F>
RepTriple<F> labeled_to_triple(const LabeledMatrix<F>& m, int alg_m, int alg_n) {
    m.validate();
    if (m.col_labels.max_part() > alg_m || m.row_labels.max_part() > alg_n)
        throw PartExceedsBound("label exceeds the algebra's nilpotency bound");
    const F f = m.field;
    const int d1 = m.d1(), d2 = m.d2();
    Mat<F> a = jordan_of_type(f, m.col_labels.parts);
    Mat<F> b = jordan_of_type(f, m.row_labels.parts);
    Mat<F> cmat(f, d2, d1);
    int roff = 0;
    for (int i = 0; i < m.nrows(); ++i) {
        const int l = m.row_labels[i];
        int coff = 0;
        for (int j = 0; j < m.ncols(); ++j) {
            const int k = m.col_labels[j];
            const TruncPoly<F>& g = m.entry(i, j);
            // T^s maps the basis vector T^u of J_k to T^{s+u} in J_l.
            for (int s = 0; s < l; ++s) {
                if (f.is_zero(g.c[s])) continue;
                for (int u = 0; u < k && s + u < l; ++u) cmat.at(roff + s + u, coff + u) = g.c[s];
            }
            coff += k;
        }
        roff += l;
    }
    return RepTriple<F>(alg_m, alg_n, std::move(a), std::move(b), std::move(cmat));
}

// Inverse direction: Jordan bases for A and B are computed by kernel
// filtration, and C is re-read as a labeled matrix in those bases.
template <class F>
LabeledMatrix<F> triple_to_labeled(const RepTriple<F>& r) {
    r.require_shapes();
    if (!check_relations(r)) throw RelationViolation("triple does not satisfy the relations");
    const F f = r.field();
    JordanBasis<F> ja = jordan_basis(r.A);
    JordanBasis<F> jb = jordan_basis(r.B);
    auto c_new = solve_matrix(jb.g, r.C * ja.g);
    if (!c_new) throw Error("jordan basis was singular");  // cannot happen

    Partition p(ja.type.parts, r.m), q(jb.type.parts, r.n);
    LabeledMatrix<F> m(f, q, p);
    int roff = 0;
    for (int i = 0; i < m.nrows(); ++i) {
        const int l = q[i];
        int coff = 0;
        for (int j = 0; j < m.ncols(); ++j) {
            const int k = p[j];
            TruncPoly<F> g(f, l);
            for (int s = 0; s < l; ++s) g.c[s] = c_new->at(roff + s, coff);
            // consistency of the whole block with the polynomial read off
            // from its first column
            for (int u = 0; u < k; ++u)
                for (int s = 0; s < l; ++s) {
                    const auto& val = c_new->at(roff + s, coff + u);
                    const auto expect = s >= u ? g.c[s - u] : f.zero();
                    if (!f.eq(val, expect))
                        throw Error("C is not a module homomorphism in the computed bases");
                }
            m.entry(i, j) = std::move(g);
            coff += k;
        }
        roff += l;
    }
    m.validate();
    return m;
}

// Transpose duality at the labeled level: labels swap and each entry
// f in Hom(J_k, J_l) becomes its dual in Hom(J_l, J_k), which in the reversed
// dual bases is the coefficient shift  delta_t = gamma_{t + l - k}.
// An involution; matches dual_triple up to base change.
template <class F>
LabeledMatrix<F> transpose_labeled(const LabeledMatrix<F>& m) {
    const F f = m.field;
    LabeledMatrix<F> t(f, m.col_labels, m.row_labels);
    for (int i = 0; i < m.nrows(); ++i) {
        const int l = m.row_labels[i];
        for (int j = 0; j < m.ncols(); ++j) {
            const int k = m.col_labels[j];
            const TruncPoly<F>& g = m.entry(i, j);
            TruncPoly<F> d(f, k);
            for (int tdeg = 0; tdeg < k; ++tdeg) {
                const int src = tdeg + l - k;
                if (src >= 0 && src < l) d.c[tdeg] = g.c[src];
            }
            t.entry(j, i) = std::move(d);
        }
    }
    t.validate();
    return t;
}

// Row/column swaps between equally labeled lines are realized by four legal
// operations: x += y; y -= x; x += y; scale y by -1.
template <class F>
std::vector<RowColOp<F>> swap_ops_same_label(const LabeledMatrix<F>& m, bool rows, int i, int j) {
    using Op = RowColOp<F>;
    const F f = m.field;
    const int li = rows ? m.row_labels[i] : m.col_labels[i];
    const int lj = rows ? m.row_labels[j] : m.col_labels[j];
    if (li != lj) throw IllegalOperation("swap between different labels");
    const OpKind add = rows ? OpKind::AddRow : OpKind::AddCol;
    const OpKind scale = rows ? OpKind::ScaleRow : OpKind::ScaleCol;
    auto one = TruncPoly<F>::constant(f, li, f.one());
    auto minus_one = TruncPoly<F>::constant(f, li, f.neg(f.one()));
    std::vector<Op> ops;
    ops.push_back(Op{add, i, j, one});
    ops.push_back(Op{add, j, i, minus_one});
    ops.push_back(Op{add, i, j, one});
    ops.push_back(Op{scale, j, -1, minus_one});
    return ops;
}

}  // namespace lamrep
