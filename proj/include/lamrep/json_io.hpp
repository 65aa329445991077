#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "lamrep/classify.hpp"
#include "lamrep/endo.hpp"
#include "lamrep/local_family.hpp"
#include "lamrep/reduction.hpp"

namespace lamrep {

using Json = nlohmann::ordered_json;

// --- scalars ---------------------------------------------------------------

inline Json scalar_to_json(const RationalField& f, const Rat& x) { return f.str(x); }
inline Json scalar_to_json(const PrimeField&, PrimeField::Elem x) { return x; }

template <class F>
typename F::Elem scalar_from_json(const F& f, const Json& j) {
    if (j.is_string()) return f.parse(j.template get<std::string>());
    if (j.is_number_integer()) return f.from_int(j.template get<long>());
    throw Error("expected a scalar (string or integer)");
}

// --- field spec --------------------------------------------------------------

Json to_json(const FieldSpec& fs);
FieldSpec field_spec_from_json(const Json& j);

// --- matrices ----------------------------------------------------------------

template <class F>
Json matrix_to_json(const Mat<F>& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(scalar_to_json(m.field, m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class F>
Mat<F> matrix_from_json(const F& f, const Json& j, int expect_rows = -1, int expect_cols = -1) {
    if (!j.is_array()) throw Error("expected a matrix (array of arrays)");
    const int rows = static_cast<int>(j.size());
    int cols = expect_cols;
    if (rows > 0) cols = static_cast<int>(j.at(0).size());
    if (cols < 0) cols = 0;
    Mat<F> m(f, rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j.at(r).size()) != cols) throw Error("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m.at(r, c) = scalar_from_json(f, j.at(r).at(c));
    }
    if (expect_rows >= 0 && rows != expect_rows) throw Error("matrix row count mismatch");
    if (expect_cols >= 0 && cols != expect_cols) throw Error("matrix column count mismatch");
    return m;
}

// --- truncated polynomials / labeled matrices --------------------------------

template <class F>
Json trunc_poly_to_json(const TruncPoly<F>& t) {
    Json coeffs = Json::array();
    for (int i = 0; i < t.modulus; ++i) coeffs.push_back(t.field.str(t.c[i]));
    return Json{{"coeffs", std::move(coeffs)}};
}

template <class F>
TruncPoly<F> trunc_poly_from_json(const F& f, const Json& j, int modulus) {
    const Json& coeffs = j.is_object() ? j.at("coeffs") : j;
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != modulus)
        throw Error("coefficient list does not match the row label");
    TruncPoly<F> t(f, modulus);
    for (int i = 0; i < modulus; ++i) {
        const Json& c = coeffs.at(i);
        t.c[i] = c.is_string() ? f.parse(c.template get<std::string>())
                               : f.from_int(c.template get<long>());
    }
    return t;
}

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j, int bound = 0);

template <class F>
Json labeled_to_json(const LabeledMatrix<F>& m) {
    Json entries = Json::array();
    for (int i = 0; i < m.nrows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.ncols(); ++j) row.push_back(trunc_poly_to_json(m.entry(i, j)));
        entries.push_back(std::move(row));
    }
    return Json{{"row_labels", to_json(m.row_labels)},
                {"col_labels", to_json(m.col_labels)},
                {"entries", std::move(entries)},
                {"field", to_json(m.field.spec())}};
}

template <class F>
LabeledMatrix<F> labeled_from_json_typed(const F& f, const Json& j) {
    Partition q = partition_from_json(j.at("row_labels"));
    Partition p = partition_from_json(j.at("col_labels"));
    if (j.contains("row_bound")) q = Partition(q.parts, j.at("row_bound").get<int>());
    if (j.contains("col_bound")) p = Partition(p.parts, j.at("col_bound").get<int>());
    LabeledMatrix<F> m(f, q, p);
    const Json& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != m.nrows()) throw Error("entry grid row mismatch");
    for (int i = 0; i < m.nrows(); ++i) {
        if (static_cast<int>(entries.at(i).size()) != m.ncols())
            throw Error("entry grid column mismatch");
        for (int c = 0; c < m.ncols(); ++c)
            m.entry(i, c) = trunc_poly_from_json(f, entries.at(i).at(c), m.row_labels[i]);
    }
    m.validate();
    return m;
}

template <class F>
Json triple_to_json(const RepTriple<F>& r) {
    return Json{{"m", r.m},
                {"n", r.n},
                {"A", matrix_to_json(r.A)},
                {"B", matrix_to_json(r.B)},
                {"C", matrix_to_json(r.C)},
                {"field", to_json(r.A.field.spec())}};
}

template <class F>
RepTriple<F> triple_from_json_typed(const F& f, const Json& j) {
    RepTriple<F> r;
    r.m = j.at("m").get<int>();
    r.n = j.at("n").get<int>();
    r.A = matrix_from_json(f, j.at("A"));
    r.B = matrix_from_json(f, j.at("B"));
    r.C = matrix_from_json(f, j.at("C"));
    r.require_shapes();
    return r;
}

// --- dynamic (field read from the document) ----------------------------------

using AnyLabeled = std::variant<LabeledMatrix<RationalField>, LabeledMatrix<PrimeField>>;
using AnyTriple = std::variant<RepTriple<RationalField>, RepTriple<PrimeField>>;

AnyLabeled labeled_from_json(const Json& j, std::optional<FieldSpec> override_field = {});
AnyTriple triple_from_json(const Json& j, std::optional<FieldSpec> override_field = {});

// --- operations / traces ------------------------------------------------------

template <class F>
Json op_to_json(const RowColOp<F>& op) {
    Json j{{"kind", op_kind_name(op.kind)}, {"target", op.target}};
    if (op.kind == OpKind::AddRow || op.kind == OpKind::AddCol) j["source"] = op.source;
    j["coeff"] = trunc_poly_to_json(op.coeff);
    return j;
}

template <class F>
RowColOp<F> op_from_json(const F& f, const Json& j, const LabeledMatrix<F>& context) {
    const std::string kind = j.at("kind").get<std::string>();
    RowColOp<F> op;
    op.target = j.at("target").get<int>();
    if (kind == "scale_row")
        op.kind = OpKind::ScaleRow;
    else if (kind == "scale_col")
        op.kind = OpKind::ScaleCol;
    else if (kind == "add_row")
        op.kind = OpKind::AddRow;
    else if (kind == "add_col")
        op.kind = OpKind::AddCol;
    else
        throw Error("unknown operation kind: " + kind);
    if (op.kind == OpKind::AddRow || op.kind == OpKind::AddCol)
        op.source = j.at("source").get<int>();
    // coefficient modulus: target row / target col / target row label /
    // source col label, per the operation calculus
    int modulus = 0;
    switch (op.kind) {
        case OpKind::ScaleRow: modulus = context.row_labels[op.target]; break;
        case OpKind::ScaleCol: modulus = context.col_labels[op.target]; break;
        case OpKind::AddRow: modulus = context.row_labels[op.target]; break;
        case OpKind::AddCol: modulus = context.col_labels[op.source]; break;
    }
    op.coeff = trunc_poly_from_json(f, j.at("coeff"), modulus);
    return op;
}

// Rebuilds a trace from its serialized form and replays the steps so the
// caller gets a verified object (throws if the recorded blocks do not match).
template <class F>
ReductionTrace<F> trace_from_json(const F& f, const Json& j) {
    ReductionTrace<F> tr;
    tr.input = labeled_from_json_typed(f, j.at("input"));
    for (const auto& s : j.at("steps")) tr.steps.push_back(op_from_json(f, s, tr.input));
    tr.result = labeled_from_json_typed(f, j.at("result"));
    tr.split_rows = j.at("split_rows").get<std::vector<int>>();
    tr.split_cols = j.at("split_cols").get<std::vector<int>>();
    for (const auto& s : j.at("summands"))
        tr.summands.push_back(labeled_from_json_typed(f, s.at("matrix")));
    if (!verify_trace(tr)) throw Error("serialized trace does not replay to its result");
    return tr;
}

template <class F>
Json trace_to_json(const ReductionTrace<F>& tr) {
    Json steps = Json::array();
    for (const auto& op : tr.steps) steps.push_back(op_to_json(op));
    Json summands = Json::array();
    for (const auto& s : tr.summands)
        summands.push_back(Json{{"dim_vector", Json::array({s.d1(), s.d2()})},
                                {"matrix", labeled_to_json(s)}});
    return Json{{"input", labeled_to_json(tr.input)},
                {"steps", std::move(steps)},
                {"result", labeled_to_json(tr.result)},
                {"split_rows", tr.split_rows},
                {"split_cols", tr.split_cols},
                {"summands", std::move(summands)}};
}

template <class F>
Json endo_to_json(const EndoSpace<F>& e) {
    Json basis = Json::array();
    for (const auto& [pm, qm] : e.basis)
        basis.push_back(Json{{"P", matrix_to_json(pm)}, {"Q", matrix_to_json(qm)}});
    Json j{{"dim", e.dim}};
    j["dim_top"] = e.dim_top ? Json(*e.dim_top) : Json(nullptr);
    j["is_local"] = e.is_local ? Json(*e.is_local) : Json(nullptr);
    j["basis"] = std::move(basis);
    return j;
}

Json to_json(const Stratum& s);
Json to_json(const DegenerationReport& r);
Json to_json(const LocalTangentReport& r, int loops, const std::vector<Rat>& lambda);
Json entry_to_json(const ReportEntry& e);
Json to_json(const ClassificationReport& r);

std::string report_to_csv(const ClassificationReport& r);
std::string report_to_tex(const ClassificationReport& r);

}  // namespace lamrep
