#include "lamrep/json_io.hpp"

#include <sstream>

namespace lamrep {

Json to_json(const FieldSpec& fs) {
    if (fs.is_rationals()) return Json{{"kind", "Q"}};
    return Json{{"kind", "Fp"}, {"p", fs.p}};
}

FieldSpec field_spec_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q" || kind == "q") return FieldSpec::rationals();
    if (kind == "Fp" || kind == "fp") {
        const auto p = j.at("p").get<std::uint64_t>();
        if (p >= (1ull << 31)) throw Error("prime modulus must be < 2^31");
        return FieldSpec::prime(static_cast<std::uint32_t>(p));
    }
    throw Error("unknown field kind: " + kind);
}

Json to_json(const Partition& p) { return Json(p.parts); }

Partition partition_from_json(const Json& j, int bound) {
    if (!j.is_array()) throw Error("expected a partition (array of parts)");
    std::vector<int> parts;
    for (const auto& x : j) parts.push_back(x.get<int>());
    return Partition(std::move(parts), bound);
}

AnyLabeled labeled_from_json(const Json& j, std::optional<FieldSpec> override_field) {
    FieldSpec fs = override_field ? *override_field : field_spec_from_json(j.at("field"));
    if (fs.is_rationals()) return labeled_from_json_typed(RationalField{}, j);
    return labeled_from_json_typed(PrimeField(fs.p), j);
}

AnyTriple triple_from_json(const Json& j, std::optional<FieldSpec> override_field) {
    FieldSpec fs = override_field ? *override_field : field_spec_from_json(j.at("field"));
    if (fs.is_rationals()) return triple_from_json_typed(RationalField{}, j);
    return triple_from_json_typed(PrimeField(fs.p), j);
}

Json to_json(const Stratum& s) {
    return Json{{"m", s.m},           {"n", s.n},     {"p", to_json(s.p)},
                {"q", to_json(s.q)},  {"h", s.h},     {"dim", s.dim},
                {"candidate", s.candidate}};
}

Json to_json(const DegenerationReport& r) {
    Json words = Json::array();
    for (const auto& w : r.words)
        words.push_back(Json{{"word", w.word},
                             {"rank_from", w.rank_from},
                             {"rank_to", w.rank_to},
                             {"pass", w.pass}});
    return Json{{"pass", r.pass},
                {"endo", Json{{"dim_from", r.endo_from},
                              {"dim_to", r.endo_to},
                              {"isomorphic", r.isomorphic},
                              {"pass", r.endo_pass}}},
                {"max_word_len", r.max_word_len},
                {"word_ranks", std::move(words)}};
}

Json to_json(const LocalTangentReport& r, int loops, const std::vector<Rat>& lambda) {
    Json lam = Json::array();
    for (const Rat& x : lambda) lam.push_back(rat_str(x));
    return Json{{"loops", loops},
                {"lambda", std::move(lam)},
                {"tangent", r.tangent},
                {"orbit", r.orbit},
                {"quotient", r.quotient},
                {"componentDim", r.component_dim},
                {"maxOrbitDim", r.max_orbit_dim},
                {"denseOrbit", r.dense_orbit}};
}

namespace {

// "T^2", "T", "1", "0" for the monomial entries of a normal form; general
// entries print as full polynomials.
std::string entry_display(const TruncPoly<RationalField>& t) { return t.str(); }

Json params_to_json(const GeneralIndecomposable& g) {
    static const char* col_names[3][3] = {{"u", "", ""}, {"t", "u", ""}, {"s", "t", "u"}};
    static const char* row_names[3][3] = {{"z", "", ""}, {"y", "z", ""}, {"x", "y", "z"}};
    Json j = Json::object();
    const int nc = static_cast<int>(g.col_params.size());
    for (int i = 0; i < nc; ++i) j[col_names[nc - 1][i]] = g.col_params[i];
    const int nr = static_cast<int>(g.row_params.size());
    for (int i = 0; i < nr; ++i) j[row_names[nr - 1][i]] = g.row_params[i];
    return j;
}

Json form_display(const LabeledMatrix<RationalField>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.nrows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.ncols(); ++j) row.push_back(entry_display(m.entry(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Json entry_to_json(const ReportEntry& e) {
    const GeneralIndecomposable& g = e.entry;
    Json j{{"shape", shape_name(g.shape)},
           {"transposed", g.transposed},
           {"params", params_to_json(g)},
           {"p", to_json(g.stratum.p)},
           {"q", to_json(g.stratum.q)},
           {"d", Json::array({g.stratum.d1(), g.stratum.d2()})},
           {"h", g.stratum.h},
           {"stratum_dim", g.stratum.dim},
           {"matrix", form_display(g.form)}};
    if (e.endo_dim) j["endo_dim"] = *e.endo_dim;
    if (e.dim_top) j["dim_top"] = *e.dim_top;
    if (e.is_local) j["is_local"] = *e.is_local;
    if (e.orbit) j["orbit_dim"] = *e.orbit;
    if (e.dense_orbit) j["dense_orbit"] = *e.dense_orbit;
    if (e.endo_dim) j["certified"] = e.certified();
    return j;
}

Json to_json(const ClassificationReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) entries.push_back(entry_to_json(e));
    Json j{{"m", r.m},
           {"n", r.n},
           {"wild", r.wild},
           {"total", r.total},
           {"formula", r.formula}};
    if (r.dedup_total) j["dedup_total"] = *r.dedup_total;
    j["certified"] = r.with_certificates;
    j["entries"] = std::move(entries);
    return j;
}

std::string report_to_csv(const ClassificationReport& r) {
    std::ostringstream os;
    os << "shape,parameters,p,q,d1,d2,endo_dim,stratum_dim,certified\n";
    for (const auto& e : r.entries) {
        const auto& g = e.entry;
        os << shape_name(g.shape) << (g.transposed ? "^T" : "") << ",\"" << g.params_str()
           << "\",\"" << g.stratum.p.str() << "\",\"" << g.stratum.q.str() << "\","
           << g.stratum.d1() << "," << g.stratum.d2() << ",";
        if (e.endo_dim) os << *e.endo_dim;
        os << "," << g.stratum.dim << ",";
        if (e.endo_dim) os << (e.certified() ? "yes" : "no");
        os << "\n";
    }
    return os.str();
}

namespace {

std::string tex_entry(const TruncPoly<RationalField>& t) {
    const int ord = t.order();
    if (ord == t.modulus) return "0";
    // normal-form entries are monomials with coefficient 1
    if (ord == 0 && t.field.is_one(t.c[0])) return "1";
    if (ord >= 1 && t.field.is_one(t.c[ord])) {
        std::string base = ord == 1 ? "T" : "T^{" + std::to_string(ord) + "}";
        return base;
    }
    return t.str();
}

}  // namespace

std::string report_to_tex(const ClassificationReport& r) {
    std::ostringstream os;
    os << "% general indecomposable representations of Lambda(" << r.m << "," << r.n << ")\n";
    os << "\\begin{tabular}{llllll}\n";
    os << "shape & parameters & $\\mathbf{p}$ & $\\mathbf{q}$ & $(d_1,d_2)$ & matrix\\\\\n\\hline\n";
    for (const auto& e : r.entries) {
        const auto& g = e.entry;
        os << shape_name(g.shape) << (g.transposed ? "${}^{T}$" : "") << " & $" << g.params_str()
           << "$ & $(" << g.stratum.p.str() << ")$ & $(" << g.stratum.q.str() << ")$ & $("
           << g.stratum.d1() << "," << g.stratum.d2() << ")$ & $\\begin{pmatrix}";
        for (int i = 0; i < g.form.nrows(); ++i) {
            for (int j = 0; j < g.form.ncols(); ++j) {
                if (j) os << " & ";
                os << tex_entry(g.form.entry(i, j));
            }
            if (i + 1 < g.form.nrows()) os << " \\\\ ";
        }
        os << "\\end{pmatrix}$\\\\\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

}  // namespace lamrep
