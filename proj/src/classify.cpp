#include "lamrep/classify.hpp"

#include <map>

#include "lamrep/labeled_matrix.hpp"

namespace lamrep {

long long count_formula(int m, int n) {
    return 9LL * m * n - 18LL * (m + n) + 42;
}

std::vector<GeneralIndecomposable> list_general_indecomposables(int m, int n) {
    if (m < 1 || n < 1) throw Error("algebra parameters must be >= 1");
    std::vector<GeneralIndecomposable> out;

    const auto emit = [&out](int mm, int nn, Shape shape, std::vector<int> cols,
                             std::vector<int> rows, bool transposed) {
        GeneralIndecomposable g = make_general_indecomposable(mm, nn, shape, cols, rows);
        out.push_back(transposed ? transpose_dual(g) : std::move(g));
    };

    // 1x1: [T^*], u <= m, z <= n; closed under transposition, emitted once
    for (int u = 1; u <= m; ++u)
        for (int z = 1; z <= n; ++z) emit(m, n, Shape::OneByOne, {u}, {z}, false);

    // 1x2: [T^* T^*] with columns (t, 1), row (z)
    for (int t = 3; t <= m; ++t)
        for (int z = 2; z <= n; ++z) emit(m, n, Shape::OneByTwo, {t, 1}, {z}, false);
    for (int t = 3; t <= n; ++t)
        for (int z = 2; z <= m; ++z) emit(n, m, Shape::OneByTwo, {t, 1}, {z}, true);

    // 2x2: columns (t, 1), rows (y, 2)
    for (int t = 3; t <= m; ++t)
        for (int y = 3; y <= n; ++y) emit(m, n, Shape::TwoByTwo, {t, 1}, {y, 2}, false);
    for (int t = 3; t <= n; ++t)
        for (int y = 3; y <= m; ++y) emit(n, m, Shape::TwoByTwo, {t, 1}, {y, 2}, true);

    // 2x3: columns (m, t, 1), rows (y, 2)
    for (int t = 3; t <= m - 1; ++t)
        for (int y = 3; y <= n; ++y) emit(m, n, Shape::TwoByThree, {m, t, 1}, {y, 2}, false);
    for (int t = 3; t <= n - 1; ++t)
        for (int y = 3; y <= m; ++y) emit(n, m, Shape::TwoByThree, {n, t, 1}, {y, 2}, true);

    // 3x3: columns (m, t, 1), rows (n, y, 2)
    for (int t = 3; t <= m - 1; ++t)
        for (int y = 3; y <= n - 1; ++y)
            emit(m, n, Shape::ThreeByThree, {m, t, 1}, {n, y, 2}, false);
    for (int t = 3; t <= n - 1; ++t)
        for (int y = 3; y <= m - 1; ++y)
            emit(n, m, Shape::ThreeByThree, {n, t, 1}, {m, y, 2}, true);

    return out;
}

bool is_wild(int m, int n) {
    const auto leq = [](int a, int b, int c, int d) { return a <= c && b <= d; };
    return !(leq(m, n, 4, 4) || leq(m, n, 6, 3) || leq(m, n, 3, 6));
}

ReportEntry certify_entry(GeneralIndecomposable g) {
    ReportEntry e;
    const Stratum& st = g.stratum;
    RepTriple<RationalField> triple = labeled_to_triple(g.form, st.m, st.n);
    if (!check_relations(triple)) throw CertificateFailure("normal form violates the relations");
    EndoSpace<RationalField> endo = endo_space(triple);
    e.endo_dim = endo.dim;
    e.dim_top = endo.dim_top;
    e.is_local = endo.is_local;
    const long d1 = st.d1(), d2 = st.d2();
    e.orbit = d1 * d1 + d2 * d2 - endo.dim;
    e.dense_orbit = (*e.orbit == st.dim);
    e.entry = std::move(g);
    return e;
}

ClassificationReport classify_report(int m, int n, bool certify, bool dedup) {
    ClassificationReport rep;
    rep.m = m;
    rep.n = n;
    rep.wild = is_wild(m, n);
    rep.with_certificates = certify;
    rep.formula = count_formula(m, n);

    for (GeneralIndecomposable& g : list_general_indecomposables(m, n)) {
        ReportEntry e;
        if (certify) {
            e = certify_entry(std::move(g));
            if (!e.certified())
                throw CertificateFailure(
                    "certification failed for shape " + std::string(shape_name(e.entry.shape)) +
                    (e.entry.transposed ? " (transposed)" : "") + " p=" + e.entry.stratum.p.str() +
                    " q=" + e.entry.stratum.q.str());
        } else {
            e.entry = std::move(g);
        }
        rep.entries.push_back(std::move(e));
    }
    rep.total = static_cast<long long>(rep.entries.size());

    if (dedup) {
        std::map<std::pair<std::vector<int>, std::vector<int>>, int> strata;
        for (const ReportEntry& e : rep.entries)
            ++strata[{e.entry.stratum.p.parts, e.entry.stratum.q.parts}];
        rep.dedup_total = static_cast<long long>(strata.size());
    }
    return rep;
}

}  // namespace lamrep
