#include "lamrep/strata.hpp"

#include <algorithm>
#include <sstream>

namespace lamrep {

long h_of(const Partition& p, const Partition& q) {
    long h = 0;
    for (int qi : q.parts)
        for (int pj : p.parts) h += soc2_hom_dim(pj, qi);
    return h;
}

long stratum_dim(const Partition& p, const Partition& q) {
    return nilpotent_orbit_dim(p, p.weight()) + nilpotent_orbit_dim(q, q.weight()) + h_of(p, q);
}

bool containment_hint(const Partition& p_small, const Partition& q_small, const Partition& p,
                      const Partition& q) {
    if (p_small.weight() != p.weight() || q_small.weight() != q.weight())
        throw UnequalWeight("containment_hint: dimension vectors differ");
    return dominance_leq(p_small, p) && dominance_leq(q_small, q) &&
           h_of(p_small, q_small) == h_of(p, q);
}

const char* shape_name(Shape s) {
    switch (s) {
        case Shape::OneByOne: return "1x1";
        case Shape::OneByTwo: return "1x2";
        case Shape::TwoByTwo: return "2x2";
        case Shape::TwoByThree: return "2x3";
        case Shape::ThreeByThree: return "3x3";
    }
    return "?";
}

int shape_rows(Shape s) {
    switch (s) {
        case Shape::OneByOne:
        case Shape::OneByTwo: return 1;
        case Shape::TwoByTwo:
        case Shape::TwoByThree: return 2;
        case Shape::ThreeByThree: return 3;
    }
    return 0;
}

int shape_cols(Shape s) {
    switch (s) {
        case Shape::OneByOne: return 1;
        case Shape::OneByTwo:
        case Shape::TwoByTwo: return 2;
        case Shape::TwoByThree:
        case Shape::ThreeByThree: return 3;
    }
    return 0;
}

std::optional<Shape> classification_shape(int m, int n, const Partition& p, const Partition& q) {
    const auto& pp = p.parts;
    const auto& qq = q.parts;
    if (p.max_part() > m || q.max_part() > n) return std::nullopt;
    if (pp.size() == 1 && qq.size() == 1) return Shape::OneByOne;
    if (pp.size() == 2 && pp[0] >= 3 && pp[1] == 1) {
        if (qq.size() == 1 && qq[0] >= 2) return Shape::OneByTwo;
        if (qq.size() == 2 && qq[0] >= 3 && qq[1] == 2) return Shape::TwoByTwo;
    }
    if (pp.size() == 3 && pp[0] == m && pp[1] >= 3 && pp[1] <= m - 1 && pp[2] == 1) {
        if (qq.size() == 2 && qq[0] >= 3 && qq[1] == 2) return Shape::TwoByThree;
        if (qq.size() == 3 && qq[0] == n && qq[1] >= 3 && qq[1] <= n - 1 && qq[2] == 2)
            return Shape::ThreeByThree;
    }
    return std::nullopt;
}

bool candidate_filter(int m, int n, const Partition& p, const Partition& q) {
    return classification_shape(m, n, p, q).has_value() ||
           classification_shape(n, m, q, p).has_value();
}

bool is_staircase_shape(int m, int n, const Partition& p, const Partition& q) {
    if (p.empty() || q.empty()) return false;
    if (p.max_part() > m || q.max_part() > n) return false;
    if (p.length() == 1 && q.length() == 1) return true;
    // p = (m^am, k^ak, 1): exactly one 1, no 2, at most one middle part below m
    if (p.min_part() != 1 || p.count_part(1) != 1) return false;
    if (p.count_part(2) != 0) return false;
    int middles = 0;
    for (int part : p.parts)
        if (part != 1 && part != m) {
            if (part < 3 || part >= m) return false;
            ++middles;
        }
    if (middles > 1) return false;
    // q = (n^bn, l^bl, 2^b2): no 1, at most one part strictly between 2 and n
    if (q.min_part() < 2) return false;
    int q_middles = 0;
    for (int part : q.parts)
        if (part != 2 && part != n) {
            if (part < 3 || part >= n) return false;
            ++q_middles;
        }
    if (q_middles > 1) return false;
    return true;
}

Stratum make_stratum(int m, int n, const Partition& p, const Partition& q) {
    if (p.max_part() > m || q.max_part() > n)
        throw PartExceedsBound("stratum labels exceed the algebra's bounds");
    Stratum s;
    s.m = m;
    s.n = n;
    s.p = Partition(p.parts, m);
    s.q = Partition(q.parts, n);
    s.h = h_of(p, q);
    s.dim = stratum_dim(p, q);
    s.candidate = candidate_filter(m, n, p, q);
    return s;
}

std::vector<StaircaseCell> staircase_cells(const Partition& p, const Partition& q) {
    std::vector<StaircaseCell> cells;
    const int lp = p.length(), lq = q.length();
    const int delta = lp - lq;
    for (int i = 0; i < lq; ++i)
        for (int j : {i + delta - 1, i + delta}) {
            if (j < 0 || j >= lp) continue;
            cells.push_back({i, j, general_exponent(q[i], p[j])});
        }
    return cells;
}

std::string GeneralIndecomposable::params_str() const {
    static const char* col_names[] = {"u", "t", "s"};
    static const char* row_names[] = {"z", "y", "x"};
    std::ostringstream os;
    for (std::size_t j = 0; j < col_params.size(); ++j) {
        if (j) os << ",";
        os << col_names[col_params.size() - 1 - j] << "=" << col_params[j];
    }
    for (std::size_t i = 0; i < row_params.size(); ++i)
        os << "," << row_names[row_params.size() - 1 - i] << "=" << row_params[i];
    return os.str();
}

GeneralIndecomposable make_general_indecomposable(int m, int n, Shape shape,
                                                  const std::vector<int>& col_params,
                                                  const std::vector<int>& row_params) {
    if (static_cast<int>(col_params.size()) != shape_cols(shape) ||
        static_cast<int>(row_params.size()) != shape_rows(shape))
        throw Error("parameter count does not match the shape");
    GeneralIndecomposable g;
    g.shape = shape;
    g.transposed = false;
    g.col_params = col_params;
    g.row_params = row_params;
    Partition p(col_params, m), q(row_params, n);
    if (!classification_shape(m, n, p, q))
        throw NotCandidate("parameters outside the classification ranges");
    g.stratum = make_stratum(m, n, p, q);
    g.form = normal_form(RationalField{}, m, n, p, q);
    return g;
}

GeneralIndecomposable transpose_dual(const GeneralIndecomposable& g) {
    GeneralIndecomposable t;
    t.shape = g.shape;
    t.transposed = !g.transposed;
    t.col_params = g.col_params;
    t.row_params = g.row_params;
    t.stratum = make_stratum(g.stratum.n, g.stratum.m, g.stratum.q, g.stratum.p);
    t.form = transpose_labeled(g.form);
    return t;
}

}  // namespace lamrep
