#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lamrep/algebra.hpp"
#include "lamrep/rep_triple.hpp"

namespace lamrep {

// Stacked linear system for intertwiners (P, Q): R -> S, i.e.
// P A_R = A_S P,  Q B_R = B_S Q,  Q C_R = C_S P.
// Unknowns are vec(P) followed by vec(Q), row-major.
template <class F>
Mat<F> intertwiner_system(const RepTriple<F>& r, const RepTriple<F>& s) {
    const F f = r.field();
    const int d1 = r.d1(), d2 = r.d2();
    if (s.d1() != d1 || s.d2() != d2) throw ShapeMismatch("dimension vectors differ");
    const int np = d1 * d1, nq = d2 * d2;
    const auto pidx = [&](int rr, int cc) { return rr * d1 + cc; };
    const auto qidx = [&](int rr, int cc) { return np + rr * d2 + cc; };

    Mat<F> sys(f, np + nq + d2 * d1, np + nq);
    int row = 0;
    // P A_R - A_S P = 0
    for (int a = 0; a < d1; ++a)
        for (int b = 0; b < d1; ++b, ++row) {
            for (int c = 0; c < d1; ++c) {
                sys.at(row, pidx(a, c)) = f.add(sys.at(row, pidx(a, c)), r.A.at(c, b));
                sys.at(row, pidx(c, b)) = f.sub(sys.at(row, pidx(c, b)), s.A.at(a, c));
            }
        }
    // Q B_R - B_S Q = 0
    for (int a = 0; a < d2; ++a)
        for (int b = 0; b < d2; ++b, ++row) {
            for (int c = 0; c < d2; ++c) {
                sys.at(row, qidx(a, c)) = f.add(sys.at(row, qidx(a, c)), r.B.at(c, b));
                sys.at(row, qidx(c, b)) = f.sub(sys.at(row, qidx(c, b)), s.B.at(a, c));
            }
        }
    // Q C_R - C_S P = 0
    for (int a = 0; a < d2; ++a)
        for (int b = 0; b < d1; ++b, ++row) {
            for (int c = 0; c < d2; ++c)
                sys.at(row, qidx(a, c)) = f.add(sys.at(row, qidx(a, c)), r.C.at(c, b));
            for (int c = 0; c < d1; ++c)
                sys.at(row, pidx(c, b)) = f.sub(sys.at(row, pidx(c, b)), s.C.at(a, c));
        }
    return sys;
}

template <class F>
std::vector<std::pair<Mat<F>, Mat<F>>> intertwiner_basis(const RepTriple<F>& r,
                                                         const RepTriple<F>& s) {
    const F f = r.field();
    const int d1 = r.d1(), d2 = r.d2();
    auto vecs = kernel_basis(intertwiner_system(r, s));
    std::vector<std::pair<Mat<F>, Mat<F>>> basis;
    basis.reserve(vecs.size());
    for (const auto& v : vecs) {
        Mat<F> pmat(f, d1, d1), qmat(f, d2, d2);
        for (int i = 0; i < d1 * d1; ++i) pmat.a[i] = v[i];
        for (int i = 0; i < d2 * d2; ++i) qmat.a[i] = v[d1 * d1 + i];
        basis.emplace_back(std::move(pmat), std::move(qmat));
    }
    return basis;
}

// End(R) as pairs (P, Q) commuting with the arrows.  Over Q the locality
// verdict comes from the radical of the trace form on the block-diagonal
// embedding diag(P, Q); over a prime field it stays Unknown (nullopt).
template <class F>
struct EndoSpace {
    std::vector<std::pair<Mat<F>, Mat<F>>> basis;
    int dim = 0;
    std::optional<int> dim_top;
    std::optional<bool> is_local;
};

template <class F>
EndoSpace<F> endo_space(const RepTriple<F>& r) {
    if (!check_relations(r)) throw RelationViolation("endo_space needs a representation");
    EndoSpace<F> e;
    e.basis = intertwiner_basis(r, r);
    e.dim = static_cast<int>(e.basis.size());
    if constexpr (!F::prime_field) {
        std::vector<Mat<F>> embedded;
        embedded.reserve(e.basis.size());
        for (const auto& [pm, qm] : e.basis) embedded.push_back(block_diag(pm, qm));
        auto [dim_alg, dim_rad] = subalgebra_radical_dim(embedded);
        if (dim_alg != e.dim) throw Error("endomorphism basis was not independent");  // bug
        e.dim_top = dim_alg - dim_rad;
        e.is_local = (*e.dim_top == 1);
    }
    return e;
}

template <class F>
long endo_dim(const RepTriple<F>& r) {
    if (!check_relations(r)) throw RelationViolation("endo_dim needs a representation");
    return kernel_dim(intertwiner_system(r, r));
}

// dim GL(d).R = d1^2 + d2^2 - dim End(R).
template <class F>
long orbit_dim(const RepTriple<F>& r) {
    const long d1 = r.d1(), d2 = r.d2();
    return d1 * d1 + d2 * d2 - endo_dim(r);
}

// Probabilistic isomorphism test: a true answer exhibits an invertible
// intertwiner and is a certificate; false only reports that `trials` random
// elements of the intertwiner space were all singular.
template <class F>
bool is_isomorphic(const RepTriple<F>& r, const RepTriple<F>& s, int trials = 8,
                   std::uint64_t seed = 0) {
    if (r.d1() != s.d1() || r.d2() != s.d2()) throw ShapeMismatch("dimension vectors differ");
    if (!check_relations(r) || !check_relations(s))
        throw RelationViolation("is_isomorphic needs representations");
    auto basis = intertwiner_basis(r, s);
    if (basis.empty()) return false;
    std::vector<Mat<F>> embedded;
    embedded.reserve(basis.size());
    for (const auto& [pm, qm] : basis) embedded.push_back(block_diag(pm, qm));
    return generic_invertible_in_span(embedded, trials, seed);
}

// Zariski tangent space of the scheme cut out by the defining relations,
// linearized at R in direction (X, Y, Z):
//   sum A^i X A^{m-1-i} = 0,  sum B^i Y B^{n-1-i} = 0,
//   ZA + CX - YC - BZ = 0,    YBC + BYC + B^2 Z = 0.
// An upper bound for the tangent space of the variety; only that direction
// is used anywhere.
template <class F>
long tangent_dim(const RepTriple<F>& r) {
    if (!check_relations(r)) throw RelationViolation("tangent_dim needs a representation");
    const F f = r.field();
    const int d1 = r.d1(), d2 = r.d2();
    const int nx = d1 * d1, ny = d2 * d2, nz = d2 * d1;
    const auto xidx = [&](int rr, int cc) { return rr * d1 + cc; };
    const auto yidx = [&](int rr, int cc) { return nx + rr * d2 + cc; };
    const auto zidx = [&](int rr, int cc) { return nx + ny + rr * d1 + cc; };

    std::vector<Mat<F>> apow{Mat<F>::identity(f, d1)};
    for (int i = 1; i < r.m; ++i) apow.push_back(apow.back() * r.A);
    std::vector<Mat<F>> bpow{Mat<F>::identity(f, d2)};
    for (int i = 1; i <= r.n; ++i) bpow.push_back(bpow.back() * r.B);
    const Mat<F> bc = r.B * r.C;
    const Mat<F> b2 = r.B * r.B;

    Mat<F> sys(f, nx + ny + nz + nz, nx + ny + nz);
    int row = 0;
    // d(A^m): coefficient of X[u][v] in equation (a,b) is
    // sum_i (A^i)[a][u] * (A^{m-1-i})[v][b]
    for (int a = 0; a < d1; ++a)
        for (int b = 0; b < d1; ++b, ++row)
            for (int i = 0; i < r.m; ++i) {
                const Mat<F>& left = apow[i];
                const Mat<F>& right = apow[r.m - 1 - i];
                for (int u = 0; u < d1; ++u) {
                    if (f.is_zero(left.at(a, u))) continue;
                    for (int v = 0; v < d1; ++v)
                        if (!f.is_zero(right.at(v, b)))
                            sys.at(row, xidx(u, v)) = f.add(
                                sys.at(row, xidx(u, v)), f.mul(left.at(a, u), right.at(v, b)));
                }
            }
    // d(B^n)
    for (int a = 0; a < d2; ++a)
        for (int b = 0; b < d2; ++b, ++row)
            for (int i = 0; i < r.n; ++i) {
                const Mat<F>& left = bpow[i];
                const Mat<F>& right = bpow[r.n - 1 - i];
                for (int u = 0; u < d2; ++u) {
                    if (f.is_zero(left.at(a, u))) continue;
                    for (int v = 0; v < d2; ++v)
                        if (!f.is_zero(right.at(v, b)))
                            sys.at(row, yidx(u, v)) = f.add(
                                sys.at(row, yidx(u, v)), f.mul(left.at(a, u), right.at(v, b)));
                }
            }
    // d(CA - BC) = ZA + CX - YC - BZ
    for (int a = 0; a < d2; ++a)
        for (int b = 0; b < d1; ++b, ++row) {
            for (int c = 0; c < d1; ++c) {
                sys.at(row, zidx(a, c)) = f.add(sys.at(row, zidx(a, c)), r.A.at(c, b));
                sys.at(row, xidx(c, b)) = f.add(sys.at(row, xidx(c, b)), r.C.at(a, c));
            }
            for (int c = 0; c < d2; ++c) {
                sys.at(row, yidx(a, c)) = f.sub(sys.at(row, yidx(a, c)), r.C.at(c, b));
                sys.at(row, zidx(c, b)) = f.sub(sys.at(row, zidx(c, b)), r.B.at(a, c));
            }
        }
    // d(B^2 C) = YBC + BYC + B^2 Z
    for (int a = 0; a < d2; ++a)
        for (int b = 0; b < d1; ++b, ++row) {
            for (int c = 0; c < d2; ++c)
                sys.at(row, yidx(a, c)) = f.add(sys.at(row, yidx(a, c)), bc.at(c, b));
            for (int u = 0; u < d2; ++u)
                for (int v = 0; v < d2; ++v)
                    if (!f.is_zero(r.B.at(a, u)) && !f.is_zero(r.C.at(v, b)))
                        sys.at(row, yidx(u, v)) =
                            f.add(sys.at(row, yidx(u, v)), f.mul(r.B.at(a, u), r.C.at(v, b)));
            for (int c = 0; c < d2; ++c)
                sys.at(row, zidx(c, b)) = f.add(sys.at(row, zidx(c, b)), b2.at(a, c));
        }
    return kernel_dim(sys);
}

// Composable words in the arrows a, b, c: a^i, b^j, and b^j c a^i.
struct QuiverWord {
    int a_power = 0;
    int c_count = 0;  // 0 or 1
    int b_power = 0;

    int length() const { return a_power + c_count + b_power; }
    std::string str() const {
        std::string s;
        auto pow = [](const std::string& x, int e) {
            return e == 0 ? std::string{} : (e == 1 ? x : x + "^" + std::to_string(e));
        };
        s = pow("b", b_power);
        if (c_count) s += (s.empty() ? "" : " ") + std::string("c");
        const std::string ap = pow("a", a_power);
        if (!ap.empty()) s += (s.empty() ? "" : " ") + ap;
        return s;
    }
};

std::vector<QuiverWord> composable_words(int max_len);

template <class F>
Mat<F> evaluate_word(const RepTriple<F>& r, const QuiverWord& w) {
    if (w.c_count) return r.B.pow(w.b_power) * r.C * r.A.pow(w.a_power);
    if (w.b_power) return r.B.pow(w.b_power);
    return r.A.pow(w.a_power);
}

// Necessary conditions for N to lie in the closure of the orbit of M:
// endomorphism dimension can only grow (strictly, unless isomorphic), and
// word ranks can only drop.  A pass is evidence, never a proof.
struct DegenerationReport {
    struct WordRanks {
        std::string word;
        long rank_from = 0, rank_to = 0;
        bool pass = false;
    };
    long endo_from = 0, endo_to = 0;
    bool isomorphic = false;
    bool endo_pass = false;
    std::vector<WordRanks> words;
    int max_word_len = 0;
    bool pass = false;
};

template <class F>
DegenerationReport degeneration_necessary(const RepTriple<F>& from, const RepTriple<F>& to,
                                          int max_word_len) {
    if (from.d1() != to.d1() || from.d2() != to.d2())
        throw ShapeMismatch("dimension vectors differ");
    DegenerationReport rep;
    rep.max_word_len = max_word_len;
    rep.endo_from = endo_dim(from);
    rep.endo_to = endo_dim(to);
    rep.isomorphic = is_isomorphic(from, to);
    rep.endo_pass = rep.isomorphic ? rep.endo_to >= rep.endo_from : rep.endo_to > rep.endo_from;
    rep.pass = rep.endo_pass;
    for (const QuiverWord& w : composable_words(max_word_len)) {
        DegenerationReport::WordRanks wr;
        wr.word = w.str();
        wr.rank_from = rank(evaluate_word(from, w));
        wr.rank_to = rank(evaluate_word(to, w));
        wr.pass = wr.rank_to <= wr.rank_from;
        rep.pass = rep.pass && wr.pass;
        rep.words.push_back(std::move(wr));
    }
    return rep;
}

}  // namespace lamrep
