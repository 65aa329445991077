#pragma once

#include "lamrep/linalg.hpp"
#include "lamrep/partition.hpp"

namespace lamrep {

// A point of rep_{Lambda(m,n)}(d1, d2): matrices A (d1 x d1), B (d2 x d2),
// C (d2 x d1) subject to A^m = B^n = CA - BC = B^2 C = 0.
template <class F>
struct RepTriple {
    int m = 1;
    int n = 1;
    Mat<F> A, B, C;

    RepTriple() = default;
    RepTriple(int m_, int n_, Mat<F> a, Mat<F> b, Mat<F> c)
        : m(m_), n(n_), A(std::move(a)), B(std::move(b)), C(std::move(c)) {}

    int d1() const { return A.rows; }
    int d2() const { return B.rows; }
    const F& field() const { return A.field; }

    void require_shapes() const {
        if (!A.is_square() || !B.is_square() || C.rows != B.rows || C.cols != A.cols)
            throw ShapeMismatch("rep triple shape mismatch");
        if (m < 1 || n < 1) throw Error("algebra parameters must be >= 1");
    }
};

template <class F>
bool check_relations(const RepTriple<F>& r) {
    r.require_shapes();
    if (!r.A.pow(r.m).is_zero()) return false;
    if (!r.B.pow(r.n).is_zero()) return false;
    if (!(r.C * r.A - r.B * r.C).is_zero()) return false;
    if (!(r.B * r.B * r.C).is_zero()) return false;
    return true;
}

// Base change by (g1, g2) in GL(d1) x GL(d2).
template <class F>
RepTriple<F> base_change(const RepTriple<F>& r, const Mat<F>& g1, const Mat<F>& g2) {
    auto g1i = inverse(g1);
    auto g2i = inverse(g2);
    if (!g1i || !g2i) throw Error("base change by a singular matrix");
    return RepTriple<F>(r.m, r.n, g1 * r.A * *g1i, g2 * r.B * *g2i, g2 * r.C * *g1i);
}

// Vector space duality: (A, B, C) -> (B^t, A^t, C^t), landing in
// rep_{Lambda(n,m)}(d2, d1).  An involution; equivariant for the group
// automorphism (g1, g2) -> (g2^{-t}, g1^{-t}).
template <class F>
RepTriple<F> dual_triple(const RepTriple<F>& r) {
    return RepTriple<F>(r.n, r.m, r.B.transpose(), r.A.transpose(), r.C.transpose());
}

// Jordan type of a nilpotent matrix from its rank sequence: the number of
// parts of size >= s equals rank(N^{s-1}) - rank(N^s).
template <class F>
Partition jordan_type_from_ranks(const Mat<F>& n) {
    if (!n.is_square()) throw ShapeMismatch("jordan type of non-square matrix");
    const int d = n.rows;
    if (d == 0) return Partition{};
    std::vector<int> ranks{d};  // rank of N^0
    Mat<F> power = n;
    for (int s = 1; s <= d; ++s) {
        ranks.push_back(rank(power));
        if (ranks.back() == 0) break;
        power = power * n;
    }
    if (ranks.back() != 0) throw NotNilpotent("matrix is not nilpotent");
    std::vector<int> parts;
    // count_{>= s} = rank(N^{s-1}) - rank(N^s)
    for (int s = 1; s < static_cast<int>(ranks.size()); ++s) {
        const int at_least_s = ranks[s - 1] - ranks[s];
        const int at_least_next =
            s + 1 < static_cast<int>(ranks.size()) ? ranks[s] - ranks[s + 1] : 0;
        for (int k = 0; k < at_least_s - at_least_next; ++k) parts.push_back(s);
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts), d);
}

}  // namespace lamrep
