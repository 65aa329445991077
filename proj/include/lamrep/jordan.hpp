#pragma once

#include <algorithm>

#include "lamrep/linalg.hpp"
#include "lamrep/partition.hpp"
#include "lamrep/rep_triple.hpp"

namespace lamrep {

namespace detail {

// Incremental forward-elimination accumulator for independence tests over F.
template <class F>
struct EchelonAccumulator {
    F field{};
    std::vector<int> pivots;
    std::vector<std::vector<typename F::Elem>> rows;

    explicit EchelonAccumulator(F f) : field(f) {}

    // Adds v to the accumulated space; returns false if v was already in it.
    bool add(std::vector<typename F::Elem> v) {
        const F& f = field;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const auto& coef = v[pivots[k]];
            if (f.is_zero(coef)) continue;
            auto c = coef;  // aliasing: v[pivots[k]] changes below
            for (std::size_t j = 0; j < v.size(); ++j)
                if (!f.is_zero(rows[k][j])) v[j] = f.sub(v[j], f.mul(c, rows[k][j]));
        }
        int piv = -1;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!f.is_zero(v[j])) {
                piv = static_cast<int>(j);
                break;
            }
        if (piv < 0) return false;
        const auto inv = f.inv(v[piv]);
        for (auto& x : v) x = f.mul(x, inv);
        pivots.push_back(piv);
        rows.push_back(std::move(v));
        return true;
    }
};

}  // namespace detail

template <class F>
struct JordanBasis {
    Mat<F> g;        // columns form the Jordan basis, chains ordered by length desc
    Partition type;  // chain lengths
};

// Jordan basis of a nilpotent matrix by kernel filtration.  Chain tops at
// level s extend  ker N^{s-1} + {level-s vectors of longer chains}  to a
// basis of ker N^s, taking candidates from the canonical kernel basis in
// order (lowest index first), so the output is reproducible.  In the
// resulting basis N acts as the lower shift within each chain.
template <class F>
JordanBasis<F> jordan_basis(const Mat<F>& n) {
    const F f = n.field;
    if (!n.is_square()) throw ShapeMismatch("jordan basis of non-square matrix");
    const int d = n.rows;
    if (d == 0) return {Mat<F>(f, 0, 0), Partition{}};

    std::vector<std::vector<std::vector<typename F::Elem>>> kernels;  // kernels[s-1] = ker N^s
    Mat<F> power = n;
    int smax = 0;
    for (int s = 1; s <= d; ++s) {
        kernels.push_back(kernel_basis(power));
        if (static_cast<int>(kernels.back().size()) == d) {
            smax = s;
            break;
        }
        power = power * n;
    }
    if (smax == 0) throw NotNilpotent("matrix is not nilpotent");

    auto apply = [&](const std::vector<typename F::Elem>& v) {
        std::vector<typename F::Elem> w(d, f.zero());
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                if (!f.is_zero(n.at(r, c)) && !f.is_zero(v[c]))
                    w[r] = f.add(w[r], f.mul(n.at(r, c), v[c]));
        return w;
    };

    struct Chain {
        std::vector<typename F::Elem> top;
        int length;
    };
    std::vector<Chain> chains;

    for (int s = smax; s >= 1; --s) {
        detail::EchelonAccumulator<F> acc(f);
        if (s >= 2)
            for (const auto& v : kernels[s - 2]) acc.add(v);
        for (const Chain& ch : chains) {
            auto v = ch.top;
            for (int k = 0; k < ch.length - s; ++k) v = apply(v);
            acc.add(v);
        }
        for (const auto& w : kernels[s - 1])
            if (acc.add(w)) chains.push_back({w, s});
    }

    // chains were created in order of decreasing length
    JordanBasis<F> jb{Mat<F>(f, d, d), Partition{}};
    std::vector<int> lengths;
    int col = 0;
    for (const Chain& ch : chains) {
        lengths.push_back(ch.length);
        auto v = ch.top;
        for (int k = 0; k < ch.length; ++k) {
            for (int r = 0; r < d; ++r) jb.g.at(r, col) = v[r];
            ++col;
            if (k + 1 < ch.length) v = apply(v);
        }
    }
    jb.type = Partition(std::move(lengths), d);
    return jb;
}

}  // namespace lamrep
