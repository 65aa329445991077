#pragma once

#include <utility>
#include <vector>

#include "lamrep/linalg.hpp"

namespace lamrep {

// Row space of a list of equally-shaped matrices, flattened.  `rows` are the
// canonical RREF basis vectors; coordinates of a span member are read off at
// the pivot positions.
template <class F>
struct SpanBasis {
    F field{};
    int vec_len = 0;
    std::vector<int> pivot_cols;
    std::vector<std::vector<typename F::Elem>> rows;

    int dim() const { return static_cast<int>(rows.size()); }

    // Coordinates of v in this basis, or nullopt if v lies outside the span.
    std::optional<std::vector<typename F::Elem>> coordinates(
        const std::vector<typename F::Elem>& v) const {
        const F& f = field;
        std::vector<typename F::Elem> coords(rows.size(), f.zero());
        for (std::size_t k = 0; k < rows.size(); ++k) coords[k] = v[pivot_cols[k]];
        std::vector<typename F::Elem> residue = v;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (f.is_zero(coords[k])) continue;
            for (int j = 0; j < vec_len; ++j)
                if (!f.is_zero(rows[k][j]))
                    residue[j] = f.sub(residue[j], f.mul(coords[k], rows[k][j]));
        }
        for (const auto& x : residue)
            if (!f.is_zero(x)) return std::nullopt;
        return coords;
    }
};

template <class F>
std::vector<typename F::Elem> flatten(const Mat<F>& m) {
    return m.a;
}

template <class F>
SpanBasis<F> span_basis(const std::vector<Mat<F>>& mats) {
    if (mats.empty()) throw Error("span_basis: empty generating set");
    const F f = mats.front().field;
    const int len = mats.front().rows * mats.front().cols;
    Mat<F> stack(f, static_cast<int>(mats.size()), len);
    for (std::size_t i = 0; i < mats.size(); ++i) {
        mats[i].require_same_shape(mats.front());
        for (int j = 0; j < len; ++j) stack.at(static_cast<int>(i), j) = mats[i].a[j];
    }
    auto ech = detail::echelon(stack);
    std::vector<int> all_cols(len);
    for (int j = 0; j < len; ++j) all_cols[j] = j;
    auto red = detail::reduced_rows_at(f, ech, all_cols);
    SpanBasis<F> sb;
    sb.field = f;
    sb.vec_len = len;
    sb.pivot_cols = ech.pivot_cols;
    sb.rows = std::move(red);
    return sb;
}

// dim E and dim rad E for the unital associative subalgebra E of a matrix
// algebra spanned by `gens`, over Q.  rad E is the radical of the trace form
// of the left regular representation, which equals the Jacobson radical in
// characteristic zero, so dim E/rad E = 1 detects a local algebra and the
// verdict is unconditional.
inline std::pair<int, int> subalgebra_radical_dim(const std::vector<Mat<RationalField>>& gens) {
    const RationalField f;
    if (gens.empty()) throw Error("subalgebra_radical_dim: empty generating set");
    if (!gens.front().is_square()) throw ShapeMismatch("subalgebra_radical_dim: non-square");
    const int s = gens.front().rows;

    SpanBasis<RationalField> sb = span_basis(gens);
    const int e = sb.dim();

    if (!sb.coordinates(flatten(Mat<RationalField>::identity(f, s))))
        throw NotUnital("identity matrix is not in the span");

    // basis elements back as matrices
    std::vector<Mat<RationalField>> basis;
    basis.reserve(e);
    for (int k = 0; k < e; ++k) {
        Mat<RationalField> b(f, s, s);
        b.a = sb.rows[k];
        basis.push_back(std::move(b));
    }

    // Left regular representation: column j of L_i holds the coordinates of
    // b_i * b_j.  A product falling outside the span means the input did not
    // generate a multiplicatively closed space.
    std::vector<Mat<RationalField>> left(e, Mat<RationalField>(f, e, e));
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) {
            auto coords = sb.coordinates(flatten(basis[i] * basis[j]));
            if (!coords) throw SpanNotClosed("span is not closed under multiplication");
            for (int k = 0; k < e; ++k) left[i].at(k, j) = (*coords)[k];
        }

    // Gram matrix of the trace form T(x, y) = tr(L_x L_y).
    Mat<RationalField> gram(f, e, e);
    for (int i = 0; i < e; ++i)
        for (int j = i; j < e; ++j) {
            Rat t = 0;
            for (int r = 0; r < e; ++r)
                for (int c = 0; c < e; ++c) t += left[i].at(r, c) * left[j].at(c, r);
            gram.at(i, j) = t;
            gram.at(j, i) = t;
        }

    const int rad = kernel_dim(gram);
    return {e, rad};
}

// Probabilistic test for an invertible element in the span of square
// matrices.  Draws `trials` random combinations with integer coefficients
// from ranges [-8,8], [-16,16], ... (doubling).  A `true` answer carries an
// explicit witness and is a certificate; `false` only says no witness was
// found.
template <class F>
bool generic_invertible_in_span(const std::vector<Mat<F>>& basis, int trials, std::uint64_t seed) {
    if (basis.empty()) throw Error("generic_invertible_in_span: empty basis");
    const F f = basis.front().field;
    if (!basis.front().is_square()) throw ShapeMismatch("generic_invertible_in_span: non-square");
    const int n = basis.front().rows;
    if constexpr (F::prime_field) {
        if (f.p <= 2ull * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n))
            throw Error("generic_invertible_in_span: prime too small for size " +
                        std::to_string(n));
    }
    if (n == 0) return true;  // GL(0) is trivial

    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const long range = 8L << t;
        Mat<F> combo(f, n, n);
        for (const Mat<F>& b : basis) {
            const long c = rng.in_range(range);
            if (c == 0) continue;
            combo = combo + b.scaled(f.from_int(c));
        }
        if (invertible(combo)) return true;
    }
    return false;
}

}  // namespace lamrep
