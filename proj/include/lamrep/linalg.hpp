#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lamrep/matrix.hpp"

namespace lamrep {

// Row echelon data.  `rows` holds the nonzero echelon rows (not normalized);
// row k has its first nonzero entry at pivot_cols[k].
template <class F>
struct Echelon {
    int rank = 0;
    int cols = 0;
    std::vector<int> pivot_cols;
    std::vector<std::vector<typename F::Elem>> rows;
};

namespace detail {

// Fraction-free (Bareiss) echelon over the integers.  Entries stay bounded by
// minors of the input, and every division is exact.
inline Echelon<RationalField> ref_bareiss(const Mat<RationalField>& m) {
    const int nr = m.rows, nc = m.cols;
    std::vector<std::vector<mpz_class>> w(nr, std::vector<mpz_class>(nc));
    for (int r = 0; r < nr; ++r) {
        mpz_class lcm = 1;
        for (int c = 0; c < nc; ++c) {
            const mpz_class& den = m.at(r, c).get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (int c = 0; c < nc; ++c) {
            mpz_class scale;
            mpz_divexact(scale.get_mpz_t(), lcm.get_mpz_t(), m.at(r, c).get_den().get_mpz_t());
            w[r][c] = m.at(r, c).get_num() * scale;
        }
    }

    Echelon<RationalField> ech;
    ech.cols = nc;
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int piv = -1;
        for (int i = r; i < nr; ++i)
            if (sgn(w[i][c]) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(w[r], w[piv]);
        const mpz_class pc = w[r][c];
        for (int i = r + 1; i < nr; ++i) {
            const mpz_class mic = w[i][c];
            for (int j = c; j < nc; ++j) {
                // w[i][j] <- (pc*w[i][j] - mic*w[r][j]) / prev, exactly.
                mpz_class num = pc * w[i][j];
                if (sgn(mic) != 0 && sgn(w[r][j]) != 0) num -= mic * w[r][j];
                if (sgn(num) == 0) {
                    w[i][j] = 0;
                } else {
                    mpz_divexact(w[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                }
            }
        }
        prev = pc;
        ech.pivot_cols.push_back(c);
        ++r;
    }
    ech.rank = r;
    ech.rows.reserve(r);
    RationalField f;
    for (int k = 0; k < r; ++k) {
        std::vector<Rat> row(nc, f.zero());
        for (int c = ech.pivot_cols[k]; c < nc; ++c)
            if (sgn(w[k][c]) != 0) row[c] = Rat(w[k][c]);
        ech.rows.push_back(std::move(row));
    }
    return ech;
}

// Forward elimination mod p with normalized (monic, reduced) pivot rows.
// For p < 2^20 the working rows are kept lazily unreduced: each update adds
// less than 2^40 (pivot rows are reduced, multipliers are < p), so up to 2^20
// updates per entry fit in uint64 and the inner loop runs without divisions.
// Entries are reduced exactly when a row is promoted to a pivot row.
inline Echelon<PrimeField> ref_modp(const Mat<PrimeField>& m) {
    const PrimeField f = m.field;
    const std::uint64_t p = f.p;
    const bool lazy = p < (1u << 20) && m.cols < (1 << 20);
    const int nr = m.rows, nc = m.cols;
    std::vector<std::vector<std::uint64_t>> w(nr, std::vector<std::uint64_t>(nc));
    for (int r = 0; r < nr; ++r)
        for (int c = 0; c < nc; ++c) w[r][c] = m.at(r, c);

    Echelon<PrimeField> ech;
    ech.cols = nc;
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int piv = -1;
        for (int i = r; i < nr; ++i) {
            if (w[i][c] % p != 0) {
                piv = i;
                break;
            }
            w[i][c] = 0;
        }
        if (piv < 0) continue;
        std::swap(w[r], w[piv]);
        for (int j = c; j < nc; ++j) w[r][j] %= p;
        const std::uint64_t inv = f.inv(w[r][c]);
        for (int j = c; j < nc; ++j)
            if (w[r][j]) w[r][j] = (w[r][j] * inv) % p;
        for (int i = r + 1; i < nr; ++i) {
            const std::uint64_t l = w[i][c] % p;
            if (!l) {
                w[i][c] = 0;
                continue;
            }
            const std::uint64_t nl = p - l;
            std::uint64_t* ri = w[i].data();
            const std::uint64_t* rr = w[r].data();
            if (lazy) {
                for (int j = c + 1; j < nc; ++j)
                    if (rr[j]) ri[j] += nl * rr[j];
            } else {
                for (int j = c + 1; j < nc; ++j)
                    if (rr[j]) ri[j] = (ri[j] + nl * rr[j]) % p;
            }
            ri[c] = 0;
        }
        ech.pivot_cols.push_back(c);
        ++r;
    }
    ech.rank = r;
    ech.rows.assign(w.begin(), w.begin() + r);
    return ech;
}

inline Echelon<RationalField> echelon(const Mat<RationalField>& m) { return ref_bareiss(m); }
inline Echelon<PrimeField> echelon(const Mat<PrimeField>& m) { return ref_modp(m); }

// Back-substitution of the echelon rows against the columns in `want`:
// returns per pivot row the entries of the fully reduced, monic (RREF) row at
// those columns.  `want` may include pivot columns; cheap because only |want|
// columns are carried.
template <class F>
std::vector<std::vector<typename F::Elem>> reduced_rows_at(const F& f, const Echelon<F>& ech,
                                                           const std::vector<int>& want) {
    const int r = ech.rank;
    const int nw = static_cast<int>(want.size());
    std::vector<int> owner(nw, -1);  // pivot row owning this column, if any
    for (int k = 0; k < r; ++k)
        for (int j = 0; j < nw; ++j)
            if (want[j] == ech.pivot_cols[k]) owner[j] = k;
    std::vector<std::vector<typename F::Elem>> red(r, std::vector<typename F::Elem>(nw, f.zero()));
    for (int k = r - 1; k >= 0; --k) {
        for (int j = 0; j < nw; ++j)
            if (want[j] > ech.pivot_cols[k]) red[k][j] = ech.rows[k][want[j]];
        for (int k2 = k + 1; k2 < r; ++k2) {
            const auto& coef = ech.rows[k][ech.pivot_cols[k2]];
            if (f.is_zero(coef)) continue;
            for (int j = 0; j < nw; ++j)
                if (!f.is_zero(red[k2][j])) red[k][j] = f.sub(red[k][j], f.mul(coef, red[k2][j]));
        }
        const auto inv = f.inv(ech.rows[k][ech.pivot_cols[k]]);
        for (int j = 0; j < nw; ++j)
            if (!f.is_zero(red[k][j])) red[k][j] = f.mul(red[k][j], inv);
        // exact values at pivot columns (1 at own, 0 at later pivots)
        for (int j = 0; j < nw; ++j) {
            if (owner[j] == k) red[k][j] = f.one();
            else if (owner[j] > k) red[k][j] = f.zero();
        }
    }
    return red;
}

}  // namespace detail

template <class F>
int rank(const Mat<F>& m) {
    return detail::echelon(m).rank;
}

template <class F>
bool invertible(const Mat<F>& m) {
    return m.is_square() && rank(m) == m.rows;
}

// Canonical basis of the right null space, from the reduced echelon
// parametrization: one vector per free column fc (in increasing column
// order), with entry 1 at fc and minus the RREF coefficients at pivots.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const Mat<F>& m) {
    const F f = m.field;
    auto ech = detail::echelon(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : ech.pivot_cols) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    auto red = detail::reduced_rows_at(f, ech, free_cols);
    std::vector<std::vector<typename F::Elem>> basis;
    basis.reserve(free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::vector<typename F::Elem> v(m.cols, f.zero());
        v[free_cols[j]] = f.one();
        for (int k = 0; k < ech.rank; ++k)
            if (!f.is_zero(red[k][j])) v[ech.pivot_cols[k]] = f.neg(red[k][j]);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
int kernel_dim(const Mat<F>& m) {
    return m.cols - rank(m);
}

// Solve A x = b exactly.  Returns the particular solution with all free
// variables zero, or nullopt when inconsistent.
template <class F>
std::optional<std::vector<typename F::Elem>> solve(const Mat<F>& a,
                                                   const std::vector<typename F::Elem>& b) {
    const F f = a.field;
    if (static_cast<int>(b.size()) != a.rows) throw ShapeMismatch("solve: rhs size mismatch");
    Mat<F> aug(f, a.rows, a.cols + 1);
    for (int r = 0; r < a.rows; ++r) {
        for (int c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols) = b[r];
    }
    auto ech = detail::echelon(aug);
    for (int c : ech.pivot_cols)
        if (c == a.cols) return std::nullopt;
    auto red = detail::reduced_rows_at(f, ech, {a.cols});
    std::vector<typename F::Elem> x(a.cols, f.zero());
    for (int k = 0; k < ech.rank; ++k) x[ech.pivot_cols[k]] = red[k][0];
    return x;
}

// Multi right-hand-side solve; nullopt when any column is inconsistent.
template <class F>
std::optional<Mat<F>> solve_matrix(const Mat<F>& a, const Mat<F>& b) {
    const F f = a.field;
    if (a.rows != b.rows) throw ShapeMismatch("solve_matrix: shape mismatch");
    Mat<F> aug(f, a.rows, a.cols + b.cols);
    for (int r = 0; r < a.rows; ++r) {
        for (int c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols; ++c) aug.at(r, a.cols + c) = b.at(r, c);
    }
    auto ech = detail::echelon(aug);
    std::vector<int> want;
    for (int c = 0; c < b.cols; ++c) want.push_back(a.cols + c);
    for (int c : ech.pivot_cols)
        if (c >= a.cols) return std::nullopt;
    auto red = detail::reduced_rows_at(f, ech, want);
    Mat<F> x(f, a.cols, b.cols);
    for (int k = 0; k < ech.rank; ++k)
        for (int c = 0; c < b.cols; ++c) x.at(ech.pivot_cols[k], c) = red[k][c];
    return x;
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& a) {
    if (!a.is_square()) throw ShapeMismatch("inverse of non-square matrix");
    // [A|I] has full row rank, so a singular A forces a pivot into the I part
    // and solve_matrix reports the inconsistency.
    return solve_matrix(a, Mat<F>::identity(a.field, a.rows));
}

}  // namespace lamrep
