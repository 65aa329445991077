#pragma once

#include <cstddef>
#include <vector>

#include "lamrep/errors.hpp"
#include "lamrep/field.hpp"

namespace lamrep {

// Dense matrix over a field F (RationalField or PrimeField), row-major.
// Zero rows/columns are legal; several pipelines produce empty blocks.
template <class F>
struct Mat {
    using Elem = typename F::Elem;

    F field{};
    int rows = 0;
    int cols = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(F f, int r, int c) : field(f), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, f.zero()) {}

    Elem& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Elem& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static Mat identity(F f, int n) {
        Mat m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    bool is_square() const { return rows == cols; }

    bool is_zero() const {
        for (const Elem& x : a)
            if (!field.is_zero(x)) return false;
        return true;
    }

    bool operator==(const Mat& other) const {
        if (rows != other.rows || cols != other.cols) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!field.eq(a[i], other.a[i])) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(field, cols, rows);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    Mat operator+(const Mat& o) const {
        require_same_shape(o);
        Mat s(field, rows, cols);
        for (std::size_t i = 0; i < a.size(); ++i) s.a[i] = field.add(a[i], o.a[i]);
        return s;
    }

    Mat operator-(const Mat& o) const {
        require_same_shape(o);
        Mat s(field, rows, cols);
        for (std::size_t i = 0; i < a.size(); ++i) s.a[i] = field.sub(a[i], o.a[i]);
        return s;
    }

    Mat operator-() const {
        Mat s(field, rows, cols);
        for (std::size_t i = 0; i < a.size(); ++i) s.a[i] = field.neg(a[i]);
        return s;
    }

    Mat operator*(const Mat& o) const {
        if (cols != o.rows) throw ShapeMismatch("matrix product shape mismatch");
        Mat prod(field, rows, o.cols);
        for (int r = 0; r < rows; ++r)
            for (int k = 0; k < cols; ++k) {
                const Elem& x = at(r, k);
                if (field.is_zero(x)) continue;
                for (int c = 0; c < o.cols; ++c) {
                    const Elem& y = o.at(k, c);
                    if (field.is_zero(y)) continue;
                    prod.at(r, c) = field.add(prod.at(r, c), field.mul(x, y));
                }
            }
        return prod;
    }

    Mat scaled(const Elem& s) const {
        Mat m(field, rows, cols);
        for (std::size_t i = 0; i < a.size(); ++i) m.a[i] = field.mul(a[i], s);
        return m;
    }

    Mat pow(int e) const {
        if (!is_square()) throw ShapeMismatch("pow of non-square matrix");
        Mat result = identity(field, rows);
        for (int i = 0; i < e; ++i) result = result * *this;
        return result;
    }

    Mat submatrix(const std::vector<int>& keep_rows, const std::vector<int>& keep_cols) const {
        Mat s(field, static_cast<int>(keep_rows.size()), static_cast<int>(keep_cols.size()));
        for (std::size_t r = 0; r < keep_rows.size(); ++r)
            for (std::size_t c = 0; c < keep_cols.size(); ++c)
                s.at(static_cast<int>(r), static_cast<int>(c)) = at(keep_rows[r], keep_cols[c]);
        return s;
    }

    void require_same_shape(const Mat& o) const {
        if (rows != o.rows || cols != o.cols) throw ShapeMismatch("matrix shape mismatch");
    }
};

// diag(P, Q).
template <class F>
Mat<F> block_diag(const Mat<F>& p, const Mat<F>& q) {
    Mat<F> m(p.field, p.rows + q.rows, p.cols + q.cols);
    for (int r = 0; r < p.rows; ++r)
        for (int c = 0; c < p.cols; ++c) m.at(r, c) = p.at(r, c);
    for (int r = 0; r < q.rows; ++r)
        for (int c = 0; c < q.cols; ++c) m.at(p.rows + r, p.cols + c) = q.at(r, c);
    return m;
}

// Single nilpotent Jordan block of size k as the lower shift: e_i -> e_{i+1}.
template <class F>
Mat<F> jordan_block(F f, int k) {
    Mat<F> m(f, k, k);
    for (int i = 0; i + 1 < k; ++i) m.at(i + 1, i) = f.one();
    return m;
}

// Block-diagonal nilpotent of Jordan type given by the part sizes.
template <class F>
Mat<F> jordan_of_type(F f, const std::vector<int>& parts) {
    int d = 0;
    for (int p : parts) d += p;
    Mat<F> m(f, d, d);
    int off = 0;
    for (int p : parts) {
        for (int i = 0; i + 1 < p; ++i) m.at(off + i + 1, off + i) = f.one();
        off += p;
    }
    return m;
}

}  // namespace lamrep
