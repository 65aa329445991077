#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamrep/labeled_matrix.hpp"
#include "lamrep/partition.hpp"

namespace lamrep {

// h(p, q) = dim soc^2 Hom = sum over all pairs of parts of min(2, p_j, q_i).
long h_of(const Partition& p, const Partition& q);

// Dimension of the stratum of rep_Lambda(d) with Jordan types (p, q): the
// total space of a vector bundle of rank h over the product of the two
// nilpotent orbits.
long stratum_dim(const Partition& p, const Partition& q);

// Sufficient condition for closure containment of strata: (p', q') <= (p, q)
// componentwise in dominance with equal h.  Never claims non-containment.
bool containment_hint(const Partition& p_small, const Partition& q_small, const Partition& p,
                      const Partition& q);

// The five classification shapes, in the orientation where the column
// partition carries the single part of size 1 (except 1x1, which has
// arbitrary single parts).
enum class Shape { OneByOne, OneByTwo, TwoByTwo, TwoByThree, ThreeByThree };

const char* shape_name(Shape s);
int shape_rows(Shape s);
int shape_cols(Shape s);

// Is (p, q) one of the five shapes of Lambda(m,n), in the primary
// orientation, with the exact parameter ranges (multiplicity-free, middle
// parts anchored below the bounds, long shapes anchored at the bounds)?
std::optional<Shape> classification_shape(int m, int n, const Partition& p, const Partition& q);

// True iff (p, q) or its transpose-dual (q, p) in Lambda(n,m) matches one of
// the five classification shapes.  This is the necessary condition for the
// stratum closure to be an indecomposable irreducible component; candidacy is
// never a component certificate.
bool candidate_filter(int m, int n, const Partition& p, const Partition& q);

// Shapes the staircase reduction handles: p = (m^am, k^ak, 1) with one part 1
// and no part 2, q = (n^bn, l^bl, 2^b2) with min >= 2 (am, bn, b2 arbitrary),
// or a single part on both sides.  Supersedes candidate_filter: repeated
// parts are allowed here and split off afterwards.
bool is_staircase_shape(int m, int n, const Partition& p, const Partition& q);

struct Stratum {
    int m = 0, n = 0;
    Partition p, q;
    long h = 0;
    long dim = 0;
    bool candidate = false;

    int d1() const { return p.weight(); }
    int d2() const { return q.weight(); }
};

Stratum make_stratum(int m, int n, const Partition& p, const Partition& q);

// Cells (row, col, exponent) of the parameter-free staircase matrix M_{p,q}:
// nonzero entries sit on the two diagonals col - row in {delta-1, delta} for
// delta = l(p) - l(q), each carrying the general exponent T^*.
struct StaircaseCell {
    int row, col, exponent;
};
std::vector<StaircaseCell> staircase_cells(const Partition& p, const Partition& q);

// The parameter-free matrix M_{p,q} as a labeled matrix over F, for any
// bounded nonempty labels.  It represents the dense orbit of its stratum
// only for the staircase shapes in the primary orientation (and their
// single-part degenerations); elsewhere it is the formal staircase.
template <class F>
LabeledMatrix<F> normal_form(F f, int m, int n, const Partition& p, const Partition& q) {
    if (p.empty() || q.empty()) throw NotCandidate("normal form needs nonempty labels");
    if (p.max_part() > m || q.max_part() > n)
        throw PartExceedsBound("label exceeds the algebra's nilpotency bound");
    LabeledMatrix<F> nf(f, Partition(q.parts, n), Partition(p.parts, m));
    for (const StaircaseCell& cell : staircase_cells(p, q))
        nf.entry(cell.row, cell.col) =
            TruncPoly<F>::monomial(f, q[cell.row], cell.exponent, f.one());
    nf.validate();
    return nf;
}

// One member of the finite list of general indecomposables of Lambda(m,n).
// Transposed entries store the labels already swapped into Lambda(m,n).
struct GeneralIndecomposable {
    Shape shape = Shape::OneByOne;
    bool transposed = false;
    // labels of the primary-orientation display: cols (u) / (t,u) / (s,t,u),
    // rows (z) / (y,z) / (x,y,z)
    std::vector<int> col_params;
    std::vector<int> row_params;
    Stratum stratum;  // in Lambda(m,n), transposition already applied
    LabeledMatrix<RationalField> form;

    std::string params_str() const;
};

GeneralIndecomposable make_general_indecomposable(int m, int n, Shape shape,
                                                  const std::vector<int>& col_params,
                                                  const std::vector<int>& row_params);

// Duality Lambda(m,n) <-> Lambda(n,m): swaps the partitions, transposes the
// T^*-pattern, flips the orientation flag.  An involution.
GeneralIndecomposable transpose_dual(const GeneralIndecomposable& g);

}  // namespace lamrep
