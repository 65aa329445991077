#pragma once

#include <vector>

#include "lamrep/algebra.hpp"

namespace lamrep {

// The family M_lambda of 2-dimensional representations of the local algebra
// with `loops` loops and radical square zero: the first loop acts by E_12 and
// loop i+1 by lambda_i E_12.  Distinct lambda give non-isomorphic points, so
// the family meets each GL(2)-orbit at most once.
struct LocalFamilyPoint {
    int loops = 2;
    std::vector<Rat> lambda;                   // loops - 1 values
    std::vector<Mat<RationalField>> mats;      // loops matrices, 2x2
};

LocalFamilyPoint local_family(int loops, const std::vector<Rat>& lambda);

// Dimension bookkeeping at M_lambda:
//   tangent   = dim of solutions of M_i Z_j + Z_i M_j = 0 (all i, j),
//   orbit     = 4 - dim of the centralizer {Z : Z M_i = M_i Z},
//   quotient  = tangent - orbit,
//   component = (loops - 1) + orbit, the dimension of the closure of the
//               GL(2)-saturation of the family,
// so component > orbit exhibits an irreducible component without a dense
// orbit whenever loops >= 2.
struct LocalTangentReport {
    long tangent = 0;
    long orbit = 0;
    long quotient = 0;
    long component_dim = 0;
    long max_orbit_dim = 0;
    bool dense_orbit = false;
};

LocalTangentReport local_tangent(const LocalFamilyPoint& pt);

// Isomorphism of tuples over the free local algebra: an invertible Z with
// Z M_i = M'_i Z for all i.  Probabilistic in the same sense as
// generic_invertible_in_span.
bool local_points_isomorphic(const LocalFamilyPoint& a, const LocalFamilyPoint& b,
                             int trials = 8, std::uint64_t seed = 0);

}  // namespace lamrep
