#include "lamrep/local_family.hpp"

namespace lamrep {

namespace {

const RationalField kQ{};

Mat<RationalField> e12_times(const Rat& s) {
    Mat<RationalField> m(kQ, 2, 2);
    m.at(0, 1) = s;
    return m;
}

}  // namespace

LocalFamilyPoint local_family(int loops, const std::vector<Rat>& lambda) {
    if (loops < 2) throw Error("the local family needs at least 2 loops");
    if (static_cast<int>(lambda.size()) != loops - 1)
        throw Error("local_family expects loops-1 parameters");
    LocalFamilyPoint pt;
    pt.loops = loops;
    pt.lambda = lambda;
    pt.mats.push_back(e12_times(Rat(1)));
    for (const Rat& l : lambda) pt.mats.push_back(e12_times(l));
    return pt;
}

LocalTangentReport local_tangent(const LocalFamilyPoint& pt) {
    const int n = pt.loops;

    // tangent: unknowns Z_1..Z_n, equations M_i Z_j + Z_i M_j = 0
    Mat<RationalField> sys(kQ, 4 * n * n, 4 * n);
    const auto zidx = [](int which, int r, int c) { return 4 * which + 2 * r + c; };
    int row = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b, ++row) {
                    for (int c = 0; c < 2; ++c) {
                        // (M_i Z_j)[a][b]
                        sys.at(row, zidx(j, c, b)) =
                            sys.at(row, zidx(j, c, b)) + pt.mats[i].at(a, c);
                        // (Z_i M_j)[a][b]
                        sys.at(row, zidx(i, a, c)) =
                            sys.at(row, zidx(i, a, c)) + pt.mats[j].at(c, b);
                    }
                }
    const long tangent = kernel_dim(sys);

    // centralizer: Z M_i - M_i Z = 0 for all i
    Mat<RationalField> cent(kQ, 4 * n, 4);
    row = 0;
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b, ++row)
                for (int c = 0; c < 2; ++c) {
                    cent.at(row, 2 * a + c) = cent.at(row, 2 * a + c) + pt.mats[i].at(c, b);
                    cent.at(row, 2 * c + b) = cent.at(row, 2 * c + b) - pt.mats[i].at(a, c);
                }
    const long orbit = 4 - kernel_dim(cent);

    LocalTangentReport rep;
    rep.tangent = tangent;
    rep.orbit = orbit;
    rep.quotient = tangent - orbit;
    rep.component_dim = (n - 1) + orbit;
    rep.max_orbit_dim = orbit;
    rep.dense_orbit = rep.component_dim <= rep.max_orbit_dim;
    return rep;
}

bool local_points_isomorphic(const LocalFamilyPoint& a, const LocalFamilyPoint& b, int trials,
                             std::uint64_t seed) {
    if (a.loops != b.loops) throw ShapeMismatch("loop counts differ");
    const int n = a.loops;
    // intertwiners: Z a.M_i = b.M_i Z
    Mat<RationalField> sys(kQ, 4 * n, 4);
    int row = 0;
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q, ++row)
                for (int c = 0; c < 2; ++c) {
                    sys.at(row, 2 * p + c) = sys.at(row, 2 * p + c) + a.mats[i].at(c, q);
                    sys.at(row, 2 * c + q) = sys.at(row, 2 * c + q) - b.mats[i].at(p, c);
                }
    auto vecs = kernel_basis(sys);
    if (vecs.empty()) return false;
    std::vector<Mat<RationalField>> basis;
    for (const auto& v : vecs) {
        Mat<RationalField> z(kQ, 2, 2);
        z.a = v;
        basis.push_back(std::move(z));
    }
    return generic_invertible_in_span(basis, trials, seed);
}

}  // namespace lamrep
