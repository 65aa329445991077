#include <doctest.h>

#include "lamrep/algebra.hpp"
#include "oracles.hpp"

using namespace lamrep;

namespace {
const RationalField Q{};

Mat<RationalField> qmat(int rows, int cols, std::vector<long> vals) {
    Mat<RationalField> m(Q, rows, cols);
    for (int i = 0; i < rows * cols; ++i) m.a[i] = Rat(vals[i]);
    return m;
}
}  // namespace

TEST_SUITE("exactla") {

TEST_CASE("rank examples") {
    CHECK(rank(Mat<RationalField>::identity(Q, 3)) == 3);
    CHECK(rank(Mat<RationalField>(Q, 2, 4)) == 0);
    PrimeField f2(2);
    Mat<PrimeField> ones(f2, 2, 2);
    for (auto& x : ones.a) x = 1;
    CHECK(rank(ones) == 1);  // char-2 collapse
}

TEST_CASE("kernel examples") {
    auto kb = kernel_basis(qmat(1, 2, {1, 1}));
    REQUIRE(kb.size() == 1);
    CHECK(kb[0][0] == Rat(-1));
    CHECK(kb[0][1] == Rat(1));
    CHECK(kernel_basis(Mat<RationalField>::identity(Q, 4)).empty());
    CHECK(kernel_basis(Mat<RationalField>(Q, 2, 2)).size() == 2);
}

TEST_CASE("rank-nullity and invariance on random matrices") {
    Rng rng(7);
    PrimeField fp(10007);
    for (int trial = 0; trial < 25; ++trial) {
        const int rows = 1 + rng.below(6), cols = 1 + rng.below(6);
        Mat<RationalField> m(Q, rows, cols);
        for (auto& x : m.a) x = Rat(rng.in_range(4));
        CHECK(rank(m) + static_cast<int>(kernel_basis(m).size()) == cols);

        // invariance under invertible multiplication
        auto g = oracle::random_invertible(Q, rows, rng);
        auto h = oracle::random_invertible(Q, cols, rng);
        CHECK(rank(g * m * h) == rank(m));

        // same matrix over F_p has the same rank for generic small entries;
        // check rank over Fp is never larger
        Mat<PrimeField> mp(fp, rows, cols);
        for (int i = 0; i < rows * cols; ++i)
            mp.a[i] = fp.from_int(m.a[i].get_num().get_si());
        CHECK(rank(mp) <= rank(m));
    }
}

TEST_CASE("solve and inverse") {
    auto a = qmat(2, 2, {1, 2, 3, 4});
    auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK((a * *inv) == Mat<RationalField>::identity(Q, 2));
    CHECK(!inverse(qmat(2, 2, {1, 2, 2, 4})).has_value());

    auto sol = solve(qmat(2, 2, {1, 1, 0, 1}), {Rat(3), Rat(1)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Rat(2));
    CHECK((*sol)[1] == Rat(1));
    CHECK(!solve(qmat(2, 1, {0, 0}), {Rat(1), Rat(0)}).has_value());
}

TEST_CASE("subalgebra_radical_dim examples") {
    Mat<RationalField> i2 = Mat<RationalField>::identity(Q, 2);
    Mat<RationalField> e12 = qmat(2, 2, {0, 1, 0, 0});
    Mat<RationalField> diag10 = qmat(2, 2, {1, 0, 0, 0});

    std::vector<Mat<RationalField>> just_id{i2};
    CHECK(subalgebra_radical_dim(just_id) == std::pair<int, int>{1, 0});

    std::vector<Mat<RationalField>> nilp{i2, e12};
    CHECK(subalgebra_radical_dim(nilp) == std::pair<int, int>{2, 1});

    std::vector<Mat<RationalField>> split{i2, diag10};
    CHECK(subalgebra_radical_dim(split) == std::pair<int, int>{2, 0});

    std::vector<Mat<RationalField>> no_id{e12};
    CHECK_THROWS_AS(subalgebra_radical_dim(no_id), NotUnital);
}

TEST_CASE("radical is proper on unital closed spans") {
    // upper triangular 3x3 algebra: dim 6, radical dim 3
    std::vector<Mat<RationalField>> tri;
    for (int r = 0; r < 3; ++r)
        for (int c = r; c < 3; ++c) {
            Mat<RationalField> e(Q, 3, 3);
            e.at(r, c) = 1;
            tri.push_back(e);
        }
    auto [da, dr] = subalgebra_radical_dim(tri);
    CHECK(da == 6);
    CHECK(dr == 3);
    CHECK(dr < da);
}

TEST_CASE("generic_invertible_in_span") {
    std::vector<Mat<RationalField>> ids{Mat<RationalField>::identity(Q, 3)};
    CHECK(generic_invertible_in_span(ids, 8, 0));

    std::vector<Mat<RationalField>> nilp{qmat(2, 2, {0, 1, 0, 0})};
    CHECK(!generic_invertible_in_span(nilp, 8, 0));

    std::vector<Mat<RationalField>> diags{qmat(2, 2, {1, 0, 0, 0}), qmat(2, 2, {0, 0, 0, 1})};
    CHECK(generic_invertible_in_span(diags, 8, 0));

    PrimeField tiny(5);
    std::vector<Mat<PrimeField>> small{Mat<PrimeField>::identity(tiny, 3)};
    CHECK_THROWS(generic_invertible_in_span(small, 8, 0));  // p <= 2*size^2
}

TEST_CASE("determinism of elimination") {
    Rng rng(99);
    Mat<RationalField> m(Q, 5, 7);
    for (auto& x : m.a) x = rat_of(rng.in_range(30), 1 + rng.below(4));
    auto k1 = kernel_basis(m);
    auto k2 = kernel_basis(m);
    CHECK(k1 == k2);
}

}  // TEST_SUITE
