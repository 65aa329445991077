#include <doctest.h>

#include "lamrep/endo.hpp"
#include "lamrep/reduction.hpp"
#include "oracles.hpp"

using namespace lamrep;

namespace {
const RationalField Q{};
const PrimeField FP(10007);
}  // namespace

TEST_SUITE("reduce") {

TEST_CASE("split_one_one splits the scalar corner") {
    Rng rng(3);
    // rows (3,1), cols (2,1): the J_1 x J_1 corner is a scalar
    auto m = sample_soc2(Q, Partition({3, 1}, 3), Partition({2, 1}, 3), rng);
    m.entry(1, 1).c[0] = 7;  // make the corner nonzero
    auto tr = split_one_one(m);
    REQUIRE(tr.has_value());
    CHECK(verify_trace(*tr));
    REQUIRE(tr->summands.size() == 1);
    const auto& s = tr->summands.front();
    CHECK(s.row_labels == (Partition{1}));
    CHECK(s.col_labels == (Partition{1}));
    CHECK(s.entry(0, 0).c[0] == Rat(1));
    CHECK(tr->result.row_labels == (Partition{3}));
    CHECK(tr->result.col_labels == (Partition{2}));

    // identically zero input is not general
    LabeledMatrix<RationalField> zero(Q, Partition({3, 1}, 3), Partition({2, 1}, 3));
    CHECK(!split_one_one(zero).has_value());

    CHECK_THROWS(split_one_one(sample_soc2(Q, Partition({2}, 3), Partition({2, 1}, 3), rng)));
}

TEST_CASE("split_one_one succeeds on random samples over F_10007") {
    Rng rng(2024);
    int ok = 0;
    for (int t = 0; t < 100; ++t) {
        auto m = sample_soc2(FP, Partition({2, 1, 1}, 3), Partition({3, 1, 1}, 3), rng);
        auto tr = split_one_one(m);
        if (tr) {
            CHECK(verify_trace(*tr));
            ++ok;
        }
    }
    CHECK(ok == 100);
}

TEST_CASE("split_min_parts: both minima above one") {
    Rng rng(5);
    // p = (3,2), q = (4,2): splits [T^0] with labels J_2/J_2
    for (int t = 0; t < 50; ++t) {
        auto m = sample_soc2(FP, Partition({4, 2}, 4), Partition({3, 2}, 3), rng);
        auto tr = split_min_parts(m);
        REQUIRE(tr.has_value());
        CHECK(verify_trace(*tr));
        const auto& s = tr->summands.front();
        CHECK(s.row_labels == (Partition{2}));
        CHECK(s.col_labels == (Partition{2}));
        CHECK(s.entry(0, 0) == TruncPoly<PrimeField>::constant(FP, 2, 1));
        CHECK(s.d1() == 2);  // dimension vector (k, l) = (2, 2)
        CHECK(s.d2() == 2);
    }
}

TEST_CASE("split_min_parts: part 2 against min(q) = r") {
    Rng rng(6);
    // p = (2,1), q = (3): splits [T] with labels J_3/J_2
    for (int t = 0; t < 50; ++t) {
        auto m = sample_soc2(FP, Partition({3}, 3), Partition({2, 1}, 2), rng);
        auto tr = split_min_parts(m);
        REQUIRE(tr.has_value());
        CHECK(verify_trace(*tr));
        const auto& s = tr->summands.front();
        CHECK(s.row_labels == (Partition{3}));
        CHECK(s.col_labels == (Partition{2}));
        CHECK(s.entry(0, 0) == TruncPoly<PrimeField>::monomial(FP, 3, 1, 1));
    }

    // degenerate pivot: T-coefficient zero everywhere -> not general
    LabeledMatrix<RationalField> degen(Q, Partition({3}, 3), Partition({2, 1}, 2));
    degen.entry(0, 0).c[2] = 1;  // only the T^2 part
    CHECK(!split_min_parts(degen).has_value());
}

TEST_CASE("reduce_to_normal_form: fixed point has an empty trace") {
    auto nf = normal_form(Q, 5, 4, Partition({5, 3, 1}, 5), Partition({4, 2}, 4));
    auto tr = reduce_to_normal_form(nf);
    REQUIRE(tr.has_value());
    CHECK(tr->steps.empty());
    CHECK(tr->result == nf);
}

TEST_CASE("reduce_to_normal_form on sampled general points") {
    Rng rng(7);
    std::vector<std::pair<Partition, Partition>> strata = {
        {Partition({3, 1}, 3), Partition({3, 2}, 3)},       // 2x2 family
        {Partition({4, 1}, 4), Partition({3}, 4)},          // 1x2 family
        {Partition({5, 3, 1}, 5), Partition({5, 4, 2}, 5)}, // 3x3 family
        {Partition({5, 3, 1}, 5), Partition({4, 2}, 4)},    // 2x3 family
        {Partition({4}, 4), Partition({3}, 3)},             // 1x1 family
        {Partition({5, 5, 3, 1}, 5), Partition({4, 2, 2}, 4)},  // repeated parts allowed
        {Partition({3, 1}, 3), Partition({4, 3, 2}, 4)},    // more rows than columns
    };
    for (const auto& [p, q] : strata) {
        int ok = 0;
        for (int t = 0; t < 60; ++t) {
            auto m = sample_soc2(FP, q, p, rng);
            auto tr = reduce_to_normal_form(m);
            if (!tr) continue;
            CHECK(verify_trace(*tr));
            CHECK(tr->result ==
                  normal_form(FP, p.bound, q.bound, tr->input.col_labels, tr->input.row_labels));
            ++ok;
        }
        CHECK(ok >= 58);  // not-general samples are rare at p = 10007
    }
}

TEST_CASE("over Q with coefficients in [-100,100] every sample is general") {
    Rng rng(88);
    std::vector<std::pair<Partition, Partition>> strata = {
        {Partition({3, 1}, 3), Partition({3, 2}, 3)},
        {Partition({4, 1}, 4), Partition({3}, 4)},
        {Partition({5, 3, 1}, 5), Partition({5, 4, 2}, 5)},
        {Partition({4}, 4), Partition({3}, 3)},
    };
    for (const auto& [p, q] : strata) {
        int not_general = 0;
        for (int t = 0; t < 200; ++t) {
            auto m = sample_soc2(Q, q, p, rng);
            if (!reduce_to_normal_form(m)) ++not_general;
        }
        CHECK(not_general == 0);
    }
}

TEST_CASE("reduced point stays in the same orbit") {
    Rng rng(8);
    for (int t = 0; t < 10; ++t) {
        Partition p({4, 3, 1}, 4), q({4, 4, 2}, 4);
        auto m = sample_soc2(FP, q, p, rng);
        auto tr = reduce_to_normal_form(m);
        if (!tr) continue;
        auto before = labeled_to_triple(m, 4, 4);
        auto after = labeled_to_triple(tr->result, 4, 4);
        CHECK(is_isomorphic(before, after));
    }
}

TEST_CASE("tread/riser staircase walks the displayed intermediate shapes") {
    // p = (5,4,1), q = (4,3,2) over Q with generic integer coefficients
    Rng rng(9);
    Partition p({5, 4, 1}, 5), q({4, 3, 2}, 4);
    auto m = sample_soc2(Q, q, p, rng);

    detail::OpRecorder<RationalField> rec(m);
    const int nr = 3, nc = 3;

    // first tread: bottom-right, J_1 column; after clearing, the rightmost
    // column is (0, ..., 0, T^{q_l - 1})
    REQUIRE(detail::rescue_pivot(rec, true, nr - 1, nc - 1, 1));
    detail::clear_column_with_tread(rec, nr - 1, nc - 1, 1);
    CHECK(rec.current.entry(0, 2).is_zero());
    CHECK(rec.current.entry(1, 2).is_zero());
    CHECK(rec.current.entry(2, 2) == TruncPoly<RationalField>::monomial(Q, 2, 1, Rat(1)));

    // first riser: left of the tread, scaled to T^{q_l - 2}, clears its row
    REQUIRE(detail::rescue_pivot(rec, false, nr - 1, nc - 2, 0));
    detail::clear_row_with_riser(rec, nr - 1, nc - 2, 0);
    CHECK(rec.current.entry(2, 0).is_zero());
    CHECK(rec.current.entry(2, 1) == TruncPoly<RationalField>::constant(Q, 2, Rat(1)));

    // remaining steps reach the staircase
    REQUIRE(detail::rescue_pivot(rec, true, 1, 1, 1));
    detail::clear_column_with_tread(rec, 1, 1, 1);
    REQUIRE(detail::rescue_pivot(rec, false, 1, 0, 1));
    detail::clear_row_with_riser(rec, 1, 0, 1);
    REQUIRE(detail::rescue_pivot(rec, true, 0, 0, 2));
    detail::clear_column_with_tread(rec, 0, 0, 2);
    CHECK(rec.current == normal_form(Q, 5, 4, p, q));
}

TEST_CASE("split_repeated_parts: repeated part in p") {
    // p = (4,4,3,1), q = (4,3,2): removes one 4 from p and q_s from q
    Partition p({4, 4, 3, 1}, 4), q({4, 3, 2}, 4);
    auto nf = normal_form(Q, 4, 4, p, q);
    auto tr = split_repeated_parts(nf);
    CHECK(verify_trace(tr));
    REQUIRE(tr.summands.size() == 1);
    const auto& s = tr.summands.front();
    CHECK(s.col_labels == (Partition{4}));  // J_m column
    CHECK(s.row_labels.length() == 1);
    CHECK(tr.result.col_labels == (Partition{4, 3, 1}));
    // result is exactly the smaller staircase
    CHECK(tr.result == normal_form(Q, 4, 4, Partition({4, 3, 1}, 4),
                                   tr.result.row_labels));
}

TEST_CASE("split_repeated_parts: repeated 2 in q") {
    // q has b_2 = 2: splits a summand with a J_2 row
    Partition p({5, 3, 1}, 5), q({4, 2, 2}, 4);
    auto nf = normal_form(Q, 5, 4, p, q);
    auto tr = split_repeated_parts(nf);
    CHECK(verify_trace(tr));
    const auto& s = tr.summands.front();
    CHECK(s.row_labels == (Partition{2}));
    CHECK(tr.result.row_labels == (Partition{4, 2}));
    CHECK(tr.result == normal_form(Q, 5, 4, tr.result.col_labels, tr.result.row_labels));
}

TEST_CASE("split_repeated_parts: multiplicity-free input") {
    auto nf = normal_form(Q, 5, 4, Partition({5, 3, 1}, 5), Partition({4, 2}, 4));
    CHECK_THROWS_AS(split_repeated_parts(nf), NoRepeatedPart);
    // non-normal-form input is rejected
    Rng rng(10);
    auto m = sample_soc2(Q, Partition({4, 2, 2}, 4), Partition({5, 3, 1}, 5), rng);
    CHECK_THROWS_AS(split_repeated_parts(m), Error);
}

TEST_CASE("iterating repeated-part splits reaches a multiplicity-free form") {
    Partition p({5, 5, 5, 3, 1}, 5), q({4, 4, 2, 2}, 4);
    auto cur = normal_form(Q, 5, 4, p, q);
    int guard = 0;
    while (true) {
        bool has_repeat = false;
        for (int i = 0; i + 1 < cur.col_labels.length(); ++i)
            has_repeat = has_repeat || cur.col_labels[i] == cur.col_labels[i + 1];
        for (int i = 0; i + 1 < cur.row_labels.length(); ++i)
            has_repeat = has_repeat || cur.row_labels[i] == cur.row_labels[i + 1];
        if (!has_repeat) break;
        auto tr = split_repeated_parts(cur);
        CHECK(verify_trace(tr));
        cur = tr.result;
        REQUIRE(++guard < 10);
    }
    CHECK(cur.col_labels.length() <= 3);
}

TEST_CASE("rescue permutes equal labels into pivot position") {
    // two rows labeled 2; make the bottom-row pivot entry degenerate
    Partition p({3, 1}, 3), q({2, 2}, 3);
    Rng rng(11);
    auto m = sample_soc2(FP, q, p, rng);
    m.entry(1, 1).c[1] = 0;  // kill the unit coefficient of the bottom tread
    m.entry(0, 1).c[1] = 5;  // sibling row can rescue
    auto tr = reduce_to_normal_form(m);
    REQUIRE(tr.has_value());
    CHECK(verify_trace(*tr));
    // but if every same-label candidate is degenerate, the point is not general
    m.entry(0, 1).c[1] = 0;
    CHECK(!reduce_to_normal_form(m).has_value());
}

TEST_CASE("reduce rejects labels outside the staircase domain") {
    Rng rng(12);
    auto m = sample_soc2(Q, Partition({3, 1}, 3), Partition({2, 2}, 3), rng);
    CHECK_THROWS_AS(reduce_to_normal_form(m), NotCandidate);
}

}  // TEST_SUITE
