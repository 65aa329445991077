#include <doctest.h>

#include "lamrep/partition.hpp"
#include "oracles.hpp"

using namespace lamrep;

TEST_SUITE("partitions") {

TEST_CASE("enumerate") {
    auto p32 = enumerate_partitions(3, 2);
    REQUIRE(p32.size() == 2);
    CHECK(p32[0] == (Partition{2, 1}));
    CHECK(p32[1] == (Partition{1, 1, 1}));

    auto p41 = enumerate_partitions(4, 1);
    REQUIRE(p41.size() == 1);
    CHECK(p41[0] == (Partition{1, 1, 1, 1}));

    auto p43 = enumerate_partitions(4, 3);
    REQUIRE(p43.size() == 4);
    CHECK(p43[0] == (Partition{3, 1}));
    CHECK(p43[1] == (Partition{2, 2}));
    CHECK(p43[2] == (Partition{2, 1, 1}));
    CHECK(p43[3] == (Partition{1, 1, 1, 1}));

    CHECK(enumerate_partitions(0, 3).size() == 1);  // the empty partition

    // counts against the classical recurrence
    for (int d = 1; d <= 9; ++d)
        for (int e = 1; e <= d; ++e)
            CHECK(static_cast<long>(enumerate_partitions(d, e).size()) ==
                  oracle::partition_count(d, e));
}

TEST_CASE("reverse-lexicographic order") {
    auto all = enumerate_partitions(6, 6);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i].parts < all[i - 1].parts);
}

TEST_CASE("dominance examples") {
    CHECK(dominance_leq(Partition{1, 1, 1, 1}, Partition{2, 1, 1}));
    CHECK(dominance_leq(Partition{2, 1, 1}, Partition{2, 2}));
    CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
    CHECK(dominance_leq(Partition{3, 1}, Partition{4}));
    CHECK(!dominance_leq(Partition{3, 1}, Partition{2, 2}));
    // incomparable pair
    CHECK(!dominance_leq(Partition{2, 2, 2}, Partition{3, 1, 1, 1}));
    CHECK(!dominance_leq(Partition{3, 1, 1, 1}, Partition{2, 2, 2}));
    CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{3}), UnequalWeight);
}

TEST_CASE("dominance is a partial order on P_6(6)") {
    auto all = enumerate_partitions(6, 6);
    for (const auto& p : all) CHECK(dominance_leq(p, p));
    for (const auto& p : all)
        for (const auto& q : all) {
            if (dominance_leq(p, q) && dominance_leq(q, p)) CHECK(p == q);
            for (const auto& r : all)
                if (dominance_leq(p, q) && dominance_leq(q, r)) CHECK(dominance_leq(p, r));
        }
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition{3, 1}) == (Partition{2, 1, 1}));
    CHECK(conjugate(Partition{1, 1, 1, 1}) == (Partition{4}));
    for (const auto& p : enumerate_partitions(8, 5)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("bar") {
    CHECK(bar(Partition{5, 3, 2, 1}) == (Partition{2, 2, 2, 1}));
    CHECK(bar(Partition{1, 1}) == (Partition{1, 1}));
    for (const auto& p : enumerate_partitions(6, 6)) {
        CHECK(bar(bar(p)) == bar(p));
        CHECK(bar(p).length() == p.length());
    }
}

TEST_CASE("nilpotent orbit dimensions") {
    const RationalField q{};
    CHECK(nilpotent_orbit_dim(Partition{1, 1, 1, 1}, 4) == 0);  // zero matrix
    CHECK_THROWS_AS(nilpotent_orbit_dim(Partition{2}, 3), UnequalWeight);

    // against the centralizer-kernel oracle: dim orbit = d^2 - dim centralizer
    for (int d = 1; d <= 6; ++d)
        for (const auto& p : enumerate_partitions(d, d)) {
            auto n = jordan_of_type(q, p.parts);
            CHECK(nilpotent_orbit_dim(p, d) ==
                  static_cast<long>(d) * d - oracle::centralizer_dim(n));
        }
    // regular nilpotent: d^2 - d
    for (int d = 1; d <= 6; ++d)
        CHECK(nilpotent_orbit_dim(Partition(std::vector<int>{d}, d), d) == d * d - d);
    CHECK(nilpotent_orbit_dim(Partition{2, 1}, 3) == 4);
}

TEST_CASE("orbit dimension respects dominance") {
    for (int d = 1; d <= 6; ++d) {
        auto all = enumerate_partitions(d, d);
        for (const auto& p : all)
            for (const auto& q : all)
                if (dominance_leq(p, q))
                    CHECK(nilpotent_orbit_dim(p, d) <= nilpotent_orbit_dim(q, d));
    }
}

TEST_CASE("conjugate squares identity") {
    for (int d = 1; d <= 7; ++d)
        for (const auto& p : enumerate_partitions(d, d)) {
            long s = 0;
            for (int part : conjugate(p).parts) s += static_cast<long>(part) * part;
            CHECK(nilpotent_orbit_dim(p, d) + s == static_cast<long>(d) * d);
        }
}

TEST_CASE("bar is monotone where both bars keep equal weight") {
    for (int d = 1; d <= 6; ++d) {
        auto all = enumerate_partitions(d, d);
        for (const auto& p : all)
            for (const auto& q : all) {
                if (!dominance_leq(p, q)) continue;
                Partition bp = bar(p), bq = bar(q);
                if (bp.weight() != bq.weight()) continue;
                CHECK(dominance_leq(bp, bq));
            }
    }
}

TEST_CASE("parsing and printing") {
    CHECK(Partition::parse("3,1,1") == (Partition{3, 1, 1}));
    CHECK(Partition::parse("3,1^2") == (Partition{3, 1, 1}));
    CHECK(Partition::parse("5^2,4,2^0,1") == (Partition{5, 5, 4, 1}));
    CHECK(Partition{3, 1, 1}.str() == "3,1,1");
    CHECK_THROWS(Partition::parse("1,3"));
    CHECK_THROWS(Partition::parse("0"));
    CHECK_THROWS_AS(Partition::parse("7,1", 5), PartExceedsBound);
}

}  // TEST_SUITE
