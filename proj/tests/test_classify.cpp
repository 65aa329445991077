#include <doctest.h>

#include <map>
#include <set>

#include "lamrep/classify.hpp"
#include "lamrep/json_io.hpp"

using namespace lamrep;

namespace {

// range arithmetic done independently of the list builder
long long expected_count(int m, int n) {
    auto pos = [](long long x) { return x > 0 ? x : 0; };
    long long c = static_cast<long long>(m) * n;      // 1x1
    c += pos(m - 2) * pos(n - 1) + pos(n - 2) * pos(m - 1);  // 1x2 + transpose
    c += 2 * pos(m - 2) * pos(n - 2);                        // 2x2 both ways
    c += pos(m - 3) * pos(n - 2) + pos(n - 3) * pos(m - 2);  // 2x3 + transpose
    c += 2 * pos(m - 3) * pos(n - 3);                        // 3x3 both ways
    return c;
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("count_formula") {
    CHECK(count_formula(3, 3) == 15);
    CHECK(count_formula(5, 5) == 87);
    CHECK(count_formula(7, 4) == 96);
    CHECK(count_formula(10, 10) == 582);
}

TEST_CASE("list sizes match the formula for 3 <= m,n <= 12") {
    for (int m = 3; m <= 12; ++m)
        for (int n = 3; n <= 12; ++n) {
            CHECK(expected_count(m, n) == count_formula(m, n));
            CHECK(static_cast<long long>(list_general_indecomposables(m, n).size()) ==
                  count_formula(m, n));
        }
}

TEST_CASE("(3,3) breakdown: 9 + 2 + 2 + 1 + 1") {
    auto list = list_general_indecomposables(3, 3);
    REQUIRE(list.size() == 15);
    std::map<std::pair<Shape, bool>, int> counts;
    for (const auto& g : list) ++counts[{g.shape, g.transposed}];
    CHECK(counts[{Shape::OneByOne, false}] == 9);
    CHECK(counts[{Shape::OneByTwo, false}] == 2);
    CHECK(counts[{Shape::OneByTwo, true}] == 2);
    CHECK(counts[{Shape::TwoByTwo, false}] == 1);
    CHECK(counts[{Shape::TwoByTwo, true}] == 1);
}

TEST_CASE("small parameters truncate the families") {
    CHECK(list_general_indecomposables(1, 1).size() == 1);
    CHECK(list_general_indecomposables(2, 3).size() == 7);  // formula would give 6
    for (const auto& g : list_general_indecomposables(2, 3)) CHECK(g.stratum.candidate);
}

TEST_CASE("every entry passes the candidate filter and the relations") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 3}, {5, 4}, {6, 6}})
        for (const auto& g : list_general_indecomposables(m, n)) {
            CHECK(g.stratum.candidate);
            CHECK(check_relations(labeled_to_triple(g.form, m, n)));
        }
}

TEST_CASE("entries are pairwise distinct strata") {
    auto list = list_general_indecomposables(5, 5);
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (const auto& g : list) seen.insert({g.stratum.p.parts, g.stratum.q.parts});
    CHECK(seen.size() == list.size());
}

TEST_CASE("pairwise non-isomorphism within a dimension vector, (5,5)") {
    auto list = list_general_indecomposables(5, 5);
    std::map<std::pair<int, int>, std::vector<RepTriple<RationalField>>> by_dim;
    for (const auto& g : list)
        by_dim[{g.stratum.d1(), g.stratum.d2()}].push_back(labeled_to_triple(g.form, 5, 5));
    int pairs = 0;
    for (const auto& [d, triples] : by_dim)
        for (std::size_t i = 0; i < triples.size(); ++i)
            for (std::size_t j = i + 1; j < triples.size(); ++j) {
                CHECK(!is_isomorphic(triples[i], triples[j]));
                ++pairs;
            }
    CHECK(pairs > 0);  // the check must have actually compared something
}

TEST_CASE("certification of (3,3)") {
    auto rep = classify_report(3, 3, true, true);
    CHECK(rep.total == 15);
    CHECK(rep.formula == 15);
    CHECK(*rep.dedup_total == 15);
    CHECK(!rep.wild);
    for (const auto& e : rep.entries) {
        CHECK(e.certified());
        CHECK(*e.dim_top == 1);
        CHECK(*e.orbit == e.entry.stratum.dim);
    }
}

TEST_CASE("wildness flags") {
    CHECK(!is_wild(3, 3));
    CHECK(!is_wild(4, 4));
    CHECK(!is_wild(6, 3));
    CHECK(!is_wild(3, 6));
    CHECK(is_wild(5, 4));
    CHECK(is_wild(5, 5));
    CHECK(is_wild(7, 3));
}

TEST_CASE("reports are deterministic") {
    auto a = to_json(classify_report(4, 4, true, true)).dump(2);
    auto b = to_json(classify_report(4, 4, true, true)).dump(2);
    CHECK(a == b);
    auto csv = report_to_csv(classify_report(3, 3, false, false));
    CHECK(csv == report_to_csv(classify_report(3, 3, false, false)));
    // 15 entries + header
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 16);
    auto tex = report_to_tex(classify_report(3, 3, false, false));
    CHECK(tex.find("\\begin{tabular}") != std::string::npos);
    CHECK(tex.find("pmatrix") != std::string::npos);
}

}  // TEST_SUITE
