#include <doctest.h>

#include "lamrep/json_io.hpp"
#include "oracles.hpp"

using namespace lamrep;

namespace {
const RationalField Q{};
const PrimeField FP(10007);
}

TEST_SUITE("json") {

TEST_CASE("scalar forms") {
    CHECK(rat_str(rat_of(-3, 2)) == "-3/2");
    CHECK(rat_str(rat_of(10, 5)) == "2");
    CHECK(rat_parse("4/6") == rat_of(2, 3));
    CHECK(rat_parse("-7") == rat_of(-7));
    CHECK_THROWS(rat_parse("1/0"));
    CHECK_THROWS(rat_parse("x"));
    CHECK(FP.parse("-1") == 10006);
}

TEST_CASE("field spec") {
    CHECK(FieldSpec::parse("q").is_rationals());
    CHECK(FieldSpec::parse("fp:10007").p == 10007);
    CHECK_THROWS(FieldSpec::parse("fp:10"));  // not prime
    CHECK(field_spec_from_json(to_json(FieldSpec::prime(7))) == FieldSpec::prime(7));
    CHECK(field_spec_from_json(to_json(FieldSpec::rationals())) == FieldSpec::rationals());
}

TEST_CASE("labeled matrix round trip, both fields") {
    Rng rng(19);
    auto mq = sample_soc2(Q, Partition({4, 2}, 4), Partition({3, 1}, 3), rng);
    auto jq = labeled_to_json(mq);
    auto back = labeled_from_json(jq);
    REQUIRE(std::holds_alternative<LabeledMatrix<RationalField>>(back));
    CHECK(std::get<LabeledMatrix<RationalField>>(back) == mq);

    auto mp = sample_soc2(FP, Partition({4, 2}, 4), Partition({3, 1}, 3), rng);
    auto jp = labeled_to_json(mp);
    auto backp = labeled_from_json(jp);
    REQUIRE(std::holds_alternative<LabeledMatrix<PrimeField>>(backp));
    CHECK(std::get<LabeledMatrix<PrimeField>>(backp) == mp);

    // soc^2-violating input is rejected
    jq["entries"][0][0]["coeffs"][0] = "1";  // degree-0 coefficient in a J_4 row, J_3 col
    CHECK_THROWS(labeled_from_json(jq));
}

TEST_CASE("triple round trip") {
    Rng rng(21);
    auto m = sample_soc2(Q, Partition({3, 2}, 3), Partition({2, 1}, 3), rng);
    auto r = labeled_to_triple(m, 3, 3);
    auto j = triple_to_json(r);
    auto back = triple_from_json(j);
    REQUIRE(std::holds_alternative<RepTriple<RationalField>>(back));
    const auto& rb = std::get<RepTriple<RationalField>>(back);
    CHECK(rb.A == r.A);
    CHECK(rb.B == r.B);
    CHECK(rb.C == r.C);
    CHECK(rb.m == 3);
}

TEST_CASE("trace serialization replays") {
    Rng rng(22);
    auto m = sample_soc2(FP, Partition({3, 2}, 3), Partition({3, 1}, 3), rng);
    auto tr = reduce_to_normal_form(m);
    REQUIRE(tr.has_value());
    auto j = trace_to_json(*tr);
    CHECK(j.at("steps").size() == tr->steps.size());
    // serialized ops carry legal kinds only
    for (const auto& s : j.at("steps")) {
        const std::string k = s.at("kind").get<std::string>();
        CHECK((k == "scale_row" || k == "scale_col" || k == "add_row" || k == "add_col"));
    }

    // full audit loop: parse the document back and replay it
    auto back = trace_from_json(FP, j);
    CHECK(back.result == tr->result);
    CHECK(back.steps.size() == tr->steps.size());

    // a tampered trace is rejected on replay
    auto bad = j;
    bad["result"]["entries"][0][0]["coeffs"][1] = "7";
    CHECK_THROWS(trace_from_json(FP, bad));

    // splitting traces replay too
    auto msplit = sample_soc2(FP, Partition({3, 1}, 3), Partition({2, 1}, 3), rng);
    auto spl = split_one_one(msplit);
    REQUIRE(spl.has_value());
    auto roundtrip = trace_from_json(FP, trace_to_json(*spl));
    REQUIRE(roundtrip.summands.size() == 1);
    CHECK(roundtrip.summands.front() == spl->summands.front());
}

}  // TEST_SUITE
