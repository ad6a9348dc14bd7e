#include <doctest.h>

#include <random>

#include "nimseq/json_io.hpp"
#include "nimseq/random.hpp"

using namespace nimseq;

TEST_CASE("instances survive a JSON round trip") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        auto inst = random_instance(rng);
        auto back = instance_from_json(parse_json(Json(inst).dump()));
        CHECK(back.ys.period == inst.ys.period);
        CHECK(back.ys.diff_sets == inst.ys.diff_sets);
        CHECK(back.seed == inst.seed);
        CHECK(generate(back, 100) == generate(inst, 100));
    }

    ProblemInstance with_prefix;
    with_prefix.ys.diff_sets = {{-1}};
    with_prefix.ys.periodic_start = 3;
    with_prefix.seed = {4};
    with_prefix.ys.prefix_sets = {{0}, {1}};
    auto j = Json(with_prefix);
    CHECK(j.contains("prefix_sets"));
    CHECK(instance_from_json(j).ys.prefix_sets == with_prefix.ys.prefix_sets);
    CHECK_FALSE(Json(simple_instance(-1, 2)).contains("prefix_sets"));
}

TEST_CASE("optional instance fields default") {
    auto inst = instance_from_json(parse_json(R"({"p":1,"diff_sets":[[0]]})"));
    CHECK(inst.seed.empty());
    CHECK(inst.ys.periodic_start == 0);
}

TEST_CASE("malformed and invalid input") {
    try {
        parse_json(R"({"p": 1, "diff_sets": [[0]])");
        FAIL("accepted truncated JSON");
    } catch (const ValidationError& e) {
        CHECK(e.index() > 0);
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
    CHECK_THROWS_AS(instance_from_json(parse_json(R"({"p":"x","diff_sets":[[0]]})")), ValidationError);
    CHECK_THROWS_AS(instance_from_json(parse_json(R"({"diff_sets":[[0]]})")), ValidationError);
    CHECK_THROWS_AS(instance_from_json(parse_json(R"({"p":2,"diff_sets":[[0]]})")), ValidationError);
    CHECK_THROWS_AS(instance_from_json(parse_json(R"({"p":1,"diff_sets":[[0]],"seed":[1,1]})")), ValidationError);
}

TEST_CASE("certificates and cut sets") {
    PeriodCertificate c{8, 6, {2, 3, -2, -4, 3, -2}};
    CHECK(certificate_from_json(parse_json(Json(c).dump())) == c);
    CHECK_THROWS_AS(certificate_from_json(parse_json("[1,2]")), ValidationError);

    MultiCut mc{-2, 3, {CutRow{{{0, 2}}, {{1, -2}}}, CutRow{}}};
    Json j = mc;
    CHECK(j["rows"][0]["s"] == Json::parse("[[0,2]]"));
    CHECK(j.get<MultiCut>() == mc);
}

TEST_CASE("bound report keys") {
    auto j = Json(bound_report(DifferenceBounds{-3, 3, 6}, 1));
    for (const char* key : {"mu", "nu", "M", "p", "degenerate", "window_bound", "binomial_bound", "k_paper",
                            "k_effective", "asymptotic_estimate", "preperiod_bound_exact",
                            "preperiod_bound_paper", "preperiod_bound_combined", "combined_valid"})
        CHECK(j.contains(key));
    CHECK(j["k_paper"] == 6);
    CHECK(j["binomial_bound"] == 20);
    CHECK(Json(bound_report(DifferenceBounds{-1, 1, 2}, 1))["asymptotic_estimate"].is_null());
}
