#include <doctest.h>

#include <random>

#include "nimseq/detect.hpp"
#include "nimseq/random.hpp"
#include "nimseq/wythoff.hpp"
#include "oracles.hpp"

using namespace nimseq;

namespace {

ProblemInstance identity() {
    ProblemInstance inst;
    return inst;
}

}  // namespace

TEST_CASE("cut_at") {
    const DifferenceBounds b{-1, 2, 3};
    auto g = generate(simple_instance(-1, 2), 12);
    auto c = cut_at(g, 0, b);
    CHECK(c.s_entries == std::vector<std::pair<Int, Int>>{{0, 2}});
    CHECK(c.t_entries == std::vector<std::pair<Int, Int>>{{1, -1}});
    CHECK(cut_at(g, 2, b).s_entries.empty());
    CHECK(cut_at(g, 2, b).t_entries.empty());

    auto id = generate(identity(), 10);
    for (Int x = 0; x < 8; ++x) {
        auto e = cut_at(id, x, DifferenceBounds{});
        CHECK(e.s_entries.empty());
        CHECK(e.t_entries.empty());
    }
    CHECK_THROWS_AS(cut_at(g, 11, b), InsufficientData);
}

TEST_CASE("cut symmetry at settled positions") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        auto inst = random_instance(rng);
        auto b = difference_bounds(inst.ys);
        auto g = generate(inst, 300);
        for (Int x = 40; x < 250; ++x) {
            auto c = cut_at(g, x, b);
            CHECK(c.s_entries.size() == c.t_entries.size());
        }
    }
}

TEST_CASE("detect simple and identity instances") {
    for (auto m : {Method::cuts, Method::window}) {
        auto c = detect(simple_instance(-2, 2), m);
        CHECK(c == PeriodCertificate{0, 4, {2, 2, -2, -2}});
        CHECK(detect(identity(), m) == PeriodCertificate{0, 1, {0}});
    }
}

TEST_CASE("detect Wythoff row 3") {
    auto rows = analyze_rows(2);
    REQUIRE(rows.rows.size() == 3);
    auto inst = row_instance(3, rows.rows);
    CHECK(detect(inst) == PeriodCertificate{8, 6, {2, 3, -2, -4, 3, -2}});
}

TEST_CASE("minimize") {
    auto c = minimize(simple_instance(-1, 2), 6, 0);
    CHECK(c == PeriodCertificate{0, 3, {2, -1, -1}});
    CHECK(minimize(identity(), 1, 0) == PeriodCertificate{0, 1, {0}});
    CHECK(minimize(simple_instance(-1, 2), 6, 5).preperiod == 0);
    CHECK_THROWS_AS(minimize(simple_instance(-1, 2), 2, 0), InconsistentWitness);

    auto rows = analyze_rows(1);
    auto row2 = row_instance(2, rows.rows);
    auto c2 = minimize(row2, 6, 12);
    CHECK(c2.period == 3);
    CHECK(c2.diff_period == std::vector<Int>{2, -1, -1});
}

TEST_CASE("budget exhaustion") {
    DetectOptions opts;
    opts.budget = 10;
    DetectStats stats;
    CHECK_THROWS_AS(detect(simple_instance(-3, 4), opts, &stats), BudgetExceeded);
}

TEST_CASE("trace hook sees every scanned position") {
    DetectOptions opts;
    Int calls = 0;
    opts.trace = [&](Int, std::size_t) { ++calls; };
    DetectStats stats;
    detect(simple_instance(-2, 3), opts, &stats);
    CHECK(calls == stats.scanned_positions);
    CHECK(stats.witness_shift % 5 == 0);
}

TEST_CASE("exclusions from inversions") {
    auto id = generate(identity(), 30);
    CHECK(exclusions_from_inversions(id, 1).empty());

    std::vector<Int> g{2, 0, 1, 5, 3, 4};
    auto ex = exclusions_from_inversions(g, 1);
    REQUIRE(ex.count(0));
    CHECK(ex[0].count(0));
    CHECK(ex[0].count(1));
}

TEST_CASE("exclusions never meet later difference values") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto inst = random_instance(rng);
        auto b = difference_bounds(inst.ys);
        if (b.degenerate()) continue;
        const Int p = inst.ys.period;
        auto g = generate(inst, 400);
        const Int from = 60;
        auto ex = exclusions_from_inversions(g, p, from);
        for (auto& [j, values] : ex)
            for (Int v : values) {
                CHECK(v > b.mu);
                CHECK(v < b.nu);
            }
        for (Int x = from; x < 300; ++x) {
            auto it = ex.find(x % p);
            if (it != ex.end()) CHECK_FALSE(it->second.count(g[static_cast<std::size_t>(x)] - x));
        }
    }
}

TEST_CASE("detect agrees with brute force on random instances") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 120; ++trial) {
        auto inst = random_instance(rng);
        auto cuts = detect(inst, Method::cuts);
        auto window = detect(inst, Method::window);
        CHECK(cuts == window);
        CHECK(verify_certificate(inst, cuts).ok);

        auto b = difference_bounds(inst.ys);
        const Int p = inst.ys.period;
        if (!b.degenerate()) CHECK(cuts.period <= oracle::binomial(b.big_m, b.min_side()) * p);

        const Int n = std::max<Int>(2000, 8 * (cuts.preperiod + cuts.period));
        auto naive = oracle::naive_periodicity(oracle::naive_generate(inst, n), n / 8);
        CHECK(naive.period == cuts.period);
        CHECK(naive.preperiod == cuts.preperiod);
        CHECK(naive.diff_period == cuts.diff_period);
    }
}

TEST_CASE("bound report") {
    auto r = bound_report(DifferenceBounds{-2, 2, 4}, 1);
    CHECK(r.binomial_bound == 6);
    r = bound_report(DifferenceBounds{-1, 1, 2}, 1);
    CHECK(r.binomial_bound == 2);
    CHECK(r.window_bound == 4);
    r = bound_report(DifferenceBounds{0, 3, 3}, 1);
    CHECK(r.degenerate);
    CHECK(r.binomial_bound == 1);
    CHECK(r.window_bound == 1);
}
