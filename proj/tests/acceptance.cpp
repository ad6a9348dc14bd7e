// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "nimseq/json_io.hpp"
#include "nimseq/optimize.hpp"
#include "nimseq/wythoff.hpp"
#include "oracles.hpp"

using namespace nimseq;

namespace {

// Time limits in seconds; zero means no limit.
constexpr double kLimitWythoffTable = 5.0;
constexpr double kLimitWythoffMatrix = 1.0;
constexpr double kLimitSimpleFamily = 1.0;
constexpr double kLimitCrossAgreement = 60.0;
constexpr double kLimitDigraph = 30.0;
constexpr double kLimitExtremal = 120.0;
constexpr double kLimitAsymptotics = 30.0;

// Asymptotic ratio window.
constexpr double kRatioLow = 0.5;
constexpr double kRatioHigh = 1.5;

// Seeds for the random samples.
constexpr std::uint64_t kSeedDegenerate = 404;
constexpr std::uint64_t kSeedRandom = 20250101;
constexpr std::uint64_t kSeedRoundTrip = 1717;
constexpr std::uint64_t kSeedCutSets = 8080;

constexpr int kRandomInstances = 200;

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

int failures = 0;

void criterion(int n, const char* name, double limit, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out.ok && limit > 0 && secs > limit) {
        out.ok = false;
        out.note = "took " + std::to_string(secs) + " s, limit " + std::to_string(limit) + " s";
    }
    if (!out.ok) ++failures;
    std::printf("%s %2d %s (%.3f s)%s%s\n", out.ok ? "PASS" : "FAIL", n, name, secs, out.note.empty() ? "" : ": ",
                out.note.c_str());
    std::fflush(stdout);
}

std::string dump(const ProblemInstance& inst) { return Json(inst).dump(); }

std::vector<ProblemInstance> random_sample() {
    std::mt19937_64 rng(kSeedRandom);
    std::vector<ProblemInstance> out;
    for (int i = 0; i < kRandomInstances; ++i) out.push_back(random_instance(rng));
    return out;
}

// Obstruction sets entirely on one side of zero, so one difference bound is degenerate.
ProblemInstance degenerate_instance(std::mt19937_64& rng, bool positive) {
    std::uniform_int_distribution<Int> period(1, 4), coin(0, 1), seed_len(0, 3), value(0, 8);
    ProblemInstance inst;
    inst.ys.period = period(rng);
    inst.ys.diff_sets.assign(static_cast<std::size_t>(inst.ys.period), {});
    bool any = false;
    while (!any) {
        for (auto& set : inst.ys.diff_sets) {
            set.clear();
            for (Int k = 1; k <= 4; ++k)
                if (coin(rng)) set.push_back(positive ? k : -k);
            any = any || !set.empty();
        }
    }
    inst.ys.normalize();
    const Int len = seed_len(rng);
    while (static_cast<Int>(inst.seed.size()) < len) {
        Int v = value(rng);
        if (std::find(inst.seed.begin(), inst.seed.end(), v) == inst.seed.end()) inst.seed.push_back(v);
    }
    return inst;
}

void wythoff_table(Outcome& out) {
    auto a = analyze_rows(3);
    out.require(!a.failure, "analysis failed");
    out.require(a.rows.size() == 4, "expected four rows");
    if (!out.ok) return;
    const std::vector<PeriodCertificate> expected{
        {0, 1, {0}}, {0, 3, {1, 1, -2}}, {0, 3, {2, -1, -1}}, {8, 6, {2, 3, -2, -4, 3, -2}}};
    for (std::size_t y = 0; y < 4; ++y)
        out.require(a.rows[y].certificate == expected[y], "row " + std::to_string(y) + " differs");
}

void wythoff_matrix(Outcome& out) {
    const std::vector<std::vector<Int>> expected{
        {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13},
        {1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9, 13, 14},
        {2, 0, 1, 5, 3, 4, 8, 6, 7, 11, 9, 10, 14, 12},
        {3, 4, 5, 6, 2, 0, 1, 9, 10, 12, 8, 7, 15, 11},
    };
    out.require(grundy_table(4, 14) == expected, "matrix differs");
}

void simple_family(Outcome& out) {
    for (Int mu = -1; mu >= -4; --mu)
        for (Int nu = 1; nu <= 4; ++nu) {
            std::vector<Int> diff(static_cast<std::size_t>(-mu), nu);
            diff.insert(diff.end(), static_cast<std::size_t>(nu), mu);
            const PeriodCertificate want{0, nu - mu, diff};
            out.require(detect(simple_instance(mu, nu)) == want,
                        "(" + std::to_string(mu) + ", " + std::to_string(nu) + ")");
        }
}

void degenerate(Outcome& out) {
    std::mt19937_64 rng(kSeedDegenerate);
    for (int i = 0; i < 20; ++i) {
        auto inst = degenerate_instance(rng, i % 2 == 0);
        auto b = difference_bounds(inst.ys);
        out.require(b.degenerate(), "generator produced non-degenerate bounds " + dump(inst));
        auto c = detect(inst);
        out.require(c.period == 1 && c.diff_period == std::vector<Int>{0}, "not period 1: " + dump(inst));
        out.require(verify_certificate(inst, c).ok, "unverified: " + dump(inst));
    }
}

void cross_agreement(Outcome& out) {
    for (const auto& inst : random_sample()) {
        auto cuts = detect(inst, Method::cuts);
        auto window = detect(inst, Method::window);
        out.require(cuts == window, "methods disagree on " + dump(inst));
        out.require(verify_certificate(inst, cuts).ok, "unverified certificate for " + dump(inst));
        auto b = difference_bounds(inst.ys);
        const Int bound = oracle::binomial(b.big_m, b.min_side()) * inst.ys.period;
        out.require(cuts.period <= bound, "period above binomial bound for " + dump(inst));
    }
}

void round_trip(Outcome& out) {
    auto check = [&](const ProblemInstance& inst, const PeriodCertificate& cert, const std::string& label) {
        auto path = path_from_sequence(inst, cert);
        auto back = sequence_from_path(path, !fixture::closes_early(path));
        out.require(back.certificate.period == cert.period, label + ": period differs");
        out.require(fixture::rotation_of(back.certificate.diff_period, cert.diff_period),
                    label + ": diff period is not a rotation");
        out.require(detect(back.instance) == back.certificate, label + ": rebuilt instance does not certify");
    };
    auto a = analyze_rows(3);
    for (std::size_t y = 1; y <= 3; ++y)
        check(a.rows[y].instance, a.rows[y].certificate, "Wythoff row " + std::to_string(y));
    std::mt19937_64 rng(kSeedRoundTrip);
    for (int i = 0; i < 50; ++i) {
        auto inst = random_instance(rng);
        check(inst, detect(inst), dump(inst));
    }
}

void optimization(Outcome& out) {
    using namespace fixture;
    out.require(optimize_cutset(example_from()) == path_of_matrix(-2, 3, kOptimizedExample, -2, 6),
                "optimization matrix differs");
    out.require(near_path_between(example_from(), example_to()) == path_of_matrix(-2, 3, kNearPathExample, -2, 12),
                "near-optimized path differs");
    for (const auto& mc : sample_cut_sets(kSeedCutSets, 100)) {
        auto once = optimized_cut(mc);
        out.require(optimized_cut(once) == once, "not idempotent on " + format_multicut(mc));
    }
}

void digraph(Outcome& out) {
    auto six = explore_digraph(6, -2, 2);
    out.require(six.vertices > 0, "no vertices for six rows");
    out.require(six.component_sizes.size() == 1 && six.component_sizes.begin()->first == 4,
                "component sizes other than 4");
    out.require(six.cycled_closed_count == 0, "a component is closed under the row rotation");
    out.require(explore_digraph(7, -2, 2).vertices == 0, "seven rows are not empty");
}

void constants(Outcome& out) {
    out.require(k_paper(-3, 3) == 6, "k_paper(-3, 3)");
    out.require(k_paper(-2, 2) == 3 && k_paper(-2, 2) == oracle::max_lcm_over_partitions(3, 2), "k_paper(-2, 2)");
    out.require(k_paper(-4, 4) == 12 && k_paper(-4, 4) == oracle::max_lcm_over_partitions(7, 4), "k_paper(-4, 4)");
    // The diff sets with minimum -1 and maximum 1 are {-1, 1} and {-1, 0, 1}.
    Int best = 0;
    for (const auto& set : std::vector<std::vector<Int>>{{-1, 1}, {-1, 0, 1}}) {
        ProblemInstance inst;
        inst.ys.diff_sets = {set};
        auto b = difference_bounds(inst.ys);
        out.require(b.mu == -2 && b.nu == 2, "bounds of the search instance");
        auto c = detect(inst);
        out.require(verify_certificate(inst, c).ok, "unverified search certificate");
        best = std::max(best, c.period);
    }
    out.require(best == 4, "maximal period " + std::to_string(best));
    out.require(best == k_effective(-2, 2), "maximal period is not k_effective");
}

void extremal(Outcome& out) {
    auto a = construct_extremal(-3, 3);
    out.require(a.certificate.diff_period == std::vector<Int>{3, 3, 3, -3, -3, -3}, "(-3, 3) diff period");
    out.require(verify_certificate(a.instance, a.certificate).ok, "(-3, 3) unverified");
    auto b = construct_extremal(-5, 1);
    out.require(b.certificate.diff_period == std::vector<Int>{1, 1, 1, 1, 1, -5}, "(-5, 1) diff period");
    out.require(verify_certificate(b.instance, b.certificate).ok, "(-5, 1) unverified");
    auto c = construct_extremal(-4, 4);
    out.require(c.certificate.period == 12 * c.p, "(-4, 4) period " + std::to_string(c.certificate.period) +
                                                      " with p = " + std::to_string(c.p));
    out.require(detect(c.instance) == c.certificate, "(-4, 4) detection disagrees");
    out.require(verify_certificate(c.instance, c.certificate).ok, "(-4, 4) unverified");
    auto db = difference_bounds(c.instance.ys);
    out.require(db.mu >= -4 && db.nu <= 4, "(-4, 4) instance leaves the bounds");
}

void preperiod(Outcome& out) {
    int violations = 0, inside = 0, squared_form = 0;
    std::string example;
    for (const auto& inst : random_sample()) {
        auto c = detect(inst);
        auto b = difference_bounds(inst.ys);
        const Int m = b.big_m;
        const Int excess = c.preperiod - static_cast<Int>(effective_seed(inst).size());
        const Int kh = k_hat(inst.seed);
        const Int bound = ((m - 1) / 2) * (m - (m - 1) / 2 - 1) * inst.ys.period + kh;
        if (excess <= bound) continue;
        ++violations;
        if (b.degenerate()) continue;
        ++inside;
        const double half = static_cast<double>(m) / 2.0;
        if (static_cast<double>(excess) > half * half * static_cast<double>(inst.ys.period) + static_cast<double>(kh))
            ++squared_form;
        if (example.empty()) {
            std::ostringstream s;
            s << dump(inst) << " has preperiod - L = " << excess << " > " << bound;
            example = s.str();
        }
    }
    std::ostringstream note;
    note << violations << " violations, " << inside << " with mu < 0 < nu";
    if (!example.empty()) note << ", e.g. " << example;
    note << "; (M/2)^2 p + K-hat is exceeded " << squared_form << " times there";
    out.require(violations == 0, note.str());
}

void asymptotics(Outcome& out) {
    for (Int m = 12; m <= 60; ++m) {
        const Int mu = -(m / 2), nu = m + mu;
        const double ratio = std::log(static_cast<double>(k_paper(mu, nu))) / std::sqrt(li_inverse(static_cast<double>(m - 1)));
        out.require(ratio >= kRatioLow && ratio <= kRatioHigh, "M = " + std::to_string(m) + " ratio " + std::to_string(ratio));
    }
}

}  // namespace

int main() {
    criterion(1, "Wythoff period table", kLimitWythoffTable, wythoff_table);
    criterion(2, "Wythoff matrix", kLimitWythoffMatrix, wythoff_matrix);
    criterion(3, "simple family", kLimitSimpleFamily, simple_family);
    criterion(4, "degenerate bounds give period 1", 0, degenerate);
    criterion(5, "detector cross-agreement", kLimitCrossAgreement, cross_agreement);
    criterion(6, "cut-set path round trip", 0, round_trip);
    criterion(7, "optimization fixtures and idempotence", 0, optimization);
    criterion(8, "digraph (-2, 2)", kLimitDigraph, digraph);
    criterion(9, "period constants and exhaustive search", 0, constants);
    criterion(10, "extremal construction", kLimitExtremal, extremal);
    criterion(11, "preperiod bound", 0, preperiod);
    criterion(12, "asymptotic ratio", kLimitAsymptotics, asymptotics);
    std::printf("%d of 12 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
