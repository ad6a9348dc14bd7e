#include "nimseq/detect.hpp"

#include <sstream>
#include <unordered_map>

namespace nimseq {

namespace {

Int scan_start(const ProblemInstance& inst, const DifferenceBounds& b) {
    Int top = inst.seed.empty() ? -1 : *std::max_element(inst.seed.begin(), inst.seed.end());
    Int base = std::max({top + 1, static_cast<Int>(inst.seed.size()), inst.ys.periodic_start});
    // S entries reach back nu - 1 positions, so leave a second M of slack
    // for the transient before values settle inside [mu, nu].
    return base + 2 * b.big_m;
}

std::vector<Int> cut_signature(std::span<const Int> g, Int x, const DifferenceBounds& b) {
    std::vector<Int> key;
    for (Int y = std::max<Int>(0, x - b.nu + 1); y <= x; ++y) {
        Int v = g[static_cast<std::size_t>(y)];
        if (v > x) {
            key.push_back(y - x);
            key.push_back(v - y);
        }
    }
    key.push_back(kMaxIndex);
    for (Int y = x + 1; y <= x - b.mu; ++y) {
        Int v = g[static_cast<std::size_t>(y)];
        if (v <= x) {
            key.push_back(y - x);
            key.push_back(v - y);
        }
    }
    return key;
}

std::vector<Int> window_signature(std::span<const Int> g, Int x, const DifferenceBounds& b) {
    std::vector<Int> key((static_cast<std::size_t>(b.big_m) + 63) / 64, 0);
    for (Int y = std::max<Int>(0, x - b.big_m); y < x; ++y) {
        Int o = g[static_cast<std::size_t>(y)] - x;
        if (o >= b.mu && o < b.nu) {
            auto bit = static_cast<std::size_t>(o - b.mu);
            key[bit / 64] |= Int{1} << (bit % 64);
        }
    }
    return key;
}

struct KeyHash {
    std::size_t operator()(const std::vector<Int>& k) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (Int v : k) {
            h ^= std::hash<Int>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

bool shift_holds(std::span<const Int> g, Int q, Int from, Int to) {
    for (Int y = from; y <= to; ++y)
        if (g[static_cast<std::size_t>(y + q)] != g[static_cast<std::size_t>(y)] + q) return false;
    return true;
}

}  // namespace

Cut cut_at(std::span<const Int> prefix, Int x, const DifferenceBounds& bounds) {
    const Int depth = bounds.mu < 0 ? -bounds.mu : 0;
    if (x < 0 || static_cast<Int>(prefix.size()) < x + depth + 1)
        throw InsufficientData("prefix too short for the cut after x");
    Cut cut;
    cut.position = x;
    for (Int y = 0; y <= x; ++y) {
        Int v = prefix[static_cast<std::size_t>(y)];
        if (v > x) cut.s_entries.emplace_back(y - x, v - y);
    }
    for (Int y = x + 1; y <= x + depth; ++y) {
        Int v = prefix[static_cast<std::size_t>(y)];
        if (v <= x) cut.t_entries.emplace_back(y - x, v - y);
    }
    return cut;
}

Int default_budget(const ProblemInstance& instance) {
    const ProblemInstance inst = pad_seed(instance);
    const auto b = difference_bounds(inst.ys);
    const Int p = inst.ys.period;
    if (b.degenerate()) return 0;
    const auto report = bound_report(b, p, std::max<Int>(0, k_hat(inst.seed)));
    Int budget = scan_start(inst, b) + 4 * b.big_m;
    auto add = [&](Int v) {
        if (v >= kMaxIndex - budget) budget = kMaxIndex;
        else budget += v;
    };
    add(report.preperiod_bound_exact);
    add(report.binomial_bound >= kMaxIndex / 4 ? kMaxIndex : 4 * report.binomial_bound);
    return budget;
}

PeriodCertificate minimize(const ProblemInstance& instance, Int witness_shift, Int start) {
    const Int q = witness_shift;
    if (q <= 0 || start < 0) throw InconsistentWitness("witness shift must be positive");
    const ProblemInstance inst = pad_seed(instance);
    const auto b = difference_bounds(inst.ys);
    Generator gen(inst);
    gen.extend_to(start + 2 * q + b.big_m + 1);
    const auto& g = gen.values();
    if (!shift_holds(g, q, start, start + q + b.big_m)) {
        std::ostringstream os;
        os << "G(y + " << q << ") != G(y) + " << q << " somewhere in [" << start << ", "
           << start + q + b.big_m << "]";
        throw InconsistentWitness(os.str());
    }
    auto d = [&](Int x) { return g[static_cast<std::size_t>(x)] - x; };

    Int period = q;
    for (Int e = 1; e <= q; ++e) {
        if (q % e) continue;
        bool ok = true;
        for (Int y = start; y < start + q && ok; ++y) ok = d(y) == d(y + e);
        if (ok) {
            period = e;
            break;
        }
    }
    Int pre = start;
    while (pre > 0 && d(pre - 1) == d(pre - 1 + period)) --pre;

    PeriodCertificate cert;
    cert.preperiod = pre;
    cert.period = period;
    cert.diff_period.clear();
    for (Int y = pre; y < pre + period; ++y) cert.diff_period.push_back(d(y));
    return cert;
}

PeriodCertificate detect(const ProblemInstance& instance, const DetectOptions& options,
                         DetectStats* stats) {
    DetectStats local;
    DetectStats& st = stats ? *stats : local;
    st = {};
    validate_instance(instance);
    if (auto cert = degenerate_certificate(instance, options.budget)) return *cert;

    const ProblemInstance inst = pad_seed(instance);
    const auto b = difference_bounds(inst.ys);
    const Int p = inst.ys.period;
    const Int budget = options.budget > 0 ? options.budget : default_budget(inst);
    const Int x_s = scan_start(inst, b);
    const Int lookahead = b.big_m + 1;

    Generator gen(inst);
    std::unordered_map<std::vector<Int>, Int, KeyHash> seen;
    for (Int x = x_s;; x += p) {
        if (x + lookahead > budget) {
            st.generated_terms = gen.size();
            throw BudgetExceeded("no signature repeat within the term budget", gen.size());
        }
        gen.extend_to(x + lookahead);
        ++st.scanned_positions;
        auto key = options.method == Method::cuts ? cut_signature(gen.values(), x, b)
                                                  : window_signature(gen.values(), x, b);
        if (options.trace) options.trace(x, KeyHash{}(key));
        auto [it, inserted] = seen.try_emplace(std::move(key), x);
        if (inserted) continue;

        const Int x0 = it->second;
        const Int q = x - x0;
        const Int need = x0 + 2 * q + b.big_m + 2;
        if (need > budget) {
            st.generated_terms = gen.size();
            throw BudgetExceeded("repeat confirmation exceeds the term budget", gen.size());
        }
        gen.extend_to(need);
        if (!shift_holds(gen.values(), q, x0, x0 + q + b.big_m)) {
            ++st.rejected_repeats;
            it->second = x;
            continue;
        }
        st.witness_shift = q;
        st.witness_start = x0;
        st.generated_terms = gen.size();
        PeriodCertificate cert = minimize(inst, q, x0);
        auto check = verify_certificate(inst, cert);
        if (!check.ok) throw InconsistentWitness("detected certificate failed verification: " +
                                                 check.witness);
        return cert;
    }
}

PeriodCertificate detect(const ProblemInstance& instance, Method method, Int budget) {
    DetectOptions opts;
    opts.method = method;
    opts.budget = budget;
    return detect(instance, opts);
}

std::map<Int, std::set<Int>> exclusions_from_inversions(std::span<const Int> prefix, Int p,
                                                        Int from) {
    std::map<Int, std::set<Int>> out;
    const Int n = static_cast<Int>(prefix.size());
    for (Int x = std::max<Int>(0, from); x < n; ++x) {
        Int gx = prefix[static_cast<std::size_t>(x)];
        for (Int y = x + 1; y < n; ++y) {
            Int gy = prefix[static_cast<std::size_t>(y)];
            if (gx > gy) out[x % p].insert(gy - x);
        }
    }
    return out;
}

}  // namespace nimseq
