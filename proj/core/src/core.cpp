#include "nimseq/core.hpp"

#include <numeric>
#include <sstream>
#include <unordered_set>

namespace nimseq {

namespace {

void sort_unique(std::vector<Int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

Int floor_mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

void DiffSetSequence::normalize() {
    for (auto& s : diff_sets) sort_unique(s);
    for (auto& s : prefix_sets) sort_unique(s);
}

Int gcd_int(Int a, Int b) { return std::gcd(a, b); }

Int lcm_int(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    Int g = std::gcd(a, b);
    Int r = 0;
    if (__builtin_mul_overflow(a / g, b, &r) || r > kMaxIndex)
        throw OverflowError("lcm exceeds 2^62");
    return r;
}

Int mex(std::span<const Int> values) {
    std::vector<Int> v;
    v.reserve(values.size());
    for (Int x : values)
        if (x >= 0) v.push_back(x);
    sort_unique(v);
    Int m = 0;
    for (Int x : v) {
        if (x != m) break;
        ++m;
    }
    return m;
}

DifferenceBounds difference_bounds(const DiffSetSequence& ys) {
    bool any = false;
    Int lo = 0, hi = 0;
    for (const auto& s : ys.diff_sets) {
        for (Int d : s) {
            if (!any) {
                lo = hi = d;
                any = true;
            }
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
    }
    if (!any) return {};
    DifferenceBounds b;
    b.mu = lo - 1;
    b.nu = hi + 1;
    b.big_m = (b.mu < 0 ? -b.mu : b.mu) + b.nu;
    return b;
}

std::optional<ValidationError> find_violation(const ProblemInstance& instance) {
    const auto& ys = instance.ys;
    if (ys.period < 1) return ValidationError("period must be positive", ys.period);
    if (static_cast<Int>(ys.diff_sets.size()) != ys.period)
        return ValidationError("expected one diff set per residue",
                               static_cast<Int>(ys.diff_sets.size()));
    if (ys.periodic_start < 0)
        return ValidationError("periodic_start must be non-negative", ys.periodic_start);
    const Int seed_len = static_cast<Int>(instance.seed.size());
    if (!ys.prefix_sets.empty()) {
        Int gap = std::max<Int>(0, ys.periodic_start - seed_len);
        if (static_cast<Int>(ys.prefix_sets.size()) != gap)
            return ValidationError("prefix_sets must cover the gap below periodic_start",
                                   static_cast<Int>(ys.prefix_sets.size()));
    }
    std::unordered_set<Int> seen;
    for (Int i = 0; i < seed_len; ++i) {
        Int g = instance.seed[static_cast<std::size_t>(i)];
        if (g < 0) return ValidationError("seed values must be natural numbers", i);
        if (g >= kMaxIndex) return ValidationError("seed value exceeds 2^62", i);
        if (!seen.insert(g).second) return ValidationError("duplicate seed value", i);
    }
    return std::nullopt;
}

void validate_instance(const ProblemInstance& instance) {
    if (auto v = find_violation(instance)) throw *v;
}

Int k_hat(std::span<const Int> seed) {
    if (seed.empty()) return 0;
    return *std::max_element(seed.begin(), seed.end()) - static_cast<Int>(seed.size());
}

// --- Generator ---

Generator::Generator(ProblemInstance instance) : instance_(std::move(instance)) {
    validate_instance(instance_);
    instance_.ys.normalize();
}

bool Generator::used(Int v) const noexcept {
    return v >= 0 && v < static_cast<Int>(inverse_.size()) &&
           inverse_[static_cast<std::size_t>(v)] >= 0;
}

Int Generator::index_of(Int v) const noexcept {
    return used(v) ? inverse_[static_cast<std::size_t>(v)] : -1;
}

void Generator::mark(Int v, Int x) {
    if (v >= static_cast<Int>(inverse_.size())) {
        std::size_t n = std::max<std::size_t>(static_cast<std::size_t>(v) + 1,
                                              inverse_.size() * 3 / 2 + 16);
        inverse_.resize(n, -1);
    }
    inverse_[static_cast<std::size_t>(v)] = x;
    while (used(frontier_)) ++frontier_;
}

Int Generator::next() {
    const Int x = size();
    if (x >= kMaxIndex) throw OverflowError("index exceeds 2^62");
    const Int seed_len = seed_length();
    Int v;
    if (x < seed_len) {
        v = instance_.seed[static_cast<std::size_t>(x)];
    } else {
        const auto& ys = instance_.ys;
        const std::vector<Int>* abs_set = nullptr;
        const std::vector<Int>* rel_set = nullptr;
        if (x < ys.periodic_start && !ys.prefix_sets.empty())
            abs_set = &ys.prefix_sets[static_cast<std::size_t>(x - seed_len)];
        else
            rel_set = &ys.diff_sets[static_cast<std::size_t>(x % ys.period)];
        auto blocked = [&](Int c) {
            if (used(c)) return true;
            if (abs_set) return std::binary_search(abs_set->begin(), abs_set->end(), c);
            return std::binary_search(rel_set->begin(), rel_set->end(), c - x);
        };
        v = frontier_;
        while (blocked(v)) ++v;
    }
    values_.push_back(v);
    mark(v, x);
    return v;
}

void Generator::extend_to(Int n) {
    if (n > kMaxIndex) throw OverflowError("index exceeds 2^62");
    if (n > size()) values_.reserve(static_cast<std::size_t>(n));
    while (size() < n) next();
}

Int Generator::at(Int x) {
    extend_to(x + 1);
    return values_[static_cast<std::size_t>(x)];
}

std::vector<Int> generate(const ProblemInstance& instance, Int up_to) {
    Generator gen(instance);
    gen.extend_to(up_to);
    return gen.values();
}

std::vector<Int> effective_seed(const ProblemInstance& instance) {
    const Int len = std::max<Int>(static_cast<Int>(instance.seed.size()),
                                  instance.ys.periodic_start);
    return generate(instance, len);
}

ProblemInstance pad_seed(const ProblemInstance& instance) {
    ProblemInstance out = instance;
    out.seed = effective_seed(instance);
    out.ys.prefix_sets.clear();
    out.ys.periodic_start = std::min(out.ys.periodic_start, static_cast<Int>(out.seed.size()));
    out.ys.normalize();
    return out;
}

// --- full-interval obstruction family ---

ProblemInstance simple_instance(Int mu, Int nu) {
    if (!(mu < 0 && nu > 0)) throw DomainError("simple instance needs mu < 0 < nu");
    ProblemInstance inst;
    inst.ys.period = 1;
    inst.ys.diff_sets.assign(1, {});
    for (Int d = mu + 1; d <= nu - 1; ++d) inst.ys.diff_sets[0].push_back(d);
    return inst;
}

PeriodCertificate simple_certificate(Int mu, Int nu) {
    if (!(mu < 0 && nu > 0)) throw DomainError("simple instance needs mu < 0 < nu");
    PeriodCertificate c;
    c.preperiod = 0;
    c.period = nu - mu;
    c.diff_period.assign(static_cast<std::size_t>(-mu), nu);
    c.diff_period.insert(c.diff_period.end(), static_cast<std::size_t>(nu), mu);
    return c;
}

// --- certificates ---

Verification verify_certificate(const ProblemInstance& instance, const PeriodCertificate& cert) {
    if (cert.period <= 0) throw InvalidCertificate("certificate period must be positive");
    if (cert.preperiod < 0) throw InvalidCertificate("certificate preperiod must be non-negative");
    auto fail = [](std::string why) { return Verification{false, std::move(why)}; };
    if (static_cast<Int>(cert.diff_period.size()) != cert.period)
        return fail("diff_period length differs from period");

    const ProblemInstance inst = pad_seed(instance);
    const auto bounds = difference_bounds(inst.ys);
    const Int seed_len = static_cast<Int>(inst.seed.size());
    const Int q = lcm_int(cert.period, inst.ys.period);
    const Int x0 = std::max({cert.preperiod, seed_len, inst.ys.periodic_start});

    Generator gen(inst);
    gen.extend_to(x0 + 2 * q + bounds.big_m + 1);
    const auto& g = gen.values();
    auto G = [&](Int x) { return g[static_cast<std::size_t>(x)]; };

    // a) residues of the next q values are pairwise distinct
    std::vector<char> hit(static_cast<std::size_t>(q), 0);
    for (Int k = 0; k < q; ++k) {
        auto r = static_cast<std::size_t>(floor_mod(G(x0 + k), q));
        if (hit[r]) {
            std::ostringstream os;
            os << "condition a) fails: residue " << r << " repeats at x=" << x0 + k;
            return fail(os.str());
        }
        hit[r] = 1;
    }

    // b) the earlier values are exactly the downward towers below the window
    Int tower_total = 0;
    for (Int k = 0; k < q; ++k) {
        tower_total += G(x0 + k) / q;
        for (Int v = G(x0 + k) - q; v >= 0; v -= q) {
            Int at = gen.index_of(v);
            if (at < 0 || at >= x0) {
                std::ostringstream os;
                os << "condition b) fails: value " << v << " below G(" << x0 + k
                   << ") is not taken before x=" << x0;
                return fail(os.str());
            }
        }
    }
    if (tower_total != x0) return fail("condition b) fails: towers do not cover earlier values");

    for (Int x = cert.preperiod; x < x0 + q; ++x) {
        Int want = cert.diff_period[static_cast<std::size_t>((x - cert.preperiod) % cert.period)];
        if (G(x) - x != want) {
            std::ostringstream os;
            os << "d(" << x << ") = " << G(x) - x << " but certificate says " << want;
            return fail(os.str());
        }
    }
    for (Int d : cert.diff_period)
        if (d < bounds.lo() || d > bounds.hi()) return fail("difference value outside settled bounds");

    for (Int e = 1; e < cert.period; ++e) {
        if (cert.period % e) continue;
        bool periodic = true;
        for (Int i = e; i < cert.period && periodic; ++i)
            periodic = cert.diff_period[static_cast<std::size_t>(i)] ==
                       cert.diff_period[static_cast<std::size_t>(i - e)];
        if (periodic) return fail("period is not minimal");
    }
    if (cert.preperiod > 0) {
        Int x = cert.preperiod - 1;
        if (G(x) - x == cert.diff_period.back()) return fail("preperiod is not minimal");
    }
    return {true, "ok"};
}

std::optional<PeriodCertificate> degenerate_certificate(const ProblemInstance& instance,
                                                        Int budget) {
    validate_instance(instance);
    const auto bounds = difference_bounds(instance.ys);
    if (!bounds.degenerate()) return std::nullopt;

    const ProblemInstance inst = pad_seed(instance);
    const Int seed_len = static_cast<Int>(inst.seed.size());
    const Int top = inst.seed.empty() ? 0 : *std::max_element(inst.seed.begin(), inst.seed.end());
    const Int p = inst.ys.period;
    const Int guard = p + bounds.big_m + 1;
    Int window = 2 * (top + seed_len + guard) + 64;
    if (budget <= 0) budget = 64 * window;

    Generator gen(inst);
    while (true) {
        Int n = std::min(window, budget);
        gen.extend_to(n);
        const auto& g = gen.values();
        Int last = -1;
        for (Int x = n - 1; x >= 0; --x)
            if (g[static_cast<std::size_t>(x)] != x) {
                last = x;
                break;
            }
        PeriodCertificate cert{last + 1, 1, {0}};
        if (cert.preperiod + guard < n && verify_certificate(inst, cert).ok) return cert;
        if (n >= budget) throw BudgetExceeded("no stabilization of G(x) = x within budget", n);
        window *= 2;
    }
}

}  // namespace nimseq
