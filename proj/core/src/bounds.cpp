#include "nimseq/bounds.hpp"

#include <cmath>
#include <numeric>

namespace nimseq {

namespace {

Int sat_mul(Int a, Int b) {
    Int r = 0;
    if (__builtin_mul_overflow(a, b, &r) || r > kMaxIndex) return kMaxIndex;
    return r;
}

struct PartitionSearch {
    Int max_parts;
    Int best = 1;
    std::vector<Int> best_parts;
    std::vector<Int> parts;

    // Parts are generated in non-increasing order, so `rest` must be split
    // into parts no larger than `cap`.
    void run(Int rest, Int cap, Int current) {
        if (rest == 0) {
            if (current > best || best_parts.empty()) {
                best = current;
                best_parts = parts;
            }
            return;
        }
        Int slots = max_parts - static_cast<Int>(parts.size());
        if (slots <= 0 || cap * slots < rest) return;
        for (Int part = std::min(cap, rest); part >= 1; --part) {
            parts.push_back(part);
            run(rest - part, part, std::lcm(current, part));
            parts.pop_back();
        }
    }
};

PartitionSearch search(Int total, Int max_parts) {
    PartitionSearch s;
    s.max_parts = max_parts;
    if (total <= 0 || max_parts <= 0) return s;
    s.run(total, total, 1);
    return s;
}

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(double a, double b, double fa, double fm, double fb, double whole, double tol,
                int depth) {
    auto f = [](double t) { return 1.0 / std::log(t); };
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(a, m, fa, flm, fm);
    double right = simpson(m, b, fm, frm, fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive(a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           adaptive(m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

constexpr double kLiTolerance = 1e-6;

}  // namespace

Int binomial(Int n, Int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (Int i = 1; i <= k; ++i) {
        // r * (n - k + i) / i stays integral at every step
        Int g = std::gcd(r, i);
        Int num = sat_mul(r / g, n - k + i);
        if (num == kMaxIndex) return kMaxIndex;
        r = num / (i / g);
    }
    return r;
}

Int max_partition_lcm(Int total, Int max_parts) { return search(total, max_parts).best; }

std::vector<Int> best_partition(Int total, Int max_parts) {
    return search(total, max_parts).best_parts;
}

Int k_paper(Int mu, Int nu) {
    if (mu >= 0 || nu <= 0) return 1;
    return max_partition_lcm(-mu + nu - 1, std::min(-mu, nu));
}

Int k_effective(Int mu, Int nu) {
    if (mu >= 0 || nu <= 0) return 1;
    return std::max(-mu + nu, k_paper(mu, nu));
}

double li(double x) {
    if (x <= 1.0) throw DomainError("li needs x > 1");
    if (x == 2.0) return 0.0;
    auto f = [](double t) { return 1.0 / std::log(t); };
    double a = std::min(x, 2.0), b = std::max(x, 2.0), m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double v = adaptive(a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), kLiTolerance, 50);
    return x < 2.0 ? -v : v;
}

double li_inverse(double y) {
    if (y < 0) throw DomainError("li_inverse needs y >= 0");
    if (y == 0) return 2.0;
    double lo = 2.0, hi = 4.0;
    while (li(hi) < y) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > kLiTolerance) {
        double mid = 0.5 * (lo + hi);
        if (li(mid) < y)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double k_asymptotic(Int big_m) {
    if (big_m < 3) throw DomainError("asymptotic estimate needs M >= 3");
    return std::exp(std::sqrt(li_inverse(static_cast<double>(big_m - 1))));
}

PreperiodBound preperiod_bound(Int mu, Int nu, Int p, Int k_hat) {
    if (mu >= 0 || nu <= 0) throw DomainError("preperiod bound needs mu < 0 < nu");
    const Int m = -mu + nu;
    PreperiodBound b;
    b.exact = sat_mul((m - 1) / 2 * (m / 2), p) + k_hat;
    b.paper_form = (static_cast<double>(m) / 2.0) * (static_cast<double>(m) / 2.0) *
                       static_cast<double>(p) +
                   static_cast<double>(k_hat);
    b.combined = sat_mul(k_paper(mu, nu), p) + k_hat;
    b.combined_valid = m >= 11;
    return b;
}

BoundReport bound_report(const DifferenceBounds& bounds, Int p, Int k_hat) {
    BoundReport r;
    r.mu = bounds.mu;
    r.nu = bounds.nu;
    r.big_m = bounds.big_m;
    r.p = p;
    r.degenerate = bounds.degenerate();
    if (r.degenerate) return r;
    r.window_bound = bounds.big_m >= 62 ? kMaxIndex : sat_mul(Int{1} << bounds.big_m, p);
    r.binomial_bound = sat_mul(binomial(bounds.big_m, bounds.min_side()), p);
    r.k_paper = k_paper(bounds.mu, bounds.nu);
    r.k_effective = k_effective(bounds.mu, bounds.nu);
    if (bounds.big_m >= 3) r.asymptotic_estimate = k_asymptotic(bounds.big_m);
    auto pre = preperiod_bound(bounds.mu, bounds.nu, p, k_hat);
    r.preperiod_bound_exact = pre.exact;
    r.preperiod_bound_paper = pre.paper_form;
    r.preperiod_bound_combined = pre.combined;
    r.combined_valid = pre.combined_valid;
    return r;
}

}  // namespace nimseq
