#include "nimseq/wythoff.hpp"

#include <set>
#include <sstream>

namespace nimseq {

std::vector<std::vector<Int>> grundy_table(Int rows, Int cols) {
    std::vector<std::vector<Int>> g(static_cast<std::size_t>(std::max<Int>(rows, 0)),
                                    std::vector<Int>(static_cast<std::size_t>(std::max<Int>(cols, 0))));
    std::vector<Int> seen;
    for (Int y = 0; y < rows; ++y) {
        for (Int x = 0; x < cols; ++x) {
            seen.clear();
            for (Int k = 0; k < x; ++k) seen.push_back(g[y][k]);
            for (Int k = 0; k < y; ++k) seen.push_back(g[k][x]);
            for (Int k = 1; k <= std::min(x, y); ++k) seen.push_back(g[y - k][x - k]);
            g[y][x] = mex(seen);
        }
    }
    return g;
}

Int WythoffRowResult::value(Int x) const {
    const auto& c = certificate;
    if (x < c.preperiod) return prefix.at(static_cast<std::size_t>(x));
    return x + c.diff_period[static_cast<std::size_t>((x - c.preperiod) % c.period)];
}

ProblemInstance row_instance(Int y, const std::vector<WythoffRowResult>& lower, bool use_product) {
    if (y < 0) throw DomainError("row index must be non-negative");
    if (static_cast<Int>(lower.size()) < y)
        throw DependencyError("row " + std::to_string(y) + " needs all lower rows");
    for (Int k = 0; k < y; ++k)
        if (lower[static_cast<std::size_t>(k)].row != k)
            throw DependencyError("lower row " + std::to_string(k) + " is missing");

    auto lower_value = [&](Int row, Int x) { return lower[static_cast<std::size_t>(row)].value(x); };
    // Obstructions at x: the column below (x, y) and the diagonal through it.
    auto obstructions = [&](Int x) {
        std::vector<Int> ys;
        for (Int r = 0; r < y; ++r) ys.push_back(lower_value(r, x));
        for (Int k = 1; k <= std::min(y, x); ++k) ys.push_back(lower_value(y - k, x - k));
        return ys;
    };

    Int p = 1;
    Int top_pre = 0;
    for (Int k = 0; k < y; ++k) {
        const auto& c = lower[static_cast<std::size_t>(k)].certificate;
        p = use_product ? p * c.period : lcm_int(p, c.period);
        if (p > kMaxIndex / 4) throw OverflowError("row period product too large");
        top_pre = std::max(top_pre, c.preperiod);
    }
    const Int start = top_pre + y;

    ProblemInstance inst;
    inst.ys.period = p;
    inst.ys.diff_sets.assign(static_cast<std::size_t>(p), {});
    for (Int j = 0; j < p; ++j) {
        Int x = start + ((j - start % p) % p + p) % p;
        for (Int v : obstructions(x)) inst.ys.diff_sets[static_cast<std::size_t>(j)].push_back(v - x);
    }
    inst.ys.periodic_start = start;

    std::vector<Int> used;
    for (Int x = 0; x < start; ++x) {
        auto seen = obstructions(x);
        seen.insert(seen.end(), used.begin(), used.end());
        Int v = mex(seen);
        used.push_back(v);
    }
    inst.seed = std::move(used);
    inst.ys.normalize();
    return inst;
}

WythoffAnalysis analyze_rows(Int max_row, Int budget, Method method) {
    WythoffAnalysis out;
    for (Int y = 0; y <= max_row; ++y) {
        try {
            WythoffRowResult r;
            r.row = y;
            r.instance = row_instance(y, out.rows);
            r.certificate = detect(r.instance, method, budget);
            auto check = verify_certificate(r.instance, r.certificate);
            if (!check.ok) throw InvalidCertificate("row " + std::to_string(y) + ": " + check.witness);
            r.prefix = generate(r.instance, r.certificate.preperiod + r.certificate.period);
            out.rows.push_back(std::move(r));
        } catch (const BudgetExceeded& e) {
            std::ostringstream os;
            os << "row " << y << ": " << e.what() << " after " << e.scanned() << " terms";
            out.failure = os.str();
            break;
        }
    }
    return out;
}

}  // namespace nimseq
