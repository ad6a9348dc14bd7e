#include "nimseq/optimize.hpp"

#include <set>

namespace nimseq {

namespace {

Int floor_mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

struct Layout {
    BinaryRep rep;
    Int hole = 0;
    std::vector<std::vector<Int>> cycles;  // logical columns q_0 .. q_{k-1}
};

// A constant hole column followed by one block of columns per part. Within a block of
// length k, column s holds the pattern (a pluses, k - a minuses) shifted down by s rows.
Layout plan_layout(Int mu, Int nu, const std::vector<Int>& parts) {
    const Int big_m = nu - mu;
    Int rows = 1;
    for (Int part : parts) rows = lcm_int(rows, part);

    std::vector<Int> pluses;
    Int cycles = 0, capacity = 1;
    for (Int part : parts) {
        if (part == 1) {
            ++capacity;
        } else {
            ++cycles;
            capacity += part - 2;
        }
    }
    Int need = -mu - cycles;
    if (need < 0 || need > capacity) throw DomainError("partition does not fit the difference bounds");
    for (Int part : parts) {
        if (part == 1) continue;
        Int a = 1 + std::min(need, part - 2);
        need -= a - 1;
        pluses.push_back(a);
    }

    Layout out;
    out.rep.mu = mu;
    out.rep.nu = nu;
    out.rep.plus.assign(static_cast<std::size_t>(rows), std::vector<bool>(static_cast<std::size_t>(big_m)));
    auto set_constant = [&](Int m) {
        bool sign = need > 0;
        if (sign) --need;
        for (auto& bits : out.rep.plus) bits[static_cast<std::size_t>(m)] = sign;
    };
    set_constant(0);
    Int m = 1;
    std::size_t next_cycle = 0;
    for (Int part : parts) {
        if (part == 1) {
            set_constant(m++);
            continue;
        }
        const Int a = pluses[next_cycle++];
        std::vector<Int> cols;
        for (Int s = 0; s < part; ++s, ++m) {
            cols.push_back(m);
            for (Int r = 0; r < rows; ++r)
                out.rep.plus[static_cast<std::size_t>(r)][static_cast<std::size_t>(m)] = floor_mod(r - s, part) < a;
        }
        out.cycles.push_back(std::move(cols));
    }
    return out;
}

}  // namespace

ExtremalResult construct_extremal(Int mu, Int nu) {
    if (mu >= 0 || nu <= 0) throw DomainError("extremal construction needs mu < 0 < nu");
    const Int big_m = nu - mu;
    ExtremalResult out;

    if (k_effective(mu, nu) == big_m) {
        out.instance = simple_instance(mu, nu);
        out.certificate = detect(out.instance);
        out.p = 1;
        out.expected_period = big_m;
        out.cycle_lengths = {big_m};
        out.path = path_from_sequence(out.instance, out.certificate);
        if (out.certificate.period != big_m) throw PathError("rotation instance lost its period");
        return out;
    }

    const auto parts = best_partition(big_m - 1, std::min(-mu, nu));
    const Layout layout = plan_layout(mu, nu, parts);
    const MultiCut start = from_binary(layout.rep);
    validate_multi(start);

    CutPath path{start};
    Int elapsed = 0;
    auto physical = [&](Int logical) { return floor_mod(logical - elapsed, big_m); };
    auto swap = [&](Int x, Int y) {
        auto segment = swap_path(path.back(), physical(x), physical(y));
        path.insert(path.end(), segment.begin() + 1, segment.end());
        elapsed += static_cast<Int>(segment.size()) - 1;
    };
    for (const auto& q : layout.cycles) {
        const std::size_t k = q.size();
        swap(layout.hole, q[k - 1]);
        for (std::size_t s = k - 1; s > 0; --s) swap(q[s], q[s - 1]);
        swap(q[0], layout.hole);
    }
    while (floor_mod(elapsed, big_m) != 0) {
        path.push_back(optimized_successor(path.back()));
        ++elapsed;
    }

    const MultiCut target = cycled(start);
    auto closing = std::find(path.begin() + 1, path.end(), target);
    if (closing == path.end()) throw PathError("swap schedule does not close the loop");
    path.erase(closing + 1, path.end());

    auto seq = sequence_from_path(path);
    out.instance = std::move(seq.instance);
    out.certificate = detect(out.instance);
    out.p = out.instance.ys.period;
    out.expected_period = k_paper(mu, nu) * out.p;
    for (const auto& q : layout.cycles) out.cycle_lengths.push_back(static_cast<Int>(q.size()));
    for (Int part : parts)
        if (part == 1) out.cycle_lengths.push_back(1);
    out.cycle_lengths.push_back(1);
    out.path = std::move(path);
    if (out.certificate.period != out.expected_period)
        throw PathError("constructed sequence has period " + std::to_string(out.certificate.period) +
                        ", expected " + std::to_string(out.expected_period));
    return out;
}

}  // namespace nimseq
