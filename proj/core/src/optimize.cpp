#include "nimseq/optimize.hpp"

#include <sstream>

namespace nimseq {

namespace {

Int floor_mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

MultiCut step_or_throw(const MultiCut& mc, const std::vector<SuccessorChoice>& choices, Int step) {
    auto next = apply_choices(mc, choices);
    if (!next) throw PathError("step " + std::to_string(step) + " leads to an invalid cut set");
    return *std::move(next);
}

std::vector<SuccessorChoice> extreme_choices(const MultiCut& mc) {
    std::vector<SuccessorChoice> out;
    for (const auto& row : mc.rows) out.push_back(extreme_choice(row, mc.mu, mc.nu));
    return out;
}

}  // namespace

CutRow optimized_row(const CutRow& row, Int mu, Int nu) {
    CutRow out;
    for (Int target : row.t_star()) out.s.emplace(target - nu, nu);
    for (auto [o, d] : row.t) out.t.emplace(o, mu);
    return out;
}

MultiCut optimized_cut(const MultiCut& mc) {
    MultiCut out{mc.mu, mc.nu, {}};
    for (const auto& row : mc.rows) out.rows.push_back(optimized_row(row, mc.mu, mc.nu));
    return out;
}

bool is_optimized(const MultiCut& mc) {
    for (const auto& row : mc.rows) {
        for (auto [o, d] : row.s)
            if (d != mc.nu) return false;
        for (auto [o, d] : row.t)
            if (d != mc.mu) return false;
    }
    return true;
}

SuccessorChoice extreme_choice(const CutRow& row, Int mu, Int nu) {
    switch (row_case(row)) {
        case RowCase::i: return {StepKind::none, 0, 0};
        case RowCase::ii: return {StepKind::adjoin_positive, nu, 0};
        case RowCase::iii: return {StepKind::adjoin_negative, 0, 1 - mu};
        case RowCase::iv: break;
    }
    return {StepKind::adjoin_both, nu, 1 - mu};
}

MultiCut optimized_successor(const MultiCut& mc) {
    auto next = apply_choices(mc, extreme_choices(mc));
    if (!next) throw ValidationError("optimized successor is not a valid cut set");
    return *std::move(next);
}

CutPath optimize_cutset(const MultiCut& mc) {
    validate_multi(mc);
    CutPath path{mc};
    for (Int k = 0; k < mc.nu - mc.mu; ++k) path.push_back(optimized_successor(path.back()));
    return path;
}

MultiCut lift_successor(const MultiCut& from, const MultiCut& to) {
    auto choices = edge_choices(from, to);
    if (!choices) throw ValidationError("the two cut sets do not form an edge");
    auto next = apply_choices(optimized_cut(from), *choices);
    if (!next) throw ValidationError("lifted successor is not a valid cut set");
    return *std::move(next);
}

std::vector<RowPlan> plan_edge(const MultiCut& from, const MultiCut& to) {
    auto choices = edge_choices(from, to);
    if (!choices) throw ValidationError("the two cut sets do not form an edge");
    std::vector<RowPlan> plan;
    for (const auto& c : *choices) {
        RowPlan rp;
        rp.zero = c.kind == StepKind::matching_zero;
        if ((c.kind == StepKind::adjoin_positive || c.kind == StepKind::adjoin_both) && c.value < from.nu)
            rp.positive = c.value;
        if ((c.kind == StepKind::adjoin_negative || c.kind == StepKind::adjoin_both) &&
            c.landing - 1 < -from.mu)
            rp.negative = c.landing - 1;
        plan.push_back(rp);
    }
    return plan;
}

CutPath near_path(const MultiCut& start, const std::vector<RowPlan>& plan) {
    if (!is_optimized(start)) throw ValidationError("near path must start at an optimized cut set");
    if (plan.size() != start.rows.size()) throw ValidationError("plan needs one entry per row");
    validate_multi(start);
    const Int mu = start.mu, nu = start.nu, big_m = nu - mu;

    bool zero = false;
    std::set<Int, std::greater<>> positives;
    std::set<Int> negatives;
    for (const auto& rp : plan) {
        zero |= rp.zero;
        if (rp.positive) {
            if (*rp.positive < 1 || *rp.positive >= nu)
                throw ValidationError("planned positive value outside [1, nu - 1]");
            positives.insert(*rp.positive);
        }
        if (rp.negative) {
            if (*rp.negative < 1 || *rp.negative >= -mu)
                throw ValidationError("planned negative value outside [1, |mu| - 1]");
            negatives.insert(*rp.negative);
        }
    }
    const Int n0 = zero ? 1 : 0;
    std::map<Int, Int> positive_step, negative_step;
    Int block = n0;
    for (Int k : positives) positive_step[k] = (block++) * big_m + 1;
    for (Int k : negatives) negative_step[k] = (block++) * big_m + 1;
    const Int total = block * big_m + 1;

    CutPath path{start};
    for (Int t = 1; t <= total; ++t) {
        const MultiCut& cur = path.back();
        std::vector<SuccessorChoice> choices;
        for (std::size_t r = 0; r < plan.size(); ++r) {
            const auto& row = cur.rows[r];
            const auto& rp = plan[r];
            const RowCase c = row_case(row);
            auto illegal = [&](const char* what) {
                std::ostringstream os;
                os << "row " << r << " cannot adjoin " << what << " at step " << t;
                return PathError(os.str());
            };
            if (t == 1 && rp.zero) {
                if (c != RowCase::iv) throw illegal("a matching zero");
                choices.push_back({StepKind::matching_zero, 0, 0});
            } else if (rp.positive && positive_step[*rp.positive] == t) {
                if (c == RowCase::ii) choices.push_back({StepKind::adjoin_positive, *rp.positive, 0});
                else if (c == RowCase::iv) choices.push_back({StepKind::adjoin_both, *rp.positive, 1 - mu});
                else throw illegal("a positive value");
            } else if (rp.negative && negative_step[*rp.negative] == t) {
                if (c == RowCase::iii) choices.push_back({StepKind::adjoin_negative, 0, 1 + *rp.negative});
                else if (c == RowCase::iv) choices.push_back({StepKind::adjoin_both, nu, 1 + *rp.negative});
                else throw illegal("a negative value");
            } else {
                choices.push_back(extreme_choice(row, mu, nu));
            }
        }
        path.push_back(step_or_throw(cur, choices, t));
    }
    return path;
}

CutPath near_path_between(const MultiCut& from, const MultiCut& to) {
    auto path = near_path(optimized_cut(from), plan_edge(from, to));
    if (!(path.back() == optimized_cut(to)))
        throw PathError("near path does not end at the optimized target");
    return path;
}

BinaryRep binary_rep(const MultiCut& mc) {
    const MultiCut hat = optimized_cut(mc);
    BinaryRep rep{mc.mu, mc.nu, {}};
    const Int big_m = mc.nu - mc.mu;
    for (const auto& row : hat.rows) {
        std::vector<bool> bits(static_cast<std::size_t>(big_m));
        for (Int m = 0; m < big_m; ++m) {
            const Int o = m - mc.nu + 1;
            bits[static_cast<std::size_t>(m)] = m < mc.nu ? row.s.count(o) > 0 : row.t.count(o) == 0;
        }
        rep.plus.push_back(std::move(bits));
    }
    return rep;
}

MultiCut from_binary(const BinaryRep& rep) {
    const Int big_m = rep.big_m();
    MultiCut mc{rep.mu, rep.nu, {}};
    for (std::size_t r = 0; r < rep.plus.size(); ++r) {
        const auto& bits = rep.plus[r];
        if (static_cast<Int>(bits.size()) != big_m)
            throw ValidationError("binary row has the wrong width", static_cast<Int>(r));
        if (std::count(bits.begin(), bits.end(), true) != -rep.mu)
            throw ValidationError("binary row must hold exactly |mu| pluses", static_cast<Int>(r));
        CutRow row;
        for (Int m = 0; m < big_m; ++m) {
            const Int o = m - rep.nu + 1;
            const bool b = bits[static_cast<std::size_t>(m)];
            if (m < rep.nu && b) row.s.emplace(o, rep.nu);
            if (m >= rep.nu && !b) row.t.emplace(o, rep.mu);
        }
        mc.rows.push_back(std::move(row));
    }
    return mc;
}

BinaryRep parse_binary(Int mu, Int nu, const std::vector<std::string>& lines) {
    BinaryRep rep{mu, nu, {}};
    for (const auto& line : lines) {
        std::vector<bool> bits;
        for (char ch : line) {
            if (ch == '+') bits.push_back(true);
            else if (ch == '-') bits.push_back(false);
            else if (ch != ' ' && ch != '|') throw ValidationError(std::string("unexpected character '") + ch + "'");
        }
        rep.plus.push_back(std::move(bits));
    }
    return rep;
}

std::string format_binary(const BinaryRep& rep) {
    std::string out;
    for (const auto& bits : rep.plus) {
        for (bool b : bits) out += b ? '+' : '-';
        out += '\n';
    }
    return out;
}

BinaryRep rotate_columns(const BinaryRep& rep) {
    BinaryRep out = rep;
    const std::size_t m = static_cast<std::size_t>(rep.big_m());
    for (std::size_t r = 0; r < rep.plus.size(); ++r)
        for (std::size_t c = 0; c < m; ++c) out.plus[r][c] = rep.plus[r][(c + 1) % m];
    return out;
}

namespace {

void check_columns(const BinaryRep& rep, Int m1, Int m2) {
    if (m1 < 0 || m2 < 0 || m1 >= rep.big_m() || m2 >= rep.big_m())
        throw DomainError("column index out of range");
}

}  // namespace

BinaryRep swap_columns(const BinaryRep& rep, Int m1, Int m2) {
    check_columns(rep, m1, m2);
    BinaryRep out = rep;
    for (auto& bits : out.plus) {
        bool a = bits[static_cast<std::size_t>(m1)];
        bits[static_cast<std::size_t>(m1)] = bits[static_cast<std::size_t>(m2)];
        bits[static_cast<std::size_t>(m2)] = a;
    }
    return out;
}

bool swap_reversible(const BinaryRep& rep, Int m1, Int m2) {
    check_columns(rep, m1, m2);
    bool up = false, down = false;
    for (const auto& bits : rep.plus) {
        bool a = bits[static_cast<std::size_t>(m1)], b = bits[static_cast<std::size_t>(m2)];
        up |= a && !b;
        down |= !a && b;
    }
    return !(up && down);
}

CutPath swap_path(const MultiCut& start, Int m1, Int m2) {
    if (!is_optimized(start)) throw ValidationError("swap path must start at an optimized cut set");
    const BinaryRep rep = binary_rep(start);
    check_columns(rep, m1, m2);
    if (!swap_reversible(rep, m1, m2)) throw PathError("columns carry both orientations");

    const Int mu = start.mu, nu = start.nu, big_m = nu - mu;
    std::vector<bool> affected;
    bool any = false;
    Int a = m1, b = m2;
    for (const auto& bits : rep.plus) {
        bool x = bits[static_cast<std::size_t>(m1)], y = bits[static_cast<std::size_t>(m2)];
        if (x != y && !x) std::swap(a, b);
        if (x != y) break;
    }
    for (const auto& bits : rep.plus) {
        bool hit = bits[static_cast<std::size_t>(a)] && !bits[static_cast<std::size_t>(b)];
        affected.push_back(hit);
        any |= hit;
    }
    if (!any) return optimize_cutset(start);

    // The plus entry moves with column a; the event fires when a or b reaches the cut.
    const Int delta = floor_mod(a - b, big_m);
    StepKind kind;
    Int value = 0, landing = 0, when = 0;
    if (delta < nu) {
        kind = StepKind::adjoin_positive;
        value = nu - delta;
        when = floor_mod(a - nu, big_m);
    } else if (delta == nu) {
        kind = StepKind::matching_zero;
        when = floor_mod(a - nu, big_m);
    } else {
        kind = StepKind::adjoin_negative;
        landing = 1 + delta - nu;
        when = b;
    }

    CutPath path{start};
    for (Int t = 0; t < when; ++t) path.push_back(optimized_successor(path.back()));
    std::vector<SuccessorChoice> choices;
    const MultiCut& cur = path.back();
    for (std::size_t r = 0; r < cur.rows.size(); ++r) {
        const auto& row = cur.rows[r];
        const RowCase c = row_case(row);
        if (!affected[r]) {
            choices.push_back(extreme_choice(row, mu, nu));
        } else if (kind == StepKind::matching_zero && c == RowCase::iv) {
            choices.push_back({StepKind::matching_zero, 0, 0});
        } else if (kind == StepKind::adjoin_positive && c == RowCase::ii) {
            choices.push_back({StepKind::adjoin_positive, value, 0});
        } else if (kind == StepKind::adjoin_positive && c == RowCase::iv) {
            choices.push_back({StepKind::adjoin_both, value, 1 - mu});
        } else if (kind == StepKind::adjoin_negative && c == RowCase::iii) {
            choices.push_back({StepKind::adjoin_negative, 0, landing});
        } else if (kind == StepKind::adjoin_negative && c == RowCase::iv) {
            choices.push_back({StepKind::adjoin_both, nu, landing});
        } else {
            throw PathError("row " + std::to_string(r) + " cannot take the swap event");
        }
    }
    path.push_back(step_or_throw(cur, choices, when + 1));
    for (Int t = 0; t < big_m; ++t) path.push_back(optimized_successor(path.back()));

    BinaryRep expected = swap_columns(rep, a, b);
    for (Int t = 0; t < when + 1 + big_m; ++t) expected = rotate_columns(expected);
    if (!(binary_rep(path.back()) == expected) || !is_optimized(path.back()))
        throw PathError("swap path did not produce the exchanged columns");
    return path;
}

std::vector<Int> CycleDecomposition::lengths() const {
    std::vector<Int> out;
    for (const auto& c : cycles) out.push_back(static_cast<Int>(c.size()));
    return out;
}

Int CycleDecomposition::lcm() const {
    Int l = 1;
    for (const auto& c : cycles) l = lcm_int(l, static_cast<Int>(c.size()));
    return l;
}

CycleDecomposition column_cycles(const BinaryRep& rep) {
    const Int rows = rep.row_count();
    const Int big_m = rep.big_m();
    if (rows == 0) throw DomainError("binary representation has no rows");
    auto column = [&](Int m) {
        std::vector<bool> v;
        for (const auto& bits : rep.plus) v.push_back(bits.at(static_cast<std::size_t>(m)));
        return v;
    };
    auto rotate = [&](const std::vector<bool>& v) {
        std::vector<bool> out(v.size());
        for (std::size_t r = 0; r < v.size(); ++r) out[r] = v[(r + v.size() - 1) % v.size()];
        return out;
    };

    std::map<std::vector<bool>, std::vector<Int>> pool;
    for (Int m = big_m - 1; m >= 0; --m) pool[column(m)].push_back(m);

    CycleDecomposition out;
    out.rows = rows;
    std::vector<bool> used(static_cast<std::size_t>(big_m), false);
    for (Int m = 0; m < big_m; ++m) {
        if (used[static_cast<std::size_t>(m)]) continue;
        const auto first = column(m);
        auto& own = pool[first];
        own.erase(std::find(own.begin(), own.end(), m));
        used[static_cast<std::size_t>(m)] = true;
        std::vector<Int> cycle{m};
        for (auto v = rotate(first); v != first; v = rotate(v)) {
            auto it = pool.find(v);
            if (it == pool.end() || it->second.empty())
                throw NotClosedError("column " + std::to_string(cycle.back()) +
                                     " has no partner under the row rotation");
            Int next = it->second.back();
            it->second.pop_back();
            used[static_cast<std::size_t>(next)] = true;
            cycle.push_back(next);
        }
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

}  // namespace nimseq
