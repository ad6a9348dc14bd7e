#include "nimseq/cutset.hpp"

#include <sstream>

namespace nimseq {

namespace {

Int floor_mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

const Int* lookup(const std::map<Int, Int>& m, Int key) {
    auto it = m.find(key);
    return it == m.end() ? nullptr : &it->second;
}

// d at an index of the row, if the row defines it.
const Int* row_d(const CutRow& row, Int index) {
    if (const Int* v = lookup(row.s, index)) return v;
    return lookup(row.t, index);
}

std::string describe(const char* rule, Int index, const std::string& what) {
    std::ostringstream os;
    os << rule << ": " << what << " at offset " << index;
    return os.str();
}

// Cut after x in a settled prefix, reading only the window [x - nu + 1, x + |mu|].
CutRow settled_cut(std::span<const Int> g, Int x, const DifferenceBounds& b) {
    CutRow row;
    for (Int y = std::max<Int>(0, x - std::max<Int>(b.nu, 0) + 1); y <= x; ++y) {
        Int v = g[static_cast<std::size_t>(y)];
        if (v > x) row.s.emplace(y - x, v - y);
    }
    for (Int y = x + 1; y <= x + std::max<Int>(-b.mu, 0); ++y) {
        Int v = g[static_cast<std::size_t>(y)];
        if (v <= x) row.t.emplace(y - x, v - y);
    }
    return row;
}

}  // namespace

std::set<Int> CutRow::s_star() const {
    std::set<Int> out;
    for (auto [o, d] : t) out.insert(o + d);
    return out;
}

std::set<Int> CutRow::t_star() const {
    std::set<Int> out;
    for (auto [o, d] : s) out.insert(o + d);
    return out;
}

std::optional<std::string> row_violation(const CutRow& row, Int mu, Int nu) {
    for (auto [o, d] : row.s) {
        if (o > 0 || o + d < 1) return describe("a", o, "S entry does not cross the cut");
    }
    for (auto [o, d] : row.t) {
        if (o < 1 || o + d > 0) return describe("b", o, "T entry does not cross the cut");
    }
    if (row.s.size() != row.t.size()) return std::string("c: #S differs from #T");
    std::set<Int> targets;
    for (const auto* side : {&row.s, &row.t})
        for (auto [o, d] : *side)
            if (!targets.insert(o + d).second) return describe("d", o, "target reached twice");
    for (const auto* side : {&row.s, &row.t})
        for (auto [o, d] : *side)
            if (d < mu || d > nu) return describe("bounds", o, "difference value outside [mu, nu]");
    return std::nullopt;
}

void validate_row(const CutRow& row, Int mu, Int nu) {
    if (auto v = row_violation(row, mu, nu)) throw ValidationError(*v);
}

RowExclusions row_exclusions(const CutRow& row) {
    RowExclusions ex;
    const auto t_star = row.t_star();
    const auto s_star = row.s_star();
    for (auto [o1, d1] : row.s) {
        for (auto [o2, d2] : row.s)
            if (o1 < o2 && o1 + d1 > o2 + d2) ex.positive[o1].insert(o2 + d2 - o1);
        for (Int y = 1; y < o1 + d1; ++y)
            if (!t_star.count(y)) ex.positive[o1].insert(y - o1);
    }
    for (auto [o2, d2] : row.t) {
        for (Int y = 1; y < o2; ++y) {
            const Int* dy = lookup(row.t, y);
            if (!dy || y + *dy > o2 + d2) ex.negative[y].insert(o2 + d2 - y);
        }
    }
    ex.zero_after = !row.t.count(1) && !t_star.count(1);
    ex.zero_before = !row.s.count(0) && !s_star.count(0);
    return ex;
}

RowCase row_case(const CutRow& row) {
    const bool in_t = row.t.count(1) > 0;
    const bool in_t_star = row.t_star().count(1) > 0;
    if (in_t && in_t_star) return RowCase::i;
    if (in_t_star) return RowCase::ii;
    if (in_t) return RowCase::iii;
    return RowCase::iv;
}

std::vector<SuccessorChoice> row_choices(const CutRow& row, Int mu, Int nu) {
    std::vector<SuccessorChoice> out;
    const auto t_star = row.t_star();
    std::vector<Int> values, landings;
    for (Int v = 1; v <= nu; ++v)
        if (!t_star.count(1 + v)) values.push_back(v);
    for (Int l = 2; l <= 1 - mu; ++l)
        if (!row.t.count(l)) landings.push_back(l);
    switch (row_case(row)) {
        case RowCase::i:
            out.push_back({StepKind::none, 0, 0});
            break;
        case RowCase::ii:
            for (Int v : values) out.push_back({StepKind::adjoin_positive, v, 0});
            break;
        case RowCase::iii:
            for (Int l : landings) out.push_back({StepKind::adjoin_negative, 0, l});
            break;
        case RowCase::iv:
            for (Int v : values)
                for (Int l : landings) out.push_back({StepKind::adjoin_both, v, l});
            out.push_back({StepKind::matching_zero, 0, 0});
            break;
    }
    return out;
}

CutRow apply_choice(const CutRow& row, const SuccessorChoice& choice) {
    const RowCase c = row_case(row);
    const bool fits = (c == RowCase::i && choice.kind == StepKind::none) ||
                      (c == RowCase::ii && choice.kind == StepKind::adjoin_positive) ||
                      (c == RowCase::iii && choice.kind == StepKind::adjoin_negative) ||
                      (c == RowCase::iv && (choice.kind == StepKind::adjoin_both ||
                                            choice.kind == StepKind::matching_zero));
    if (!fits) throw ValidationError("successor choice does not match the row's case");

    std::map<Int, Int> s, t;
    for (auto [o, d] : row.s)
        if (o + d != 1) s.emplace(o, d);
    for (auto [o, d] : row.t)
        if (o != 1) t.emplace(o, d);

    const bool positive = choice.kind == StepKind::adjoin_positive || choice.kind == StepKind::adjoin_both;
    const bool negative = choice.kind == StepKind::adjoin_negative || choice.kind == StepKind::adjoin_both;
    if (positive) {
        if (choice.value < 1 || row.t_star().count(1 + choice.value))
            throw ValidationError("adjoined positive value collides with T*");
        s.emplace(1, choice.value);
    }
    if (negative) {
        if (choice.landing < 2 || t.count(choice.landing))
            throw ValidationError("adjoined T index is not free");
        t.emplace(choice.landing, 1 - choice.landing);
    }

    CutRow out;
    for (auto [o, d] : s) out.s.emplace(o - 1, d);
    for (auto [o, d] : t) out.t.emplace(o - 1, d);
    return out;
}

std::vector<std::pair<SuccessorChoice, CutRow>> row_successors(const CutRow& row, Int mu, Int nu) {
    std::vector<std::pair<SuccessorChoice, CutRow>> out;
    for (const auto& c : row_choices(row, mu, nu)) out.emplace_back(c, apply_choice(row, c));
    return out;
}

std::optional<SuccessorChoice> classify_step(const CutRow& from, const CutRow& to, Int mu, Int nu) {
    for (const auto& c : row_choices(from, mu, nu))
        if (apply_choice(from, c) == to) return c;
    return std::nullopt;
}

std::optional<std::string> multi_violation(const MultiCut& mc) {
    const Int rows = mc.row_count();
    std::vector<std::pair<std::vector<Int>, std::set<Int>>> keys;
    std::vector<RowExclusions> ex;
    for (Int r = 0; r < rows; ++r) {
        const auto& row = mc.rows[static_cast<std::size_t>(r)];
        if (auto v = row_violation(row, mc.mu, mc.nu)) return "row " + std::to_string(r) + ": " + *v;
        std::vector<Int> t_offsets;
        for (auto [o, d] : row.t) t_offsets.push_back(o);
        keys.emplace_back(std::move(t_offsets), row.t_star());
        ex.push_back(row_exclusions(row));
    }
    for (Int r = 0; r < rows; ++r)
        for (Int q = r + 1; q < rows; ++q)
            if (keys[static_cast<std::size_t>(r)] == keys[static_cast<std::size_t>(q)])
                return "a: rows " + std::to_string(r) + " and " + std::to_string(q) + " are equivalent";
    for (Int r = 0; r < rows; ++r) {
        for (const auto* side : {&ex[static_cast<std::size_t>(r)].positive,
                                 &ex[static_cast<std::size_t>(r)].negative}) {
            for (const auto& [index, values] : *side) {
                for (Int q = 0; q < rows; ++q) {
                    const Int* d = row_d(mc.rows[static_cast<std::size_t>(q)], index);
                    if (d && values.count(*d)) {
                        std::ostringstream os;
                        os << "b: value " << *d << " at offset " << index << " of row " << q
                           << " is excluded by row " << r;
                        return os.str();
                    }
                }
            }
        }
    }
    return std::nullopt;
}

void validate_multi(const MultiCut& mc) {
    if (auto v = multi_violation(mc)) throw ValidationError(*v);
}

namespace {

bool zero_rule_holds(const std::vector<SuccessorChoice>& choices) {
    bool excludes = false, matching = false;
    for (const auto& c : choices) {
        excludes |= c.excludes_zero();
        matching |= c.kind == StepKind::matching_zero;
    }
    return !(excludes && matching);
}

}  // namespace

std::optional<std::vector<SuccessorChoice>> edge_choices(const MultiCut& a, const MultiCut& b) {
    if (a.row_count() != b.row_count() || a.mu != b.mu || a.nu != b.nu) return std::nullopt;
    std::vector<SuccessorChoice> choices;
    for (std::size_t r = 0; r < a.rows.size(); ++r) {
        auto c = classify_step(a.rows[r], b.rows[r], a.mu, a.nu);
        if (!c) return std::nullopt;
        choices.push_back(*c);
    }
    if (!zero_rule_holds(choices)) return std::nullopt;
    return choices;
}

bool is_edge(const MultiCut& a, const MultiCut& b) {
    return !multi_violation(a) && !multi_violation(b) && edge_choices(a, b).has_value();
}

std::optional<MultiCut> apply_choices(const MultiCut& mc, const std::vector<SuccessorChoice>& choices) {
    if (choices.size() != mc.rows.size() || !zero_rule_holds(choices)) return std::nullopt;
    MultiCut out{mc.mu, mc.nu, {}};
    try {
        for (std::size_t r = 0; r < mc.rows.size(); ++r)
            out.rows.push_back(apply_choice(mc.rows[r], choices[r]));
    } catch (const ValidationError&) {
        return std::nullopt;
    }
    if (multi_violation(out)) return std::nullopt;
    return out;
}

std::vector<MultiCut> multi_successors(const MultiCut& mc) {
    std::vector<std::vector<SuccessorChoice>> options;
    for (const auto& row : mc.rows) options.push_back(row_choices(row, mc.mu, mc.nu));
    std::vector<MultiCut> out;
    std::vector<SuccessorChoice> pick(mc.rows.size());
    auto rec = [&](auto&& self, std::size_t r) -> void {
        if (r == options.size()) {
            if (auto next = apply_choices(mc, pick))
                if (std::find(out.begin(), out.end(), *next) == out.end()) out.push_back(*next);
            return;
        }
        for (const auto& c : options[r]) {
            pick[r] = c;
            self(self, r + 1);
        }
    };
    rec(rec, 0);
    return out;
}

MultiCut cycled(const MultiCut& mc) {
    MultiCut out{mc.mu, mc.nu, {}};
    const std::size_t n = mc.rows.size();
    for (std::size_t r = 0; r < n; ++r) out.rows.push_back(mc.rows[(r + 1) % n]);
    return out;
}

CutPath path_from_sequence(const ProblemInstance& instance, const PeriodCertificate& cert) {
    auto check = verify_certificate(instance, cert);
    if (!check.ok) throw InvalidCertificate("refusing an unverified certificate: " + check.witness);

    const ProblemInstance inst = pad_seed(instance);
    const auto b = difference_bounds(inst.ys);
    const Int p = inst.ys.period;
    const Int rows = lcm_int(p, cert.period) / p;
    const Int top = inst.seed.empty() ? -1 : *std::max_element(inst.seed.begin(), inst.seed.end());
    Int base = std::max({cert.preperiod, static_cast<Int>(inst.seed.size()), top + 1,
                         inst.ys.periodic_start}) +
               2 * b.big_m;
    base = (base + p - 1) / p * p;

    Generator gen(inst);
    gen.extend_to(base + (rows + 1) * p + 2 * b.big_m + 2);
    const auto& g = gen.values();

    CutPath path;
    for (Int j = 0; j <= p; ++j) {
        MultiCut mc{b.mu, b.nu, {}};
        for (Int r = 0; r < rows; ++r) mc.rows.push_back(settled_cut(g, base + j + r * p, b));
        path.push_back(std::move(mc));
    }
    if (!(path.back() == cycled(path.front())))
        throw PathError("sequence path does not close under the row rotation");
    return path;
}

PathSequence sequence_from_path(const CutPath& path, bool require_minimal) {
    if (path.size() < 2) throw PathError("a closed path needs at least two cut sets");
    const Int p = static_cast<Int>(path.size()) - 1;
    const MultiCut& first = path.front();
    const Int rows = first.row_count();
    if (rows < 1) throw PathError("cut sets need at least one row");
    for (Int j = 0; j <= p; ++j) {
        const auto& mc = path[static_cast<std::size_t>(j)];
        if (mc.row_count() != rows || mc.mu != first.mu || mc.nu != first.nu)
            throw PathError("cut sets disagree on rows or bounds at position " + std::to_string(j));
        if (auto v = multi_violation(mc))
            throw PathError("invalid cut set at position " + std::to_string(j) + ": " + *v);
    }
    const MultiCut target = cycled(first);
    if (!(path.back() == target)) throw PathError("closure: last cut set is not the cycled first one");
    for (Int j = 1; require_minimal && j < p; ++j)
        if (path[static_cast<std::size_t>(j)] == target)
            throw PathError("minimality: cut set " + std::to_string(j) + " already closes the path");
    for (Int j = 0; j < p; ++j)
        if (!edge_choices(path[static_cast<std::size_t>(j)], path[static_cast<std::size_t>(j + 1)]))
            throw PathError("no edge between positions " + std::to_string(j) + " and " +
                            std::to_string(j + 1));

    Int depth = 0;
    for (const auto& mc : path)
        for (const auto& row : mc.rows)
            for (const auto* side : {&row.s, &row.t})
                for (auto [o, d] : *side) depth = std::max(depth, d < 0 ? -d : d);

    const Int span = rows * p;
    auto cut_after = [&](Int x) -> const CutRow& {
        Int m = floor_mod(x, span);
        return path[static_cast<std::size_t>(m % p)].rows[static_cast<std::size_t>(m / p)];
    };
    auto virtual_d = [&](Int x) -> Int {
        if (const Int* d = lookup(cut_after(x).s, 0)) return *d;
        if (const Int* d = lookup(cut_after(x - 1).t, 1)) return *d;
        return 0;
    };

    ProblemInstance inst;
    inst.ys.period = p;
    inst.ys.diff_sets.assign(static_cast<std::size_t>(p), {});
    for (Int j = 0; j < p; ++j) {
        auto& set = inst.ys.diff_sets[static_cast<std::size_t>(j)];
        const auto& cur = path[static_cast<std::size_t>(j)];
        const auto& prev = path[static_cast<std::size_t>(j == 0 ? p - 1 : j - 1)];
        for (Int r = 0; r < rows; ++r) {
            const auto& row = cur.rows[static_cast<std::size_t>(r)];
            auto ex = row_exclusions(row);
            if (auto it = ex.positive.find(0); it != ex.positive.end())
                set.insert(set.end(), it->second.begin(), it->second.end());
            auto pex = row_exclusions(prev.rows[static_cast<std::size_t>(r)]);
            if (auto it = pex.negative.find(1); it != pex.negative.end())
                set.insert(set.end(), it->second.begin(), it->second.end());
            if (row.s.count(0) && row.s_star().count(0)) set.push_back(0);
        }
    }

    std::vector<char> hit(static_cast<std::size_t>(2 * depth), 0);
    for (Int x = depth; x < 3 * depth; ++x) {
        Int v = x + virtual_d(x);
        if (v >= 0 && v < 2 * depth) hit[static_cast<std::size_t>(v)] = 1;
    }
    for (Int v = 0; v < 2 * depth; ++v)
        if (!hit[static_cast<std::size_t>(v)]) inst.seed.push_back(v);
    if (static_cast<Int>(inst.seed.size()) != depth)
        throw PathError("seed construction produced " + std::to_string(inst.seed.size()) +
                        " values, expected " + std::to_string(depth));
    inst.ys.normalize();

    const auto b = difference_bounds(inst.ys);
    const Int horizon = 3 * depth + 2 * span + b.big_m + 2;
    auto g = generate(inst, horizon);
    for (Int x = depth; x < horizon; ++x) {
        if (g[static_cast<std::size_t>(x)] != x + virtual_d(x)) {
            std::ostringstream os;
            os << "generated G(" << x << ") = " << g[static_cast<std::size_t>(x)]
               << " but the path gives " << x + virtual_d(x);
            throw PathError(os.str());
        }
    }

    PathSequence out;
    out.certificate = minimize(inst, span, depth);
    auto check = verify_certificate(inst, out.certificate);
    if (!check.ok) throw PathError("reconstructed certificate fails: " + check.witness);
    out.instance = std::move(inst);
    return out;
}

std::string format_path(const CutPath& path) {
    if (path.empty()) return {};
    const std::size_t rows = path.front().rows.size();
    const Int last = static_cast<Int>(path.size()) - 1;
    std::vector<std::map<Int, Int>> cells(rows);
    Int lo = 1, hi = 0;
    for (Int j = 0; j <= last; ++j) {
        for (std::size_t r = 0; r < rows; ++r) {
            const auto& row = path[static_cast<std::size_t>(j)].rows[r];
            for (const auto* side : {&row.s, &row.t})
                for (auto [o, d] : *side) {
                    cells[r][j + o] = d;
                    lo = std::min(lo, j + o);
                    hi = std::max(hi, j + o);
                }
        }
    }
    std::ostringstream os;
    for (std::size_t r = 0; r < rows; ++r) {
        for (Int x = lo; x <= hi; ++x) {
            if (x == 1 || (x == last + 1 && last > 0)) os << " |";
            auto it = cells[r].find(x);
            if (it == cells[r].end()) {
                os << "   ";
            } else {
                std::string cell = (it->second > 0 ? "+" : "") + std::to_string(it->second);
                os << std::string(3 - std::min<std::size_t>(3, cell.size()), ' ') << cell;
            }
        }
        os << '\n';
    }
    return os.str();
}

std::string format_multicut(const MultiCut& mc) { return format_path(CutPath{mc}); }

}  // namespace nimseq
