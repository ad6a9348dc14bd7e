#include "nimseq/optimize.hpp"

#include <bit>
#include <cstdint>
#include <numeric>

namespace nimseq {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

    std::size_t size(std::size_t x) { return size_[find(x)]; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

std::vector<std::vector<bool>> row_alphabet(Int mu, Int nu) {
    const Int big_m = nu - mu;
    std::vector<std::vector<bool>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << big_m); ++mask) {
        if (std::popcount(mask) != -mu) continue;
        std::vector<bool> bits(static_cast<std::size_t>(big_m));
        for (Int m = 0; m < big_m; ++m) bits[static_cast<std::size_t>(m)] = (mask >> m) & 1;
        out.push_back(std::move(bits));
    }
    return out;
}

struct Event {
    StepKind kind;
    Int value = 0;
    Int landing = 0;
};

// Choice for a row taking the event, or nullopt when its case or sets forbid it.
std::optional<SuccessorChoice> event_choice(const CutRow& row, const Event& e, Int mu, Int nu) {
    const RowCase c = row_case(row);
    switch (e.kind) {
        case StepKind::adjoin_positive:
            if (row.t_star().count(1 + e.value)) return std::nullopt;
            if (c == RowCase::ii) return SuccessorChoice{StepKind::adjoin_positive, e.value, 0};
            if (c == RowCase::iv) return SuccessorChoice{StepKind::adjoin_both, e.value, 1 - mu};
            return std::nullopt;
        case StepKind::adjoin_negative:
            if (row.t.count(e.landing)) return std::nullopt;
            if (c == RowCase::iii) return SuccessorChoice{StepKind::adjoin_negative, 0, e.landing};
            if (c == RowCase::iv) return SuccessorChoice{StepKind::adjoin_both, nu, e.landing};
            return std::nullopt;
        case StepKind::matching_zero:
            if (c == RowCase::iv) return SuccessorChoice{StepKind::matching_zero, 0, 0};
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

std::optional<MultiCut> flush(MultiCut mc, Int steps) {
    for (Int t = 0; t < steps; ++t) {
        std::vector<SuccessorChoice> choices;
        for (const auto& row : mc.rows) choices.push_back(extreme_choice(row, mc.mu, mc.nu));
        auto next = apply_choices(mc, choices);
        if (!next) return std::nullopt;
        mc = *std::move(next);
    }
    return mc;
}

}  // namespace

DigraphSummary explore_digraph(Int rows, Int mu, Int nu) {
    if (rows < 1) throw DomainError("digraph needs at least one row");
    if (mu >= 0 || nu <= 0) throw DomainError("digraph needs mu < 0 < nu");
    const Int big_m = nu - mu;
    if (big_m > 24) throw DomainError("difference bounds too wide to enumerate");

    const auto alphabet = row_alphabet(mu, nu);
    const Int a = static_cast<Int>(alphabet.size());
    DigraphSummary out;
    out.rows = rows;
    if (rows > a) return out;

    Int count = 1;
    for (Int k = 0; k < rows; ++k) {
        count *= a - k;
        if (count > kMaxDigraphVertices) throw DomainError("digraph exceeds the vertex guard");
    }

    std::map<std::vector<bool>, Int> letter;
    for (Int i = 0; i < a; ++i) letter[alphabet[static_cast<std::size_t>(i)]] = i;

    std::vector<std::vector<Int>> vertices;
    std::map<std::vector<Int>, std::size_t> index;
    std::vector<Int> tuple;
    std::vector<bool> taken(static_cast<std::size_t>(a), false);
    auto enumerate = [&](auto&& self) -> void {
        if (static_cast<Int>(tuple.size()) == rows) {
            index.emplace(tuple, vertices.size());
            vertices.push_back(tuple);
            return;
        }
        for (Int i = 0; i < a; ++i) {
            if (taken[static_cast<std::size_t>(i)]) continue;
            taken[static_cast<std::size_t>(i)] = true;
            tuple.push_back(i);
            self(self);
            tuple.pop_back();
            taken[static_cast<std::size_t>(i)] = false;
        }
    };
    enumerate(enumerate);
    out.vertices = static_cast<Int>(vertices.size());

    auto to_cut = [&](const std::vector<Int>& v) {
        BinaryRep rep{mu, nu, {}};
        for (Int i : v) rep.plus.push_back(alphabet[static_cast<std::size_t>(i)]);
        return from_binary(rep);
    };
    auto to_vertex = [&](const MultiCut& mc) {
        std::vector<Int> v;
        for (const auto& bits : binary_rep(mc).plus) v.push_back(letter.at(bits));
        return index.at(v);
    };

    std::vector<Event> events;
    for (Int k = 1; k < nu; ++k) events.push_back({StepKind::adjoin_positive, k, 0});
    for (Int k = 1; k < -mu; ++k) events.push_back({StepKind::adjoin_negative, 0, 1 + k});
    events.push_back({StepKind::matching_zero, 0, 0});

    DisjointSets sets(vertices.size());
    for (std::size_t id = 0; id < vertices.size(); ++id) {
        const MultiCut mc = to_cut(vertices[id]);
        std::vector<SuccessorChoice> extreme;
        for (const auto& row : mc.rows) extreme.push_back(extreme_choice(row, mu, nu));
        if (auto next = apply_choices(mc, extreme)) {
            sets.unite(id, to_vertex(*next));
            ++out.edges;
        }
        for (const auto& e : events) {
            std::vector<std::pair<std::size_t, SuccessorChoice>> legal;
            for (std::size_t r = 0; r < mc.rows.size(); ++r)
                if (auto c = event_choice(mc.rows[r], e, mu, nu)) legal.emplace_back(r, *c);
            if (legal.empty()) continue;
            if (legal.size() > 20) throw DomainError("too many rows to enumerate event subsets");
            // A matching zero has to be taken by every row in case (iv).
            const std::uint64_t full = (std::uint64_t{1} << legal.size()) - 1;
            const std::uint64_t first = e.kind == StepKind::matching_zero ? full : 1;
            for (std::uint64_t mask = first; mask <= full; ++mask) {
                auto choices = extreme;
                for (std::size_t i = 0; i < legal.size(); ++i)
                    if ((mask >> i) & 1) choices[legal[i].first] = legal[i].second;
                auto next = apply_choices(mc, choices);
                if (!next) continue;
                auto end = flush(*std::move(next), big_m);
                if (!end) continue;
                sets.unite(id, to_vertex(*end));
                ++out.edges;
            }
        }
    }

    std::map<std::size_t, bool> closed;
    for (std::size_t id = 0; id < vertices.size(); ++id) {
        std::vector<Int> rotated(vertices[id].begin() + 1, vertices[id].end());
        rotated.push_back(vertices[id].front());
        bool& flag = closed[sets.find(id)];
        flag = flag || sets.find(index.at(rotated)) == sets.find(id);
    }
    for (const auto& [root, is_closed] : closed) {
        ++out.component_sizes[static_cast<Int>(sets.size(root))];
        if (is_closed) ++out.cycled_closed_count;
    }
    return out;
}

}  // namespace nimseq
