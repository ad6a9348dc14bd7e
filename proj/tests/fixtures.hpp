#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "nimseq/cutset.hpp"
#include "nimseq/random.hpp"
#include "oracles.hpp"

namespace fixture {

using nimseq::CutPath;
using nimseq::CutRow;
using nimseq::Int;
using nimseq::MultiCut;

// Entries with positive d go to S, negative d to T.
inline CutRow row(std::initializer_list<std::pair<Int, Int>> entries) {
    CutRow r;
    for (auto [o, d] : entries) (d > 0 ? r.s : r.t)[o] = d;
    return r;
}

// Cut sets after x = 0..cuts-1 of a difference matrix whose column c holds index c + first.
// Zero marks an undefined entry.
inline CutPath path_of_matrix(Int mu, Int nu, const std::vector<std::vector<Int>>& matrix, Int first,
                              Int cuts) {
    CutPath path;
    for (Int x = 0; x < cuts; ++x) {
        MultiCut mc{mu, nu, {}};
        for (const auto& line : matrix) {
            std::map<Int, Int> d;
            for (std::size_t c = 0; c < line.size(); ++c)
                if (line[c] != 0) d[static_cast<Int>(c) + first] = line[c];
            auto cut = oracle::cut_of_row(d, x);
            mc.rows.push_back(CutRow{cut.s, cut.t});
        }
        path.push_back(mc);
    }
    return path;
}

// Three-row cut set in the (-2, 3) digraph and one of its successors.
inline MultiCut example_from() {
    return {-2, 3, {row({{-2, 3}, {1, -1}}), row({{0, 2}, {1, -2}}), CutRow{}}};
}

inline MultiCut example_to() {
    return {-2, 3, {CutRow{}, row({{-1, 2}, {1, -1}}), row({{0, 2}, {1, -1}})}};
}

// Optimization of example_from, columns from index -2.
inline const std::vector<std::vector<Int>> kOptimizedExample{
    {3, 0, 0, -1, 3, 3, -2, -2, -2, 0},
    {0, 0, 2, -2, 3, -2, 3, -2, -2, 0},
    {0, 0, 0, 3, 3, -2, -2, -2, 0, 0},
};

// Near-optimized path from example_from to example_to, columns from index -2.
inline const std::vector<std::vector<Int>> kNearPathExample{
    {3, 0, 0, -2, 3, 3, -2, -2, -2, 3, 3, -2, -2, -2, 0},
    {0, 3, 0, -2, 3, -2, 3, -2, -2, -1, 3, 3, -2, -2, -2},
    {0, 0, 0, 2, 3, -2, -2, 3, -2, -1, 3, -2, 3, -2, -2},
};

// Six-row (-2, 2) cycle, columns from index -1; its cut sets after 0..4.
inline CutPath r22_path() {
    const std::vector<std::vector<Int>> matrix{
        {2, 2, -2, -2, 2, 2, -2, -2},  {0, 2, 2, -2, -2, 2, 0, -2},
        {0, 0, 2, 2, -2, -2, 0, 0},    {2, 0, -2, 2, 2, -2, -2, 0},
        {0, 2, -2, 2, -2, 2, -2, 0},   {2, 0, 2, -2, 2, -2, 0, -2},
    };
    return path_of_matrix(-2, 2, matrix, -1, 5);
}

inline bool rotation_of(std::vector<Int> a, const std::vector<Int>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a == b) return true;
        std::rotate(a.begin(), a.begin() + 1, a.end());
    }
    return false;
}

// Valid cut sets read off certified random sequences.
inline std::vector<MultiCut> sample_cut_sets(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::vector<MultiCut> out;
    while (static_cast<int>(out.size()) < count) {
        auto inst = nimseq::random_instance(rng);
        if (nimseq::difference_bounds(inst.ys).degenerate()) continue;
        auto path = nimseq::path_from_sequence(inst, nimseq::detect(inst));
        std::uniform_int_distribution<std::size_t> pick(0, path.size() - 1);
        out.push_back(path[pick(rng)]);
    }
    return out;
}

// True when some C_j strictly inside the path already equals cycled(C_0).
inline bool closes_early(const CutPath& path) {
    const auto target = nimseq::cycled(path.front());
    return std::find(path.begin() + 1, path.end() - 1, target) != path.end() - 1;
}

}  // namespace fixture
