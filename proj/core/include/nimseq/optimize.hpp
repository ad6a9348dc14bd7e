#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nimseq/bounds.hpp"
#include "nimseq/cutset.hpp"

namespace nimseq {

// The cut set reached after M extreme steps: every S entry has d = nu, every T entry d = mu,
// with T and T* unchanged.
CutRow optimized_row(const CutRow& row, Int mu, Int nu);
MultiCut optimized_cut(const MultiCut& mc);
bool is_optimized(const MultiCut& mc);

// Successor choice that adjoins only extreme values.
SuccessorChoice extreme_choice(const CutRow& row, Int mu, Int nu);
MultiCut optimized_successor(const MultiCut& mc);

// C_0 .. C_M, each the optimized successor of the previous one.
CutPath optimize_cutset(const MultiCut& mc);

// Successor of optimized_cut(from) whose T and T* sets match those of `to`.
MultiCut lift_successor(const MultiCut& from, const MultiCut& to);

// Non-extreme values a row adjoins on its way to the target cut set.
struct RowPlan {
    bool zero = false;
    std::optional<Int> positive;  // k in [1, nu - 1]
    std::optional<Int> negative;  // k' in [1, |mu| - 1], adjoined as -k'
};

std::vector<RowPlan> plan_edge(const MultiCut& from, const MultiCut& to);
// Path D_0 .. D_{NM+1} from an optimized start, one block of M steps per distinct event.
CutPath near_path(const MultiCut& start, const std::vector<RowPlan>& plan);
CutPath near_path_between(const MultiCut& from, const MultiCut& to);

struct BinaryRep {
    Int mu = -1;
    Int nu = 1;
    std::vector<std::vector<bool>> plus;  // R rows of M entries

    Int big_m() const noexcept { return nu - mu; }
    Int row_count() const noexcept { return static_cast<Int>(plus.size()); }
    bool operator==(const BinaryRep&) const = default;
};

BinaryRep binary_rep(const MultiCut& mc);
MultiCut from_binary(const BinaryRep& rep);
BinaryRep parse_binary(Int mu, Int nu, const std::vector<std::string>& lines);
std::string format_binary(const BinaryRep& rep);

// One optimized step, seen on the binary representation.
BinaryRep rotate_columns(const BinaryRep& rep);
BinaryRep swap_columns(const BinaryRep& rep, Int m1, Int m2);
bool swap_reversible(const BinaryRep& rep, Int m1, Int m2);

// Path from an optimized cut set that exchanges the (+, -) entries of columns m1 and m2
// in every row where they differ, followed by M flush steps. Columns are those of the start.
// Throws PathError when rows carry both orientations.
CutPath swap_path(const MultiCut& start, Int m1, Int m2);

struct CycleDecomposition {
    Int rows = 1;
    std::vector<std::vector<Int>> cycles;  // column indices, each following the previous under the row rotation

    std::vector<Int> lengths() const;
    Int lcm() const;
};

// Throws NotClosedError when the column multiset is not closed under the row rotation.
CycleDecomposition column_cycles(const BinaryRep& rep);

struct ExtremalResult {
    ProblemInstance instance;
    PeriodCertificate certificate;
    Int p = 1;
    Int expected_period = 1;
    std::vector<Int> cycle_lengths;
    CutPath path;
};

ExtremalResult construct_extremal(Int mu, Int nu);

struct DigraphSummary {
    Int rows = 0;
    Int vertices = 0;
    Int edges = 0;
    std::map<Int, Int> component_sizes;  // size -> number of components
    Int cycled_closed_count = 0;
};

inline constexpr Int kMaxDigraphVertices = 10'000'000;

// Explores the optimized vertices of the R-row digraph. Throws DomainError past the guard.
DigraphSummary explore_digraph(Int rows, Int mu, Int nu);

}  // namespace nimseq
