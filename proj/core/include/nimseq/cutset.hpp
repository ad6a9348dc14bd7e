#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nimseq/detect.hpp"

namespace nimseq {

// One row of a cut set, normalized so the cut sits after offset 0.
// s maps offsets <= 0 to positive d, t maps offsets >= 1 to negative d.
struct CutRow {
    std::map<Int, Int> s;
    std::map<Int, Int> t;

    std::set<Int> s_star() const;  // targets of t
    std::set<Int> t_star() const;  // targets of s
    bool empty() const noexcept { return s.empty() && t.empty(); }

    auto operator<=>(const CutRow&) const = default;
};

struct MultiCut {
    Int mu = -1;
    Int nu = 1;
    std::vector<CutRow> rows;

    Int row_count() const noexcept { return static_cast<Int>(rows.size()); }
    bool operator==(const MultiCut&) const = default;
};

using CutPath = std::vector<MultiCut>;

// Names the first broken rule ("a", "b", "c", "d" or "bounds"), if any.
std::optional<std::string> row_violation(const CutRow& row, Int mu, Int nu);
void validate_row(const CutRow& row, Int mu, Int nu);

struct RowExclusions {
    std::map<Int, std::set<Int>> positive;
    std::map<Int, std::set<Int>> negative;
    bool zero_after = false;
    bool zero_before = false;
};

RowExclusions row_exclusions(const CutRow& row);

enum class RowCase { i, ii, iii, iv };

RowCase row_case(const CutRow& row);

enum class StepKind { none, adjoin_positive, adjoin_negative, adjoin_both, matching_zero };

// value: d adjoined at index 1; landing: index adjoined to T, with d = 1 - landing.
// Both are expressed in the frame of the row before the step.
struct SuccessorChoice {
    StepKind kind = StepKind::none;
    Int value = 0;
    Int landing = 0;

    bool excludes_zero() const noexcept { return kind == StepKind::adjoin_both; }
    auto operator<=>(const SuccessorChoice&) const = default;
};

std::vector<SuccessorChoice> row_choices(const CutRow& row, Int mu, Int nu);
// Successor row, renormalized to the new cut. Throws if the choice does not fit the row's case.
CutRow apply_choice(const CutRow& row, const SuccessorChoice& choice);
std::vector<std::pair<SuccessorChoice, CutRow>> row_successors(const CutRow& row, Int mu, Int nu);
std::optional<SuccessorChoice> classify_step(const CutRow& from, const CutRow& to, Int mu, Int nu);

std::optional<std::string> multi_violation(const MultiCut& mc);
void validate_multi(const MultiCut& mc);

// Row-wise choices that make (a, b) an edge, or nullopt.
std::optional<std::vector<SuccessorChoice>> edge_choices(const MultiCut& a, const MultiCut& b);
bool is_edge(const MultiCut& a, const MultiCut& b);

// Applies one choice per row; nullopt when the result is not a valid edge target.
std::optional<MultiCut> apply_choices(const MultiCut& mc, const std::vector<SuccessorChoice>& choices);
std::vector<MultiCut> multi_successors(const MultiCut& mc);

MultiCut cycled(const MultiCut& mc);

// Closed path C_0..C_p of a certified sequence; rows are R = lcm(p, period) / p.
CutPath path_from_sequence(const ProblemInstance& instance, const PeriodCertificate& cert);

struct PathSequence {
    ProblemInstance instance;
    PeriodCertificate certificate;
};

// With require_minimal, a path where some C_j (0 < j < p) already equals
// cycled(C_0) is rejected. Paths read off sequences whose cuts repeat inside
// one obstruction period need require_minimal = false; the instance is then
// built over the full p and may have a shorter true obstruction period.
PathSequence sequence_from_path(const CutPath& path, bool require_minimal = true);

// Tabular rendering of a path: one line per row, blank cells where d is undefined.
std::string format_path(const CutPath& path);
std::string format_multicut(const MultiCut& mc);

}  // namespace nimseq
