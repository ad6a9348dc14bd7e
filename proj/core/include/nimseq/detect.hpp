#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "nimseq/bounds.hpp"
#include "nimseq/core.hpp"

namespace nimseq {

enum class Method { cuts, window };

// Cut after x: S entries are (offset <= 0, d) with G above the cut, T entries
// are (offset >= 1, d) with G below it. Offsets are relative to x.
struct Cut {
    Int position = 0;
    std::vector<std::pair<Int, Int>> s_entries;
    std::vector<std::pair<Int, Int>> t_entries;

    bool operator==(const Cut&) const = default;
};

struct DetectStats {
    Int scanned_positions = 0;
    Int generated_terms = 0;
    Int rejected_repeats = 0;
    Int witness_shift = 0;
    Int witness_start = 0;
};

struct DetectOptions {
    Method method = Method::cuts;
    Int budget = 0;  // generated terms; 0 selects the default
    std::function<void(Int position, std::size_t signature_hash)> trace;
};

Cut cut_at(std::span<const Int> prefix, Int x, const DifferenceBounds& bounds);

// Default term budget for detect on this instance.
Int default_budget(const ProblemInstance& instance);

PeriodCertificate detect(const ProblemInstance& instance, const DetectOptions& options,
                         DetectStats* stats = nullptr);
PeriodCertificate detect(const ProblemInstance& instance, Method method = Method::cuts,
                         Int budget = 0);

PeriodCertificate minimize(const ProblemInstance& instance, Int witness_shift, Int start);

// Residue mod p -> difference values excluded at that residue, gathered from
// the inversions (x, y) of the prefix with x >= from.
std::map<Int, std::set<Int>> exclusions_from_inversions(std::span<const Int> prefix, Int p,
                                                        Int from = 0);

}  // namespace nimseq
