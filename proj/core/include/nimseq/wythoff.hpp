#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nimseq/detect.hpp"

namespace nimseq {

std::vector<std::vector<Int>> grundy_table(Int rows, Int cols);

struct WythoffRowResult {
    Int row = 0;
    PeriodCertificate certificate;
    ProblemInstance instance;
    std::vector<Int> prefix;  // G_y(0..) covering at least the preperiod

    Int value(Int x) const;
};

// Instance for row y built from the certified rows below it. With
// use_product the obstruction period is the product of lower periods.
ProblemInstance row_instance(Int y, const std::vector<WythoffRowResult>& lower,
                             bool use_product = false);

struct WythoffAnalysis {
    std::vector<WythoffRowResult> rows;
    std::optional<std::string> failure;
};

WythoffAnalysis analyze_rows(Int max_row, Int budget = 0, Method method = Method::cuts);

}  // namespace nimseq
