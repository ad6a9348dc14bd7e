#pragma once

#include <optional>
#include <vector>

#include "nimseq/core.hpp"

namespace nimseq {

// Binomial coefficient, saturating at kMaxIndex.
Int binomial(Int n, Int k);

// Maximal lcm over partitions of `total` into at most `max_parts` parts.
Int max_partition_lcm(Int total, Int max_parts);
// A partition achieving max_partition_lcm, parts in descending order.
std::vector<Int> best_partition(Int total, Int max_parts);

Int k_paper(Int mu, Int nu);
Int k_effective(Int mu, Int nu);

// Logarithmic integral from 2, and its inverse on [0, inf).
double li(double x);
double li_inverse(double y);
double k_asymptotic(Int big_m);

struct PreperiodBound {
    Int exact = 0;
    double paper_form = 0.0;
    Int combined = 0;
    bool combined_valid = false;
};

PreperiodBound preperiod_bound(Int mu, Int nu, Int p, Int k_hat);

struct BoundReport {
    Int mu = -1;
    Int nu = 1;
    Int big_m = 2;
    Int p = 1;
    bool degenerate = false;
    Int window_bound = 1;
    Int binomial_bound = 1;
    Int k_paper = 1;
    Int k_effective = 1;
    std::optional<double> asymptotic_estimate;
    Int preperiod_bound_exact = 0;
    double preperiod_bound_paper = 0.0;
    Int preperiod_bound_combined = 0;
    bool combined_valid = false;
};

BoundReport bound_report(const DifferenceBounds& bounds, Int p, Int k_hat = 0);

}  // namespace nimseq
