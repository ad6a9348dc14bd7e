#pragma once

#include <random>

#include "nimseq/core.hpp"

namespace nimseq {

struct RandomInstanceOptions {
    Int max_period = 4;
    Int min_diff = -3;
    Int max_diff = 3;
    Int max_seed_length = 3;
    Int max_seed_value = 8;
};

// Each residue draws a subset of [min_diff, max_diff]; the seed is a set of distinct values.
ProblemInstance random_instance(std::mt19937_64& rng, const RandomInstanceOptions& options = {});

}  // namespace nimseq
