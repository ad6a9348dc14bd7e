#include "nimseq/random.hpp"

namespace nimseq {

ProblemInstance random_instance(std::mt19937_64& rng, const RandomInstanceOptions& options) {
    auto uniform = [&](Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); };
    ProblemInstance inst;
    inst.ys.period = uniform(1, std::max<Int>(1, options.max_period));
    inst.ys.diff_sets.assign(static_cast<std::size_t>(inst.ys.period), {});
    for (auto& set : inst.ys.diff_sets)
        for (Int v = options.min_diff; v <= options.max_diff; ++v)
            if (uniform(0, 2) == 0) set.push_back(v);

    const Int length = uniform(0, options.max_seed_length);
    while (static_cast<Int>(inst.seed.size()) < length) {
        Int v = uniform(0, options.max_seed_value);
        if (std::find(inst.seed.begin(), inst.seed.end(), v) == inst.seed.end()) inst.seed.push_back(v);
    }
    return inst;
}

}  // namespace nimseq
