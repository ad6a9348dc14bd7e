#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nimseq/errors.hpp"

namespace nimseq {

using Int = std::int64_t;

inline constexpr Int kMaxIndex = Int{1} << 62;

// Obstruction sets Y_x = diff_sets[x mod p] + x for x >= periodic_start.
// Below that, prefix_sets (when given) holds the absolute Y_x for
// x in [seed length, periodic_start); otherwise the periodic law is used.
struct DiffSetSequence {
    Int period = 1;
    std::vector<std::vector<Int>> diff_sets{{}};
    Int periodic_start = 0;
    std::vector<std::vector<Int>> prefix_sets;

    // Sorts and deduplicates every diff set.
    void normalize();
};

struct ProblemInstance {
    DiffSetSequence ys;
    std::vector<Int> seed;
};

struct DifferenceBounds {
    Int mu = -1;
    Int nu = 1;
    Int big_m = 2;

    bool degenerate() const noexcept { return nu <= 0 || mu >= 0; }
    Int min_side() const noexcept { return std::min(-mu, nu); }
    // Range [lo, hi] that settled difference values stay inside.
    Int lo() const noexcept { return std::min<Int>(0, mu); }
    Int hi() const noexcept { return std::max<Int>(0, nu); }
};

struct PeriodCertificate {
    Int preperiod = 0;
    Int period = 1;
    std::vector<Int> diff_period{0};

    bool operator==(const PeriodCertificate&) const = default;
};

struct Verification {
    bool ok = false;
    std::string witness;
};

Int mex(std::span<const Int> values);

DifferenceBounds difference_bounds(const DiffSetSequence& ys);

// First structural violation, if any. Each message names the offending index.
std::optional<ValidationError> find_violation(const ProblemInstance& instance);
void validate_instance(const ProblemInstance& instance);

// Seed extended through periodic_start by direct evaluation.
std::vector<Int> effective_seed(const ProblemInstance& instance);
// Same instance with the padded seed folded in and no prefix sets.
ProblemInstance pad_seed(const ProblemInstance& instance);

// K-hat = max seed value - seed length; 0 for an empty seed.
Int k_hat(std::span<const Int> seed);

// Greedy mex engine. Owns the generated prefix and its inverse.
class Generator {
public:
    explicit Generator(ProblemInstance instance);

    const ProblemInstance& instance() const noexcept { return instance_; }
    Int seed_length() const noexcept { return static_cast<Int>(instance_.seed.size()); }

    void extend_to(Int n);
    Int at(Int x);
    Int size() const noexcept { return static_cast<Int>(values_.size()); }
    const std::vector<Int>& values() const noexcept { return values_; }

    // Index x with G(x) = v among generated terms, or -1.
    Int index_of(Int v) const noexcept;

private:
    Int next();
    bool used(Int v) const noexcept;
    void mark(Int v, Int x);

    ProblemInstance instance_;
    std::vector<Int> values_;
    std::vector<Int> inverse_;
    Int frontier_ = 0;
};

std::vector<Int> generate(const ProblemInstance& instance, Int up_to);

ProblemInstance simple_instance(Int mu, Int nu);
PeriodCertificate simple_certificate(Int mu, Int nu);

// Period-1 certificate for degenerate bounds; nullopt otherwise.
std::optional<PeriodCertificate> degenerate_certificate(const ProblemInstance& instance,
                                                        Int budget = 0);

Verification verify_certificate(const ProblemInstance& instance, const PeriodCertificate& cert);

Int gcd_int(Int a, Int b);
Int lcm_int(Int a, Int b);

}  // namespace nimseq
