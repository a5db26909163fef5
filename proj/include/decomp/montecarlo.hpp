#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "decomp/bitset.hpp"
#include "decomp/group.hpp"
#include "decomp/rng.hpp"

namespace decomp {

// Which covering event a trial tests.
enum class Variant {
    both,     // AB u BA = G
    ab_only,  // AB = G
    aa,       // AA = G (B is ignored and not drawn)
};

const char* variant_name(Variant v);
std::optional<Variant> parse_variant(const std::string& name);

struct TrialPlan {
    std::string group_spec;
    std::uint32_t k = 1;
    std::uint32_t m = 0;  // 0 means m = k
    Variant variant = Variant::both;
    std::uint64_t trials = 1;
    std::uint64_t master_seed = 0;
};

struct SweepPoint {
    std::uint32_t k = 0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double p_hat = 0;
    double ci_low = 0;   // Wilson 95% interval
    double ci_high = 0;
};

struct SweepCurve {
    std::vector<SweepPoint> points;
    std::optional<double> crossing_k;    // empty when the curve never crosses 1/2
    double theta = 0;                    // NaN when n < 3
    double critical_prediction = 0;      // sqrt(theta n log n); NaN when n < 3
    std::vector<std::string> warnings;
};

// k independent uniform element indices (a multiset; callers deduplicate
// into the support where set semantics matter).
std::vector<std::uint32_t> draw_subset(const Group& g, std::uint32_t k,
                                       RandomStream& stream);

// Sorted deduplicated support of a draw multiset.
std::vector<std::uint32_t> support(std::vector<std::uint32_t> draws);

// Membership bits of the product set over the given supports.
void product_union(const Group& g, const std::vector<std::uint32_t>& a,
                   const std::vector<std::uint32_t>& b, Variant variant,
                   DynamicBitset& out);

// One reproducible trial: the stream is derived from
// (master_seed, k, trial_index), so outcomes are independent of scheduling.
struct TrialOutcome {
    bool success = false;
    std::uint32_t miss_count = 0;  // |S| = n - |product union|
};
TrialOutcome run_trial(const Group& g, std::uint32_t k, std::uint32_t m,
                       Variant variant, std::uint64_t master_seed,
                       std::uint64_t trial_index, DynamicBitset& scratch);

// Success-probability estimate over plan.trials independent trials.
// workers: 0 = runtime default, 1 = serial reference path, w > 1 = OpenMP.
// The result is identical for every worker count.
SweepPoint estimate_p(const Group& g, std::uint32_t k, std::uint32_t m,
                      Variant variant, std::uint64_t trials,
                      std::uint64_t master_seed, int workers = 0);
SweepPoint estimate_p(const TrialPlan& plan, int workers = 0);

// Sweep k over [k_min, k_max] by step; m = round(m_ratio * k) per point.
// The crossing of 1/2 is located by isotonic smoothing then linear
// interpolation.
SweepCurve sweep(const Group& g, std::uint32_t k_min, std::uint32_t k_max,
                 std::uint32_t step, std::uint64_t trials_per_k,
                 std::uint64_t master_seed, Variant variant = Variant::both,
                 double m_ratio = 1.0, int workers = 0);

std::string to_csv(const SweepCurve& curve);

// Per-trial |S| summary.
struct MissStats {
    std::uint64_t trials = 0;
    double mean = 0;
    double variance = 0;  // population variance
    std::vector<std::uint64_t> histogram;  // index = |S|, size n+1
};
MissStats miss_stats(const Group& g, std::uint32_t k, std::uint32_t m,
                     Variant variant, std::uint64_t trials,
                     std::uint64_t master_seed, int workers = 0);

// Weighted isotonic (nondecreasing) least-squares fit, pool-adjacent-
// violators. Exposed for the sweep tests.
std::vector<double> isotonic_fit(const std::vector<double>& values,
                                 const std::vector<double>& weights);

// Adaptive bisection in k for the crossing of 1/2: the bracket is halved
// while estimates confirm each side with a 3-sigma margin, doubling the
// trial count when a probe is ambiguous.
struct AdaptiveCrossing {
    bool found = false;
    std::uint32_t k_low = 0;   // p < 1/2 confirmed
    std::uint32_t k_high = 0;  // p >= 1/2 confirmed
    double crossing_k = 0;
};
AdaptiveCrossing locate_crossing_adaptive(const Group& g, std::uint32_t k_min,
                                          std::uint32_t k_max,
                                          std::uint64_t trials,
                                          std::uint64_t master_seed,
                                          Variant variant = Variant::both,
                                          double m_ratio = 1.0, int workers = 0);

}  // namespace decomp
