#include "decomp/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <omp.h>

#include "decomp/group_spec.hpp"
#include "decomp/theta.hpp"

namespace decomp {

namespace {

constexpr double kZ95 = 1.959963984540054;

int resolve_workers(int workers) {
    return workers > 0 ? workers : omp_get_max_threads();
}

void wilson_interval(SweepPoint& pt) {
    const double t = static_cast<double>(pt.trials);
    const double p = pt.p_hat;
    const double z2 = kZ95 * kZ95;
    const double denom = 1.0 + z2 / t;
    const double center = (p + z2 / (2.0 * t)) / denom;
    const double half =
        kZ95 * std::sqrt(p * (1.0 - p) / t + z2 / (4.0 * t * t)) / denom;
    // The Wilson interval contains the point estimate; keep that true under
    // floating-point rounding at p = 0 or 1.
    pt.ci_low = std::min(std::max(0.0, center - half), p);
    pt.ci_high = std::max(std::min(1.0, center + half), p);
}

}  // namespace

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::both: return "both";
        case Variant::ab_only: return "ab-only";
        case Variant::aa: return "aa";
    }
    return "?";
}

std::optional<Variant> parse_variant(const std::string& name) {
    if (name == "both") return Variant::both;
    if (name == "ab-only") return Variant::ab_only;
    if (name == "aa") return Variant::aa;
    return std::nullopt;
}

std::vector<std::uint32_t> draw_subset(const Group& g, std::uint32_t k,
                                       RandomStream& stream) {
    std::vector<std::uint32_t> draws(k);
    for (auto& d : draws) d = stream.uniform_below(g.order());
    return draws;
}

std::vector<std::uint32_t> support(std::vector<std::uint32_t> draws) {
    std::sort(draws.begin(), draws.end());
    draws.erase(std::unique(draws.begin(), draws.end()), draws.end());
    return draws;
}

void product_union(const Group& g, const std::vector<std::uint32_t>& a,
                   const std::vector<std::uint32_t>& b, Variant variant,
                   DynamicBitset& out) {
    out.clear();
    switch (variant) {
        case Variant::both:
            for (std::uint32_t x : a)
                for (std::uint32_t y : b) {
                    out.set(g.multiply(x, y));
                    out.set(g.multiply(y, x));
                }
            break;
        case Variant::ab_only:
            for (std::uint32_t x : a)
                for (std::uint32_t y : b) out.set(g.multiply(x, y));
            break;
        case Variant::aa:
            for (std::uint32_t x : a)
                for (std::uint32_t y : a) out.set(g.multiply(x, y));
            break;
    }
}

TrialOutcome run_trial(const Group& g, std::uint32_t k, std::uint32_t m,
                       Variant variant, std::uint64_t master_seed,
                       std::uint64_t trial_index, DynamicBitset& scratch) {
    RandomStream stream(master_seed, k, trial_index);
    const auto a = support(draw_subset(g, k, stream));
    std::vector<std::uint32_t> b;
    if (variant != Variant::aa) b = support(draw_subset(g, m, stream));
    product_union(g, a, b, variant, scratch);
    TrialOutcome out;
    out.success = scratch.all();
    out.miss_count = static_cast<std::uint32_t>(g.order() - scratch.count());
    return out;
}

namespace {

// Shared trial-batch driver. The accumulators are plain integers, so the
// aggregate is independent of iteration order and worker count.
struct BatchResult {
    std::uint64_t successes = 0;
    std::uint64_t miss_sum = 0;
    std::uint64_t miss_sq_sum = 0;
    std::vector<std::uint64_t> histogram;
};

BatchResult run_batch_serial(const Group& g, std::uint32_t k, std::uint32_t m,
                             Variant variant, std::uint64_t trials,
                             std::uint64_t master_seed, bool want_histogram) {
    BatchResult r;
    if (want_histogram) r.histogram.assign(g.order() + 1, 0);
    DynamicBitset scratch(g.order());
    for (std::uint64_t t = 0; t < trials; ++t) {
        const TrialOutcome out = run_trial(g, k, m, variant, master_seed, t, scratch);
        r.successes += out.success;
        r.miss_sum += out.miss_count;
        r.miss_sq_sum += std::uint64_t{out.miss_count} * out.miss_count;
        if (want_histogram) ++r.histogram[out.miss_count];
    }
    return r;
}

BatchResult run_batch_parallel(const Group& g, std::uint32_t k, std::uint32_t m,
                               Variant variant, std::uint64_t trials,
                               std::uint64_t master_seed, bool want_histogram,
                               int workers) {
    BatchResult r;
    if (want_histogram) r.histogram.assign(g.order() + 1, 0);
    std::uint64_t successes = 0, miss_sum = 0, miss_sq_sum = 0;
    const int nt = resolve_workers(workers);
#pragma omp parallel num_threads(nt)
    {
        DynamicBitset scratch(g.order());
        std::vector<std::uint64_t> local_hist;
        if (want_histogram) local_hist.assign(g.order() + 1, 0);
#pragma omp for schedule(static) reduction(+ : successes, miss_sum, miss_sq_sum)
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
            const TrialOutcome out = run_trial(g, k, m, variant, master_seed,
                                               static_cast<std::uint64_t>(t), scratch);
            successes += out.success;
            miss_sum += out.miss_count;
            miss_sq_sum += std::uint64_t{out.miss_count} * out.miss_count;
            if (want_histogram) ++local_hist[out.miss_count];
        }
        if (want_histogram) {
#pragma omp critical(mc_histogram_merge)
            for (std::size_t i = 0; i < local_hist.size(); ++i)
                r.histogram[i] += local_hist[i];
        }
    }
    r.successes = successes;
    r.miss_sum = miss_sum;
    r.miss_sq_sum = miss_sq_sum;
    return r;
}

BatchResult run_batch(const Group& g, std::uint32_t k, std::uint32_t m,
                      Variant variant, std::uint64_t trials,
                      std::uint64_t master_seed, bool want_histogram, int workers) {
    if (k < 1 || trials < 1)
        throw std::domain_error("trial plan requires k >= 1 and trials >= 1");
    if (variant != Variant::aa && m < 1)
        throw std::domain_error("trial plan requires m >= 1");
    if (workers == 1)
        return run_batch_serial(g, k, m, variant, trials, master_seed, want_histogram);
    return run_batch_parallel(g, k, m, variant, trials, master_seed, want_histogram,
                              workers);
}

}  // namespace

SweepPoint estimate_p(const Group& g, std::uint32_t k, std::uint32_t m,
                      Variant variant, std::uint64_t trials,
                      std::uint64_t master_seed, int workers) {
    const BatchResult batch =
        run_batch(g, k, m, variant, trials, master_seed, false, workers);
    SweepPoint pt;
    pt.k = k;
    pt.trials = trials;
    pt.successes = batch.successes;
    pt.p_hat = static_cast<double>(batch.successes) / static_cast<double>(trials);
    wilson_interval(pt);
    return pt;
}

SweepPoint estimate_p(const TrialPlan& plan, int workers) {
    const Group g = parse_group_spec(plan.group_spec);
    const std::uint32_t m = plan.m == 0 ? plan.k : plan.m;
    return estimate_p(g, plan.k, m, plan.variant, plan.trials, plan.master_seed,
                      workers);
}

std::vector<double> isotonic_fit(const std::vector<double>& values,
                                 const std::vector<double>& weights) {
    if (values.size() != weights.size())
        throw std::invalid_argument("isotonic_fit: size mismatch");
    // Pool adjacent violators: maintain a stack of blocks with their means.
    struct Block {
        double sum, weight;
        std::size_t count;
    };
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < values.size(); ++i) {
        blocks.push_back({values[i] * weights[i], weights[i], 1});
        while (blocks.size() >= 2) {
            const Block& prev = blocks[blocks.size() - 2];
            const Block& last = blocks.back();
            if (prev.sum / prev.weight <= last.sum / last.weight) break;
            Block merged{prev.sum + last.sum, prev.weight + last.weight,
                         prev.count + last.count};
            blocks.pop_back();
            blocks.back() = merged;
        }
    }
    std::vector<double> fit;
    fit.reserve(values.size());
    for (const Block& b : blocks)
        fit.insert(fit.end(), b.count, b.sum / b.weight);
    return fit;
}

namespace {

std::optional<double> interpolate_crossing(const std::vector<SweepPoint>& points,
                                           const std::vector<double>& smoothed) {
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (smoothed[i] < 0.5 && smoothed[i + 1] >= 0.5) {
            const double dk = double(points[i + 1].k) - double(points[i].k);
            const double dp = smoothed[i + 1] - smoothed[i];
            return double(points[i].k) + (0.5 - smoothed[i]) * dk / dp;
        }
    }
    return std::nullopt;
}

}  // namespace

SweepCurve sweep(const Group& g, std::uint32_t k_min, std::uint32_t k_max,
                 std::uint32_t step, std::uint64_t trials_per_k,
                 std::uint64_t master_seed, Variant variant, double m_ratio,
                 int workers) {
    if (k_min < 1 || k_max < k_min || step < 1)
        throw std::domain_error("sweep: need 1 <= k_min <= k_max and step >= 1");
    if (!(m_ratio > 0.0)) throw std::domain_error("sweep: m_ratio must be > 0");

    SweepCurve curve;
    const double n = g.order();
    if (g.order() >= 3) {
        const ThetaResult th = solve_theta(profile(g, workers));
        curve.theta = th.theta;
        curve.critical_prediction = std::sqrt(th.theta * n * std::log(n));
    } else {
        curve.theta = std::numeric_limits<double>::quiet_NaN();
        curve.critical_prediction = std::numeric_limits<double>::quiet_NaN();
    }

    bool size_warning = false;
    for (std::uint32_t k = k_min; k <= k_max; k += step) {
        const auto m = static_cast<std::uint32_t>(std::lround(m_ratio * k));
        if (m < 1)
            throw std::domain_error("sweep: m_ratio * k rounds to zero");
        curve.points.push_back(
            estimate_p(g, k, m, variant, trials_per_k, master_seed, workers));
        // The unequal-size threshold statement assumes max{k, m} stays well
        // below n / log n; outside that regime the sweep still runs.
        if (g.order() >= 3 && std::max(k, m) >= n / std::log(n)) size_warning = true;
    }
    if (size_warning)
        curve.warnings.push_back("max{k,m} >= n/log n: outside the regime where "
                                 "the k*m threshold matches the equal-size case");

    std::vector<double> values, weights;
    for (const SweepPoint& pt : curve.points) {
        values.push_back(pt.p_hat);
        weights.push_back(static_cast<double>(pt.trials));
    }
    curve.crossing_k = interpolate_crossing(curve.points, isotonic_fit(values, weights));
    return curve;
}

std::string to_csv(const SweepCurve& curve) {
    std::string out = "k,trials,successes,p_hat,ci_low,ci_high\n";
    char line[160];
    for (const SweepPoint& pt : curve.points) {
        std::snprintf(line, sizeof line, "%u,%llu,%llu,%.9g,%.9g,%.9g\n", pt.k,
                      static_cast<unsigned long long>(pt.trials),
                      static_cast<unsigned long long>(pt.successes), pt.p_hat,
                      pt.ci_low, pt.ci_high);
        out += line;
    }
    return out;
}

MissStats miss_stats(const Group& g, std::uint32_t k, std::uint32_t m,
                     Variant variant, std::uint64_t trials,
                     std::uint64_t master_seed, int workers) {
    const BatchResult batch =
        run_batch(g, k, m, variant, trials, master_seed, true, workers);
    MissStats stats;
    stats.trials = trials;
    stats.histogram = batch.histogram;
    const double t = static_cast<double>(trials);
    stats.mean = static_cast<double>(batch.miss_sum) / t;
    stats.variance =
        static_cast<double>(batch.miss_sq_sum) / t - stats.mean * stats.mean;
    return stats;
}

AdaptiveCrossing locate_crossing_adaptive(const Group& g, std::uint32_t k_min,
                                          std::uint32_t k_max,
                                          std::uint64_t trials,
                                          std::uint64_t master_seed,
                                          Variant variant, double m_ratio,
                                          int workers) {
    if (k_min < 1 || k_max <= k_min)
        throw std::domain_error("adaptive crossing: need 1 <= k_min < k_max");

    // Probe with 3-sigma confirmation, doubling trials when ambiguous.
    // Returns +1 (above 1/2), -1 (below), or 0 after the retry budget.
    auto classify = [&](std::uint32_t k) {
        std::uint64_t t = trials;
        for (int attempt = 0; attempt < 4; ++attempt, t *= 2) {
            const auto m = static_cast<std::uint32_t>(std::lround(m_ratio * k));
            const SweepPoint pt =
                estimate_p(g, k, std::max(1u, m), variant, t, master_seed, workers);
            const double sigma =
                std::sqrt(std::max(pt.p_hat * (1.0 - pt.p_hat), 1.0 / double(t)) /
                          double(t));
            if (pt.p_hat - 0.5 > 3.0 * sigma) return 1;
            if (0.5 - pt.p_hat > 3.0 * sigma) return -1;
        }
        return 0;
    };

    AdaptiveCrossing result;
    if (classify(k_min) >= 0 || classify(k_max) <= 0) return result;
    std::uint32_t lo = k_min, hi = k_max;
    while (hi - lo > 1) {
        const std::uint32_t mid = lo + (hi - lo) / 2;
        const int side = classify(mid);
        if (side > 0)
            hi = mid;
        else if (side < 0)
            lo = mid;
        else
            break;  // ambiguous probe: the bracket stands as is
    }
    result.found = true;
    result.k_low = lo;
    result.k_high = hi;
    result.crossing_k = 0.5 * (double(lo) + double(hi));
    return result;
}

}  // namespace decomp
