#include "decomp/theta.hpp"

#include <cmath>
#include <stdexcept>

namespace decomp {

namespace {

constexpr double kBracketTol = 1e-12;
constexpr double kResidualTol = 1e-10;
constexpr int kMaxIterations = 60;

void require_domain(const CentralizerProfile& p) {
    if (p.order < 3)
        throw std::domain_error("theta is defined for groups of order n >= 3");
}

using SizeHistogram = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// The largest exponent is xi*log n, attained by central elements (the
// identity at least); shifting by it keeps every exp argument <= 0.
double f_eval_grouped(const SizeHistogram& hist, std::uint32_t order, double xi) {
    const double n = order;
    const double log_n = std::log(n);
    double shifted_sum = 0.0;
    for (const auto& [size, count] : hist)
        shifted_sum += count * std::exp(xi * log_n * (double(size) / n - 1.0));
    return xi * log_n - std::log(shifted_sum);
}

}  // namespace

double f_eval(const CentralizerProfile& p, double xi) {
    require_domain(p);
    if (!(xi > 0.0) || xi > 2.0)
        throw std::domain_error("f_eval: xi must be in (0, 2]");
    return f_eval_grouped(p.size_histogram(), p.order, xi);
}

ThetaResult solve_theta(const CentralizerProfile& p) {
    require_domain(p);
    const SizeHistogram hist = p.size_histogram();
    auto f = [&](double xi) { return f_eval_grouped(hist, p.order, xi); };

    double lo = 0.5, hi = 1.0;
    if (!(f(lo) < 0.0) || f(hi) < 0.0)
        throw std::logic_error("theta bisection bracket is invalid for this profile");

    ThetaResult r;
    for (r.iterations = 0; r.iterations < kMaxIterations; ++r.iterations) {
        if (hi - lo <= kBracketTol) break;
        const double mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if (std::abs(f_mid) <= kResidualTol) {
            lo = hi = mid;
            break;
        }
        (f_mid < 0.0 ? lo : hi) = mid;
    }
    r.theta = 0.5 * (lo + hi);
    r.residual = std::abs(f(r.theta));
    r.bracket_width = hi - lo;
    return r;
}

ThetaBounds theta_bounds(const CentralizerProfile& p) {
    require_domain(p);
    const double log_n = std::log(double(p.order));
    const double log_z = std::log(double(p.center_size));
    const double ratio_r = double(p.class_count) / p.order;
    ThetaBounds b;
    b.lower_center = log_z / log_n;
    b.lower_classes = 1.0 / (2.0 - ratio_r);
    b.upper = std::max((2.0 / 3.0) * (1.0 + std::log(2.0) / log_n),
                       (log_z + std::log(2.0)) / log_n);
    return b;
}

double critical_size(const CentralizerProfile& p) {
    const ThetaResult r = solve_theta(p);
    const double n = p.order;
    return std::sqrt(r.theta * n * std::log(n));
}

}  // namespace decomp
