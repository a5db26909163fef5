#pragma once

#include <cstdint>

#include "decomp/structure.hpp"

namespace decomp {

// Root of f on [1/2, 1], where
//   f(xi) = 2 xi log n - log sum_x exp(xi log n |C(x)|/n).
// f is negative at 1/2, non-negative at 1, and strictly increasing, so the
// root is unique; it equals 1 exactly when the group is abelian.
struct ThetaResult {
    double theta = 0;
    double residual = 0;       // |f(theta)|
    double bracket_width = 0;  // final bisection interval width
    int iterations = 0;
};

// Closed-form bounds on theta from the centralizer profile.
struct ThetaBounds {
    double lower_center = 0;   // log|Z| / log n
    double lower_classes = 0;  // 1 / (2 - R/n), always > 1/2
    double upper = 0;          // max{ 2/3 (1 + log2/log n), (log|Z| + log2)/log n }
};

// Evaluates f at xi via a shifted log-sum-exp grouped by distinct
// centralizer sizes. Requires n >= 3 and 0 < xi <= 2.
double f_eval(const CentralizerProfile& p, double xi);

// Bisection on [1/2, 1]; stops at bracket width <= 1e-12 or |f| <= 1e-10.
ThetaResult solve_theta(const CentralizerProfile& p);

ThetaBounds theta_bounds(const CentralizerProfile& p);

// sqrt(theta * n * log n): the decomposition threshold for subset sizes.
double critical_size(const CentralizerProfile& p);

}  // namespace decomp
