#pragma once

namespace wellglm {

/// Standard Normal density with location mu and scale sigma.
double normal_pdf(double x, double mu = 0.0, double sigma = 1.0);

/// -log10 of the two-sided standard-Normal tail probability P(|Z| >= |z|).
/// Stays finite where the probability itself underflows.
double two_sided_normal_log_worth(double z);

/// Regularized lower incomplete gamma function P(a, x), a > 0, x >= 0.
double regularized_lower_gamma(double a, double x);

double chi_square_cdf(double x, double dof);

/// Inverse of chi_square_cdf by bisection, prob in (0, 1).
double chi_square_quantile(double prob, double dof);

}  // namespace wellglm
