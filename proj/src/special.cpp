#include "wellglm/special.hpp"

#include "wellglm/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace wellglm {

double normal_pdf(double x, double mu, double sigma) {
    const double u = (x - mu) / sigma;
    return std::exp(-0.5 * u * u) / (sigma * std::sqrt(2.0 * std::numbers::pi));
}

double two_sided_normal_log_worth(double z) {
    const double x = std::abs(z) / std::numbers::sqrt2;
    // erfc(26) ~ 1e-296; past that use the asymptotic expansion in log space.
    if (x < 26.0) {
        const double p = std::erfc(x);
        return p >= 1.0 ? 0.0 : -std::log10(p);
    }
    const double inv2 = 1.0 / (2.0 * x * x);
    // 1 - 1/(2x^2) + 3/(2x^2)^2 - 15/(2x^2)^3 + 105/(2x^2)^4
    const double series = 1.0 - inv2 * (1.0 - 3.0 * inv2 * (1.0 - 5.0 * inv2 * (1.0 - 7.0 * inv2)));
    const double log_p = -x * x - std::log(x * std::sqrt(std::numbers::pi)) + std::log(series);
    return -log_p / std::numbers::ln10;
}

double regularized_lower_gamma(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw DomainError("regularized_lower_gamma: need a > 0 and x >= 0");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    const double log_prefix = a * std::log(x) - x - std::lgamma(a);
    constexpr double eps = 1e-16;
    if (x < a + 1.0) {
        double term = 1.0 / a;
        double sum = term;
        for (int n = 1; n < 10000; ++n) {
            term *= x / (a + n);
            sum += term;
            if (std::abs(term) < std::abs(sum) * eps) break;
        }
        return std::min(1.0, sum * std::exp(log_prefix));
    }
    // Upper tail Q(a, x) by modified Lentz continued fraction.
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < eps) break;
    }
    return std::max(0.0, 1.0 - std::exp(log_prefix) * h);
}

double chi_square_cdf(double x, double dof) {
    if (x <= 0.0) return 0.0;
    return regularized_lower_gamma(0.5 * dof, 0.5 * x);
}

double chi_square_quantile(double prob, double dof) {
    if (!(prob > 0.0 && prob < 1.0)) throw DomainError("chi_square_quantile: probability must lie in (0, 1)");
    if (!(dof > 0.0)) throw DomainError("chi_square_quantile: degrees of freedom must be positive");
    double lo = 0.0;
    double hi = std::max(1.0, dof);
    while (chi_square_cdf(hi, dof) < prob) {
        lo = hi;
        hi *= 2.0;
    }
    for (int i = 0; i < 400 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (chi_square_cdf(mid, dof) < prob) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace wellglm
