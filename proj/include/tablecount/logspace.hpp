#ifndef TABLECOUNT_LOGSPACE_HPP
#define TABLECOUNT_LOGSPACE_HPP

#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace tablecount {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(exp(a) + exp(b)) without overflow.
inline double log_add(double a, double b) {
    if (a < b) std::swap(a, b);
    if (b == kNegInf) return a;
    return a + std::log1p(std::exp(b - a));
}

// log(sum exp(x_i)), two-pass max-shift.
inline double log_sum_exp(std::span<const double> x) {
    double m = kNegInf;
    for (double v : x) {
        if (v > m) m = v;
    }
    if (m == kNegInf || std::isinf(m)) return m;
    double s = 0.0;
    for (double v : x) s += std::exp(v - m);
    return m + std::log(s);
}

// Summary statistics of importance weights given in natural log.
struct LogWeightStats {
    double log_mean;     // log(mean w)
    double log_sum_sq;   // log(sum w^2)
    double rel_sd;       // sd(w) / mean(w)
    double ess;          // (sum w)^2 / sum w^2
};

// All quantities computed from max-shifted weights, so the absolute scale
// of the log weights never enters an exp().
inline LogWeightStats log_weight_stats(std::span<const double> logw) {
    const std::size_t k = logw.size();
    double m = kNegInf;
    for (double v : logw) {
        if (v > m) m = v;
    }
    double s1 = 0.0, s2 = 0.0;
    for (double v : logw) {
        const double a = std::exp(v - m);
        s1 += a;
        s2 += a * a;
    }
    LogWeightStats out;
    out.log_mean = m + std::log(s1 / static_cast<double>(k));
    out.log_sum_sq = 2.0 * m + std::log(s2);
    out.ess = s1 * s1 / s2;
    const double mean_a = s1 / static_cast<double>(k);
    double var = 0.0;
    for (double v : logw) {
        const double d = std::exp(v - m) - mean_a;
        var += d * d;
    }
    var /= static_cast<double>(k > 1 ? k - 1 : 1);
    out.rel_sd = std::sqrt(var) / mean_a;
    return out;
}

}  // namespace tablecount

#endif
