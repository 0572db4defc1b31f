#ifndef TABLECOUNT_LOG_COUNT_HPP
#define TABLECOUNT_LOG_COUNT_HPP

#include <optional>
#include <string>

namespace tablecount {

// Every way this library can produce an estimate of ln Omega.
enum class Method {
    EC,
    EC_SYM,
    GC,
    GM,
    DE,
    BBK,
    GMK,
    MAXENT_G,
    MAXENT_E,
    SIS,
    EXACT,
    // 0-1 matrix family
    EC0,
    GC0,
    BBK0,
    GMW0,
    CGM0,
};

// Stable string ids used by the CLI and benchmark output.
std::string method_id(Method m);
Method method_from_id(const std::string& id);

// True for methods that carry a statistical standard error.
inline bool is_sampling_method(Method m) { return m == Method::SIS; }

// An estimate of ln Omega(r, c) in natural log, tagged with its origin.
// std_err is set only for sampling methods. ln_omega is -inf exactly when
// the method certifies the count is zero (infeasible 0-1 margins), and is
// never NaN.
struct LogCount {
    double ln_omega;
    Method method;
    std::optional<double> std_err;

    LogCount(double ln, Method m) : ln_omega(ln), method(m) {}
    LogCount(double ln, Method m, double err) : ln_omega(ln), method(m), std_err(err) {}
};

}  // namespace tablecount

#endif
