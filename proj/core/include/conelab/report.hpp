#pragma once

// One certified identity: computed value, oracle value, tolerance and verdict.

#include <map>
#include <string>
#include <vector>

namespace conelab {

struct VerificationReport {
    std::string id;
    std::string suite;
    std::string description;
    double computed = 0.0;
    double oracle = 0.0;
    double error = 0.0;      // in the units named by metric
    double tolerance = 0.0;
    std::string metric = "rel";  // rel, abs, spread, verdict
    bool passed = false;
    // expected-divergence entries pass when divergence is detected
    bool divergence_probe = false;
    std::string profile;
    long evaluations = 0;
    std::map<std::string, double> values;
    std::map<std::string, std::string> notes;
};

inline double relative_error(double x, double ref) {
    const double d = x - ref;
    return (d < 0 ? -d : d) / (ref < 0 ? -ref : (ref > 0 ? ref : 1.0));
}

inline VerificationReport make_check(std::string suite, std::string id, std::string description,
                                     double computed, double oracle, double tolerance,
                                     const std::string& profile = "") {
    VerificationReport r;
    r.suite = std::move(suite);
    r.id = std::move(id);
    r.description = std::move(description);
    r.computed = computed;
    r.oracle = oracle;
    r.error = relative_error(computed, oracle);
    r.tolerance = tolerance;
    r.passed = r.error < tolerance;
    r.profile = profile;
    return r;
}

}  // namespace conelab
