// Runs the verification suites and prints one verdict line per acceptance criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "conelab/tools/report_io.hpp"
#include "conelab/tools/suites.hpp"

using namespace conelab;
using namespace conelab::tools;

namespace {

struct Timed {
    SuiteReport report;
    double seconds = 0.0;
    std::string error;
};

Timed run(const std::string& suite, const std::string& profile = "default") {
    SuiteConfig c;
    c.suite = suite;
    c.profile = GridProfile::named(profile);
    Timed t;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        t.report = run_suite(c);
    } catch (const std::exception& e) {
        t.error = e.what();
    }
    t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return t;
}

std::string summary(const Timed& t) {
    if (!t.error.empty()) return "error: " + t.error;
    const auto bad = t.report.failures();
    std::string s = std::to_string(t.report.checks.size() - bad.size()) + "/" +
                    std::to_string(t.report.checks.size()) + " checks";
    for (const auto* f : bad) s += "; failed " + f->id;
    return s;
}

int failures = 0;

void verdict(int id, const std::string& name, bool ok, const std::string& detail, double seconds) {
    std::printf("criterion %2d: %s  %-34s %s (%.1fs)\n", id, ok ? "PASS" : "FAIL", name.c_str(), detail.c_str(),
                seconds);
    std::fflush(stdout);
    if (!ok) ++failures;
}

void suite_criterion(int id, const std::string& name, const std::string& suite, double limit,
                     const std::string& profile = "default") {
    const Timed t = run(suite, profile);
    const bool in_time = limit <= 0.0 || t.seconds < limit;
    std::string detail = summary(t);
    if (!in_time) detail += "; over the " + std::to_string(int(limit)) + " s limit";
    verdict(id, name, t.error.empty() && t.report.passed() && in_time, detail, t.seconds);
}

}  // namespace

int main() {
    suite_criterion(1, "Jordan identities", "jordan", 5.0);
    suite_criterion(2, "cone Gamma certification", "gamma", 60.0, "strict");
    suite_criterion(3, "SU(1,1) factorization", "pkn", 0.0);
    suite_criterion(4, "square-integrability dichotomy", "square-integrability", 10.0);
    suite_criterion(5, "Whittaker equivariance", "whittaker", 0.0);
    suite_criterion(6, "lowest K-type norm", "lkt-norm", 120.0);
    suite_criterion(7, "formal dimension", "formal-dim", 0.0);
    suite_criterion(8, "orthogonality factorization", "orthogonality", 0.0);
    suite_criterion(9, "Bessel defining identity", "bessel", 0.0);
    suite_criterion(10, "kernel covariance and Hardy", "kernel", 0.0);

    // full default-profile run, then a rerun compared byte for byte
    const Timed first = run("all");
    const Timed second = run("all");
    const bool same = first.error.empty() && second.error.empty() &&
                      deterministic_json(first.report) == deterministic_json(second.report);
    const bool ok = same && first.report.passed() && first.seconds < 600.0;
    std::string detail = summary(first) + (same ? ", rerun byte-identical" : ", rerun differs");
    verdict(11, "determinism and full run", ok, detail, first.seconds);

    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
