#pragma once

// Verification suites behind `conelab verify`, `conelab su11` and `conelab calibrate`,
// shared with the acceptance test.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "conelab/conelab.hpp"

namespace conelab::tools {

inline constexpr const char* kReportSchema = "conelab-report/1";
inline constexpr const char* kToolVersion = "1.0.0";

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv };

struct SuiteConfig {
    std::string suite;
    std::string algebra;       // "rank1", "sym2" or empty for the suite default
    std::vector<double> m;     // empty: suite default grid
    std::vector<double> v;     // multiples of e; empty: suite default
    std::vector<int> n;        // SU(1,1) weights; empty: suite default
    GridProfile profile = GridProfile::named("default");
    int samples = 0;           // 0: suite default
    std::string out;
    Format format = Format::Json;

    void validate() const;
};

struct SuiteReport {
    std::string schema = kReportSchema;
    std::string tool_version = kToolVersion;
    std::string command;
    std::string suite;
    GridProfile profile;
    std::map<std::string, std::string> parameters;
    std::vector<CalibrationEntry> calibration;
    std::vector<VerificationReport> checks;
    std::vector<FormalDimensionRecord> formal_dimension;
    std::map<std::string, double> statistics;
    // wall-clock data; excluded from determinism comparisons
    std::map<std::string, std::string> sidecar;

    bool passed() const;
    std::vector<const VerificationReport*> failures() const;
};

std::vector<std::string> suite_names();
std::vector<std::string> su11_commands();

SuiteReport run_suite(const SuiteConfig& config);
SuiteReport run_su11(const std::string& command, const SuiteConfig& config);
SuiteReport run_calibrate(const GridProfile& profile);

// "1,2,3", "lo:hi:step" (inclusive) or empty. "e" stands for 1.
std::vector<double> parse_grid(const std::string& text);
std::vector<int> parse_int_grid(const std::string& text);

// CLI flag > CONELAB_PROFILE > "default"; profiles from config_path are merged in first.
GridProfile resolve_profile(const std::string& flag, const std::string& config_path);

}  // namespace conelab::tools
