#pragma once

// JSON is the canonical report format; CSV is a projection of it.

#include <ostream>
#include <string>

#include "json.hpp"

#include "conelab/tools/suites.hpp"
#include "conelab/tools/tables.hpp"

namespace conelab {

void to_json(nlohmann::json& j, const GridProfile& p);
void from_json(const nlohmann::json& j, GridProfile& p);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);
void to_json(nlohmann::json& j, const CalibrationEntry& c);
void from_json(const nlohmann::json& j, CalibrationEntry& c);
void to_json(nlohmann::json& j, const FormalDimensionRecord& r);
void from_json(const nlohmann::json& j, FormalDimensionRecord& r);

namespace tools {

void to_json(nlohmann::json& j, const SuiteReport& r);
void from_json(const nlohmann::json& j, SuiteReport& r);
void to_json(nlohmann::json& j, const Table& t);
void from_json(const nlohmann::json& j, Table& t);

// Two-space indented JSON with a trailing newline.
std::string dump_json(const nlohmann::json& j);
// The report without its sidecar, as compared by the determinism check.
std::string deterministic_json(const SuiteReport& r);

std::string report_csv(const SuiteReport& r);
std::string table_csv(const Table& t);

std::string render(const SuiteReport& r, Format f);
std::string render(const Table& t, Format f);

// Writes to path, or to stdout when path is empty or "-".
void write_output(const std::string& text, const std::string& path);

}  // namespace tools
}  // namespace conelab
