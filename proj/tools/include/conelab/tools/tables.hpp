#pragma once

// Special-function and formal-dimension tables behind `conelab table <kind>`.

#include <optional>
#include <string>
#include <vector>

#include "conelab/tools/suites.hpp"

namespace conelab::tools {

inline constexpr const char* kTableSchema = "conelab-table/1";

struct TableConfig {
    std::string kind;
    std::string algebra;        // empty: the kind's default
    std::optional<std::vector<double>> range;  // main grid; unset: the kind's default
    std::vector<double> m;      // secondary parameter where the kind has one
    GridProfile profile = GridProfile::named("default");
};

struct Table {
    std::string schema = kTableSchema;
    std::string kind;
    std::string algebra;
    std::string profile;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::vector<std::string> table_kinds();
Table emit_table(const TableConfig& config);

}  // namespace conelab::tools
