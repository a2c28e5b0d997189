#include "conelab/tools/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;

namespace conelab {

namespace {

// JSON has no NaN or infinity; those travel as strings.
json num(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

double num(const json& j) {
    if (j.is_number()) return j.get<double>();
    const std::string s = j.get<std::string>();
    if (s == "nan") return std::nan("");
    if (s == "inf") return HUGE_VAL;
    if (s == "-inf") return -HUGE_VAL;
    throw tools::UsageError("report: bad number '" + s + "'");
}

json num_map(const std::map<std::string, double>& m) {
    json j = json::object();
    for (const auto& [k, v] : m) j[k] = num(v);
    return j;
}

std::map<std::string, double> num_map(const json& j) {
    std::map<std::string, double> m;
    for (const auto& [k, v] : j.items()) m[k] = num(v);
    return m;
}

}  // namespace

void to_json(json& j, const GridProfile& p) {
    j = json{{"name", p.name},
             {"rel_tol", num(p.rel_tol)},
             {"abs_tol", num(p.abs_tol)},
             {"subdivisions", p.subdivisions},
             {"depth", p.depth}};
}

void from_json(const json& j, GridProfile& p) {
    p.name = j.at("name").get<std::string>();
    p.rel_tol = num(j.at("rel_tol"));
    p.abs_tol = num(j.at("abs_tol"));
    p.subdivisions = j.at("subdivisions").get<std::array<int, 3>>();
    p.depth = j.at("depth").get<int>();
}

void to_json(json& j, const VerificationReport& r) {
    j = json{{"id", r.id},
             {"suite", r.suite},
             {"description", r.description},
             {"computed", num(r.computed)},
             {"oracle", num(r.oracle)},
             {"error", num(r.error)},
             {"tolerance", num(r.tolerance)},
             {"metric", r.metric},
             {"passed", r.passed},
             {"divergence_probe", r.divergence_probe},
             {"profile", r.profile},
             {"evaluations", r.evaluations},
             {"values", num_map(r.values)},
             {"notes", r.notes}};
}

void from_json(const json& j, VerificationReport& r) {
    r.id = j.at("id").get<std::string>();
    r.suite = j.at("suite").get<std::string>();
    r.description = j.at("description").get<std::string>();
    r.computed = num(j.at("computed"));
    r.oracle = num(j.at("oracle"));
    r.error = num(j.at("error"));
    r.tolerance = num(j.at("tolerance"));
    r.metric = j.at("metric").get<std::string>();
    r.passed = j.at("passed").get<bool>();
    r.divergence_probe = j.at("divergence_probe").get<bool>();
    r.profile = j.at("profile").get<std::string>();
    r.evaluations = j.at("evaluations").get<long>();
    r.values = num_map(j.at("values"));
    r.notes = j.at("notes").get<std::map<std::string, std::string>>();
}

void to_json(json& j, const CalibrationEntry& c) {
    j = json{{"name", c.name}, {"value", num(c.value)}, {"analytic", num(c.analytic)}, {"anchor", c.anchor}};
}

void from_json(const json& j, CalibrationEntry& c) {
    c.name = j.at("name").get<std::string>();
    c.value = num(j.at("value"));
    c.analytic = num(j.at("analytic"));
    c.anchor = j.at("anchor").get<std::string>();
}

void to_json(json& j, const FormalDimensionRecord& r) {
    json v = json::array();
    for (double x : r.v) v.push_back(num(x));
    json m = json::array();
    for (double x : r.m.entries()) m.push_back(num(x));
    j = json{{"algebra", r.algebra},
             {"m", m},
             {"v", v},
             {"numeric_d", num(r.numeric_d)},
             {"closed_form_shape", num(r.closed_form_shape)},
             {"fitted_constant", num(r.fitted_constant)},
             {"reciprocal_constant", num(r.reciprocal_constant)},
             {"lkt_norm", num(r.lkt_norm)},
             {"whittaker_norm", num(r.whittaker_norm)},
             {"gn_integral", num(r.gn_integral)},
             {"gn_error", num(r.gn_error)},
             {"jacobian", num(r.jacobian)},
             {"profile", r.profile},
             {"evaluations", r.evaluations}};
}

void from_json(const json& j, FormalDimensionRecord& r) {
    r.algebra = j.at("algebra").get<std::string>();
    std::vector<double> m;
    for (const auto& x : j.at("m")) m.push_back(num(x));
    r.m = ExponentVector(m);
    r.v.clear();
    for (const auto& x : j.at("v")) r.v.push_back(num(x));
    r.numeric_d = num(j.at("numeric_d"));
    r.closed_form_shape = num(j.at("closed_form_shape"));
    r.fitted_constant = num(j.at("fitted_constant"));
    r.reciprocal_constant = num(j.at("reciprocal_constant"));
    r.lkt_norm = num(j.at("lkt_norm"));
    r.whittaker_norm = num(j.at("whittaker_norm"));
    r.gn_integral = num(j.at("gn_integral"));
    r.gn_error = num(j.at("gn_error"));
    r.jacobian = num(j.at("jacobian"));
    r.profile = j.at("profile").get<std::string>();
    r.evaluations = j.at("evaluations").get<long>();
}

namespace tools {

void to_json(json& j, const SuiteReport& r) {
    j = json{{"schema", r.schema},
             {"tool_version", r.tool_version},
             {"command", r.command},
             {"suite", r.suite},
             {"profile", r.profile},
             {"parameters", r.parameters},
             {"calibration", r.calibration},
             {"checks", r.checks},
             {"formal_dimension", r.formal_dimension},
             {"statistics", num_map(r.statistics)},
             {"passed", r.passed()},
             {"sidecar", r.sidecar}};
}

void from_json(const json& j, SuiteReport& r) {
    r.schema = j.at("schema").get<std::string>();
    if (r.schema != kReportSchema) throw UsageError("unsupported report schema '" + r.schema + "'");
    r.tool_version = j.at("tool_version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    r.suite = j.at("suite").get<std::string>();
    r.profile = j.at("profile").get<GridProfile>();
    r.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
    r.calibration = j.at("calibration").get<std::vector<CalibrationEntry>>();
    r.checks = j.at("checks").get<std::vector<VerificationReport>>();
    r.formal_dimension = j.at("formal_dimension").get<std::vector<FormalDimensionRecord>>();
    r.statistics = num_map(j.at("statistics"));
    r.sidecar = j.value("sidecar", std::map<std::string, std::string>{});
}

void to_json(json& j, const Table& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json jr = json::array();
        for (double x : row) jr.push_back(num(x));
        rows.push_back(jr);
    }
    j = json{{"schema", t.schema},   {"kind", t.kind},       {"algebra", t.algebra},
             {"profile", t.profile}, {"columns", t.columns}, {"rows", rows}};
}

void from_json(const json& j, Table& t) {
    t.schema = j.at("schema").get<std::string>();
    t.kind = j.at("kind").get<std::string>();
    t.algebra = j.at("algebra").get<std::string>();
    t.profile = j.at("profile").get<std::string>();
    t.columns = j.at("columns").get<std::vector<std::string>>();
    t.rows.clear();
    for (const auto& jr : j.at("rows")) {
        std::vector<double> row;
        for (const auto& x : jr) row.push_back(num(x));
        t.rows.push_back(row);
    }
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

std::string deterministic_json(const SuiteReport& r) {
    json j = r;
    j.erase("sidecar");
    return dump_json(j);
}

namespace {

std::string csv_num(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_text(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string report_csv(const SuiteReport& r) {
    std::ostringstream os;
    os << "suite,id,description,metric,computed,oracle,error,tolerance,passed,divergence_probe,profile,"
          "evaluations\n";
    for (const auto& c : r.checks) {
        os << csv_text(c.suite) << ',' << csv_text(c.id) << ',' << csv_text(c.description) << ','
           << c.metric << ',' << csv_num(c.computed) << ',' << csv_num(c.oracle) << ','
           << csv_num(c.error) << ',' << csv_num(c.tolerance) << ',' << (c.passed ? "true" : "false")
           << ',' << (c.divergence_probe ? "true" : "false") << ',' << csv_text(c.profile) << ','
           << c.evaluations << '\n';
    }
    return os.str();
}

std::string table_csv(const Table& t) {
    std::ostringstream os;
    for (size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_num(row[i]);
        os << '\n';
    }
    return os.str();
}

std::string render(const SuiteReport& r, Format f) {
    return f == Format::Json ? dump_json(json(r)) : report_csv(r);
}

std::string render(const Table& t, Format f) {
    return f == Format::Json ? dump_json(json(t)) : table_csv(t);
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw UsageError("cannot open '" + path + "' for writing");
    os << text;
    if (!os) throw UsageError("write to '" + path + "' failed");
}

}  // namespace tools
}  // namespace conelab
