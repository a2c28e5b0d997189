#include <cstdio>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "conelab/tools/report_io.hpp"
#include "conelab/tools/suites.hpp"
#include "conelab/tools/tables.hpp"

namespace {

using namespace conelab;
using namespace conelab::tools;

enum Exit { kOk = 0, kNumericFailure = 1, kUsage = 2 };

struct Common {
    std::string algebra, m, v, n, profile, config, out, format = "json", range;
    int samples = 0;
    bool range_set = false;
};

void add_common(CLI::App* app, Common& c, bool with_range = false) {
    app->add_option("--algebra", c.algebra, "rank1 or sym2")->check(CLI::IsMember({"rank1", "sym2"}));
    app->add_option("--m", c.m, "weights: list a,b,c or range lo:hi:step");
    app->add_option("--v", c.v, "Whittaker parameter as a multiple of e ('e' = 1)");
    app->add_option("--n", c.n, "SU(1,1) weights");
    app->add_option("--profile", c.profile, "grid profile name (default: $CONELAB_PROFILE or 'default')");
    app->add_option("--config", c.config, "profile file with [name] sections")->check(CLI::ExistingFile);
    app->add_option("--out", c.out, "output path (default: stdout)");
    app->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app->add_option("--samples", c.samples, "random sample count")->check(CLI::NonNegativeNumber);
    if (with_range) app->add_option("--range", c.range, "main grid: list or lo:hi:step; empty for none");
}

SuiteConfig to_config(const std::string& suite, const Common& c) {
    SuiteConfig s;
    s.suite = suite;
    s.algebra = c.algebra;
    s.m = parse_grid(c.m);
    s.v = parse_grid(c.v);
    s.n = parse_int_grid(c.n);
    s.profile = resolve_profile(c.profile, c.config);
    s.samples = c.samples;
    s.out = c.out;
    s.format = c.format == "csv" ? Format::Csv : Format::Json;
    return s;
}

int emit(const SuiteReport& rep, const SuiteConfig& cfg) {
    write_output(render(rep, cfg.format), cfg.out);
    const auto failed = rep.failures();
    for (const auto* f : failed)
        std::fprintf(stderr, "FAILED %s/%s: error %.3e, tolerance %.1e\n", f->suite.c_str(), f->id.c_str(),
                     f->error, f->tolerance);
    return failed.empty() ? kOk : kNumericFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"conelab: symmetric-cone special functions and holomorphic discrete series checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    Common verify_opts, table_opts, su_opts, cal_opts;
    std::string suite, kind, su_cmd;

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    add_common(verify, verify_opts);

    CLI::App* table = app.add_subcommand("table", "emit a special-function table");
    table->add_option("kind", kind, "table kind")->required()->check(CLI::IsMember(table_kinds()));
    add_common(table, table_opts, true);

    CLI::App* su = app.add_subcommand("su11", "SU(1,1) computations");
    su->add_option("cmd", su_cmd, "command")->required()->check(CLI::IsMember(su11_commands()));
    add_common(su, su_opts);

    CLI::App* cal = app.add_subcommand("calibrate", "compute the measure-normalization constants");
    cal->add_option("--profile", cal_opts.profile, "grid profile name");
    cal->add_option("--config", cal_opts.config, "profile file")->check(CLI::ExistingFile);
    cal->add_option("--out", cal_opts.out, "output path");
    cal->add_option("--format", cal_opts.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*verify) {
            const SuiteConfig cfg = to_config(suite, verify_opts);
            return emit(run_suite(cfg), cfg);
        }
        if (*su) {
            const SuiteConfig cfg = to_config("su11-" + su_cmd, su_opts);
            return emit(run_su11(su_cmd, cfg), cfg);
        }
        if (*cal) {
            SuiteConfig cfg = to_config("calibrate", cal_opts);
            return emit(run_calibrate(cfg.profile), cfg);
        }
        TableConfig tc;
        tc.kind = kind;
        tc.algebra = table_opts.algebra;
        if (table->count("--range")) tc.range = parse_grid(table_opts.range);
        tc.m = parse_grid(table_opts.m);
        tc.profile = resolve_profile(table_opts.profile, table_opts.config);
        const Table t = emit_table(tc);
        write_output(render(t, table_opts.format == "csv" ? Format::Csv : Format::Json), table_opts.out);
        return kOk;
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kUsage;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kUsage;
    } catch (const DescriptorMismatch& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kUsage;
    } catch (const PoleError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kUsage;
    } catch (const Error& e) {
        std::fprintf(stderr, "numeric failure: %s\n", e.what());
        return kNumericFailure;
    }
}
