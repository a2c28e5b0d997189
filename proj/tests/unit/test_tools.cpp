#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "conelab/tools/report_io.hpp"
#include "conelab/tools/suites.hpp"
#include "conelab/tools/tables.hpp"

using namespace conelab;
using namespace conelab::tools;
using nlohmann::json;

TEST_CASE("grids") {
    CHECK(parse_grid("3,4,5") == std::vector<double>{3, 4, 5});
    CHECK(parse_grid("e") == std::vector<double>{1.0});
    CHECK(parse_grid("1:2:0.5") == std::vector<double>{1.0, 1.5, 2.0});
    CHECK(parse_grid("").empty());
    CHECK_THROWS_AS(parse_grid("1,x"), UsageError);
    CHECK_THROWS_AS(parse_grid("2:1:0.5"), UsageError);
    CHECK(parse_int_grid("2,3") == std::vector<int>{2, 3});
    CHECK_THROWS_AS(parse_int_grid("2.5"), UsageError);
}

TEST_CASE("profile resolution") {
    unsetenv("CONELAB_PROFILE");
    CHECK(resolve_profile("", "").name == "default");
    setenv("CONELAB_PROFILE", "fast", 1);
    CHECK(resolve_profile("", "").name == "fast");
    CHECK(resolve_profile("strict", "").name == "strict");
    unsetenv("CONELAB_PROFILE");
    CHECK_THROWS_AS(resolve_profile("nope", ""), UsageError);
    CHECK_THROWS_AS(resolve_profile("", "/nonexistent/profiles.ini"), UsageError);
}

TEST_CASE("suite configuration") {
    SuiteConfig c;
    c.suite = "nope";
    CHECK_THROWS_AS(c.validate(), UsageError);
    c.suite = "jordan";
    c.algebra = "sym3";
    CHECK_THROWS_AS(c.validate(), UsageError);
}

TEST_CASE("report round trip and determinism") {
    SuiteConfig c;
    c.suite = "jordan";
    c.samples = 20;
    const SuiteReport a = run_suite(c);
    CHECK(a.passed());
    CHECK(a.schema == "conelab-report/1");
    CHECK_FALSE(a.calibration.empty());
    CHECK(a.sidecar.count("elapsed_seconds") == 1);

    const SuiteReport back = json::parse(dump_json(json(a))).get<SuiteReport>();
    CHECK(dump_json(json(back)) == dump_json(json(a)));
    CHECK(back.checks.size() == a.checks.size());

    const SuiteReport b = run_suite(c);
    CHECK(deterministic_json(a) == deterministic_json(b));
    CHECK(deterministic_json(a).find("sidecar") == std::string::npos);

    const std::string csv = report_csv(a);
    CHECK(csv.rfind("suite,id,description,metric,computed,oracle,error,tolerance,passed,divergence_probe,profile,"
                    "evaluations\n",
                    0) == 0);
}

TEST_CASE("non-finite values survive JSON") {
    VerificationReport r;
    r.id = "x";
    r.computed = std::nan("");
    r.oracle = HUGE_VAL;
    r.error = -HUGE_VAL;
    const auto back = json::parse(json(r).dump()).get<VerificationReport>();
    CHECK(std::isnan(back.computed));
    CHECK(back.oracle == HUGE_VAL);
    CHECK(back.error == -HUGE_VAL);
}

TEST_CASE("formal dimension records round trip") {
    SuiteConfig c;
    c.suite = "formal-dim";
    c.m = {3.0, 4.0};
    c.profile = GridProfile::named("fast");
    const SuiteReport a = run_suite(c);
    REQUIRE(a.formal_dimension.size() >= 2);
    const SuiteReport back = json::parse(dump_json(json(a))).get<SuiteReport>();
    CHECK(back.formal_dimension[1].numeric_d == a.formal_dimension[1].numeric_d);
    CHECK(back.formal_dimension[1].m.entries() == a.formal_dimension[1].m.entries());
}

TEST_CASE("tables") {
    TableConfig t;
    t.kind = "bessel";
    t.range = std::vector<double>{};
    const Table empty = emit_table(t);
    CHECK(empty.rows.empty());
    CHECK(table_csv(empty).find('\n') == table_csv(empty).size() - 1);

    t.range = std::vector<double>{0.0, 1.0, 2.0};
    const Table b = emit_table(t);
    CHECK(b.rows.size() == 3);
    CHECK(b.rows[0][0] <= b.rows[1][0]);
    const Table back = json::parse(dump_json(json(b))).get<Table>();
    CHECK(back.rows == b.rows);
    CHECK(back.columns == b.columns);

    TableConfig g;
    g.kind = "gamma_tilde";
    g.range = std::vector<double>{0.5};
    CHECK_THROWS_AS(emit_table(g), DomainError);
    g.kind = "nope";
    CHECK_THROWS_AS(emit_table(g), UsageError);
}
