#include <doctest.h>

#include <nlohmann/json.hpp>

#include <sstream>

#include "cyclewalk/cli.hpp"
#include "cyclewalk/json_io.hpp"

using namespace cyclewalk;
using nlohmann::json;

namespace {

struct RunOutput {
    int code;
    std::string out;
    std::string err;
};

RunOutput invoke(const RunConfig& config) {
    std::ostringstream out, err;
    const int code = run(config, out, err);
    return {code, out.str(), err.str()};
}

json strip_timings(json j) {
    if (j.is_object()) {
        j.erase("elapsed_ms");
        for (auto& [key, value] : j.items()) value = strip_timings(value);
    } else if (j.is_array()) {
        for (auto& value : j) value = strip_timings(value);
    }
    return j;
}

}  // namespace

TEST_CASE("vertex range parsing") {
    CHECK(parse_vertex_range("5") == std::vector<unsigned>{5});
    CHECK(parse_vertex_range("2..6") == std::vector<unsigned>{2, 3, 4, 5, 6});
    CHECK(parse_vertex_range("2,3,7") == std::vector<unsigned>{2, 3, 7});
    CHECK(parse_unsigned_list("3,5,7") == std::vector<unsigned>{3, 5, 7});
    CHECK_THROWS_AS(parse_vertex_range("6..2"), UsageError);
    CHECK_THROWS_AS(parse_vertex_range("2..x"), UsageError);
    CHECK_THROWS_AS(parse_unsigned_list(""), UsageError);
    CHECK_THROWS_AS(parse_unsigned_list("3,,5"), UsageError);
}

TEST_CASE("config validation and exit codes") {
    RunConfig even_states;
    even_states.command = Command::Period;
    even_states.states = {4};
    even_states.vertices = {3};
    CHECK(invoke(even_states).code == kExitDomain);

    RunConfig small_vertices;
    small_vertices.command = Command::Period;
    small_vertices.states = {3};
    small_vertices.vertices = {1};
    CHECK(invoke(small_vertices).code == kExitDomain);

    RunConfig csv_misuse;
    csv_misuse.command = Command::Period;
    csv_misuse.states = {3};
    csv_misuse.vertices = {3};
    csv_misuse.format = OutputFormat::Csv;
    CHECK(invoke(csv_misuse).code == kExitUsage);
}

TEST_CASE("period command emits the finite certificate") {
    RunConfig config;
    config.command = Command::Period;
    config.states = {3};
    config.vertices = {3};
    config.format = OutputFormat::Json;
    const RunOutput r = invoke(config);
    REQUIRE(r.code == kExitOk);

    const json envelope = json::parse(r.out);
    CHECK(envelope.at("tool").at("name") == "cyclewalk");
    REQUIRE(envelope.at("results").size() == 1);
    const json& item = envelope.at("results")[0];
    CHECK(item.at("verdict") == "finite");
    CHECK(item.at("T") == 6);
    CHECK(item.at("certificate").at("kind") == "cyclotomic");

    // wire round trip reproduces the in-memory result
    const PeriodResult direct = decide_period({Family::M, 3, 3});
    const PeriodResult parsed = io::period_result_from_json(item);
    CHECK(parsed.finite());
    CHECK(parsed.period == direct.period);
    CHECK(parsed.factors.factors == direct.factors.factors);
    CHECK(parsed.confirmed_by_power == direct.confirmed_by_power);
}

TEST_CASE("period json round trips through render and parse") {
    for (const WalkSpec spec : {WalkSpec{Family::M, 3, 2}, WalkSpec{Family::F, 3, 3}}) {
        const PeriodResult r = decide_period(spec);
        const json j = io::period_result_json(r);
        const PeriodResult back = io::period_result_from_json(j);
        CHECK(back.kind == r.kind);
        CHECK(back.period == r.period);
        CHECK(back.witness_degree == r.witness_degree);
        CHECK(back.witness_value == r.witness_value);
        CHECK(back.remainder == r.remainder);
        CHECK(io::period_result_json(back) == j);
    }
}

TEST_CASE("sweep rows have the stable column order") {
    RunConfig config;
    config.command = Command::Sweep;
    config.family = std::nullopt;
    config.states = {3};
    config.vertices = {2, 3, 4};
    config.format = OutputFormat::Csv;
    const RunOutput r = invoke(config);
    REQUIRE(r.code == kExitOk);

    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "family,L,N,verdict,T,certificate_kind,certificate_detail");
    std::getline(lines, line);
    CHECK(line == "M,3,2,infinite,,non_integer_coeff,deg=1 val=2/3");
    std::getline(lines, line);
    CHECK(line == "M,3,3,finite,6,cyclotomic,{1:3;2:2;3:2}");
    // M rows precede F rows; within a family rows are sorted by N
    std::vector<std::string> rest;
    while (std::getline(lines, line)) rest.push_back(line);
    REQUIRE(rest.size() == 4);
    CHECK(rest[0].substr(0, 6) == "M,3,4,");
    CHECK(rest[1].substr(0, 6) == "F,3,2,");
    CHECK(rest[2].substr(0, 6) == "F,3,3,");
    CHECK(rest[3].substr(0, 6) == "F,3,4,");
}

TEST_CASE("sweep output is independent of the worker count") {
    RunConfig config;
    config.command = Command::Sweep;
    config.family = std::nullopt;
    config.states = {3, 5};
    config.vertices = {2, 3, 4, 5, 6};
    config.format = OutputFormat::Csv;

    config.threads = 1;
    const RunOutput serial = invoke(config);
    config.threads = 4;
    const RunOutput parallel = invoke(config);
    REQUIRE(serial.code == kExitOk);
    REQUIRE(parallel.code == kExitOk);
    CHECK(serial.out == parallel.out);

    config.format = OutputFormat::Json;
    config.threads = 1;
    const RunOutput js = invoke(config);
    config.threads = 3;
    const RunOutput jp = invoke(config);
    CHECK(strip_timings(json::parse(js.out)) == strip_timings(json::parse(jp.out)));
}

TEST_CASE("dump-u emits exact entries") {
    RunConfig config;
    config.command = Command::DumpU;
    config.states = {3};
    config.vertices = {2};
    config.format = OutputFormat::Json;
    const RunOutput r = invoke(config);
    REQUIRE(r.code == kExitOk);
    const json envelope = json::parse(r.out);
    const json& item = envelope.at("results")[0];
    CHECK(item.at("dimension") == 6);
    REQUIRE(item.at("entries").size() == 6);
    REQUIRE(item.at("entries")[0].size() == 6);
    // row (0, stay-chirality) holds the middle coin row at block 0
    CHECK(item.at("entries")[1][0] == "2/3");
    CHECK(item.at("entries")[1][1] == "-1/3");
}

TEST_CASE("charpoly command emits sectors and product") {
    RunConfig config;
    config.command = Command::Charpoly;
    config.states = {3};
    config.vertices = {3};
    config.format = OutputFormat::Json;
    const RunOutput r = invoke(config);
    REQUIRE(r.code == kExitOk);
    const json envelope = json::parse(r.out);
    const json& item = envelope.at("results")[0];
    CHECK(item.at("sectors").size() == 3);
    CHECK(item.at("direct_checked") == true);
    const Polynomial product = io::polynomial_from_json(item.at("product"));
    CHECK(product == full_charpoly({Family::M, 3, 3}).product);

    config.sector = 1;
    const RunOutput rs = invoke(config);
    REQUIRE(rs.code == kExitOk);
    const json sector_envelope = json::parse(rs.out);
    CHECK(sector_envelope.at("results")[0].at("sector") == 1);

    config.sector = 7;
    CHECK(invoke(config).code == kExitDomain);
}

TEST_CASE("zeta command text form") {
    RunConfig config;
    config.command = Command::Zeta;
    config.states = {3};
    config.vertices = {3};
    const RunOutput r = invoke(config);
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.find("zeta(M, L=3, N=3)(u) = 1 / (") != std::string::npos);
}

TEST_CASE("abszeta command renders the descriptor and verifies the identity") {
    RunConfig config;
    config.command = Command::AbsZeta;
    config.states = {3};
    config.format = OutputFormat::Json;
    config.verify_mellin = true;
    config.w = 6.0;
    config.s = 1.0;
    config.tol = 5e-5;
    const RunOutput r = invoke(config);
    REQUIRE(r.code == kExitOk);
    const json envelope = json::parse(r.out);
    const json& item = envelope.at("results")[0];
    CHECK(item.at("descriptor").at("D") == -9);
    CHECK(item.at("descriptor").at("C") == -1);
    CHECK(item.at("descriptor").at("deg_f") == "-9");
    CHECK(item.at("mellin_check").at("pass") == true);
    CHECK(item.at("mellin_check").at("abs_diff").get<double>() < 1e-4);

    // a non-periodic walk has no Kurokawa-form zeta
    RunConfig bad = config;
    bad.verify_mellin = false;
    bad.vertices = {4};
    CHECK(invoke(bad).code == kExitDomain);

    // an unreachable tolerance surfaces as a computational failure
    RunConfig hopeless = config;
    hopeless.tol = 1e-300;
    CHECK(invoke(hopeless).code == kExitInternal);
}

TEST_CASE("thread resolution") {
    CHECK(resolve_threads(3, 10) == 3);
    CHECK(resolve_threads(8, 2) == 2);
    CHECK(resolve_threads(0, 1) == 1);

    // the environment override feeds the default
    setenv("CYCLEWALK_THREADS", "5", 1);
    CHECK(resolve_threads(0, 100) == 5);
    CHECK(resolve_threads(2, 100) == 2);  // explicit request wins
    unsetenv("CYCLEWALK_THREADS");
}
