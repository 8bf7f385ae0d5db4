// Command-line front end: construction, spectra, periods, zeta functions
// and the structural verification suite for multi-state Grover walks on
// cycles. All math commands print exact values; only the numeric
// verification path (abszeta --verify-mellin) emits floats.

#include <CLI11.hpp>

#include <iostream>

#include "cyclewalk/cli.hpp"
#include "cyclewalk/version.hpp"

namespace {

using cyclewalk::RunConfig;

struct RawOptions {
    std::string family = "M";
    std::string states = "3";
    std::string vertices;
    std::string format = "text";
    std::string output;
    int sector = -1;
    unsigned threads = 0;
    bool verify_mellin = false;
    double w = 6.0;
    double s = 1.0;
    double tol = 1e-4;
};

void add_common(CLI::App* cmd, RawOptions& raw, bool needs_vertices) {
    cmd->add_option("--family", raw.family, "walk family: M, F or both");
    cmd->add_option("--states,-L", raw.states, "odd state counts, e.g. 3 or 3,5,7");
    auto* v = cmd->add_option("--vertices,-N", raw.vertices, "vertex counts, e.g. 5 or 2..12");
    if (needs_vertices) v->required();
    cmd->add_option("--format", raw.format, "text | json | csv");
    cmd->add_option("--output,-o", raw.output, "write the result to a file");
    cmd->add_option("--threads", raw.threads, "worker threads (0 = CYCLEWALK_THREADS or auto)");
}

RunConfig build_config(cyclewalk::Command command, const RawOptions& raw) {
    RunConfig config;
    config.command = command;
    if (raw.family == "both" || raw.family == "BOTH") {
        config.family = std::nullopt;
    } else {
        config.family = cyclewalk::family_from_string(raw.family);
    }
    config.states = cyclewalk::parse_unsigned_list(raw.states);
    if (!raw.vertices.empty()) config.vertices = cyclewalk::parse_vertex_range(raw.vertices);
    config.format = cyclewalk::format_from_string(raw.format);
    config.output_path = raw.output;
    config.sector = raw.sector;
    config.threads = raw.threads;
    config.verify_mellin = raw.verify_mellin;
    config.w = raw.w;
    config.s = raw.s;
    config.tol = raw.tol;
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact periodicity and zeta analysis of Grover walks on cycles"};
    app.set_version_flag("--version", std::string(cyclewalk::kToolVersion));
    app.require_subcommand(1);

    RawOptions raw;

    auto* dump = app.add_subcommand("dump-u", "emit the evolution matrix exactly");
    add_common(dump, raw, true);

    auto* charpoly = app.add_subcommand("charpoly", "momentum-sector characteristic polynomials");
    add_common(charpoly, raw, true);
    charpoly->add_option("--sector,-k", raw.sector, "restrict to one momentum sector");

    auto* period = app.add_subcommand("period", "decide the walk period with a certificate");
    add_common(period, raw, true);

    auto* sweep = app.add_subcommand("sweep", "period table over a (family, L, N) grid");
    add_common(sweep, raw, true);

    auto* zeta = app.add_subcommand("zeta", "exact walk zeta function");
    add_common(zeta, raw, true);

    auto* abszeta = app.add_subcommand("abszeta", "absolute-zeta descriptor of the walk zeta");
    add_common(abszeta, raw, false);
    abszeta->add_flag("--verify-mellin", raw.verify_mellin,
                      "numerically check the Mellin/subset-series identity");
    abszeta->add_option("--w", raw.w, "evaluation point w");
    abszeta->add_option("--s", raw.s, "evaluation point s");
    abszeta->add_option("--tol", raw.tol, "absolute error target");

    auto* verify = app.add_subcommand("verify", "run the structural identity suite");
    verify->add_option("--format", raw.format, "text | json");
    verify->add_option("--output,-o", raw.output, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cyclewalk::kExitUsage;
    }

    cyclewalk::Command command;
    if (dump->parsed()) command = cyclewalk::Command::DumpU;
    else if (charpoly->parsed()) command = cyclewalk::Command::Charpoly;
    else if (period->parsed()) command = cyclewalk::Command::Period;
    else if (sweep->parsed()) command = cyclewalk::Command::Sweep;
    else if (zeta->parsed()) command = cyclewalk::Command::Zeta;
    else if (abszeta->parsed()) command = cyclewalk::Command::AbsZeta;
    else command = cyclewalk::Command::Verify;

    try {
        return cyclewalk::run(build_config(command, raw), std::cout, std::cerr);
    } catch (const cyclewalk::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return cyclewalk::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cyclewalk::kExitDomain;
    }
}
