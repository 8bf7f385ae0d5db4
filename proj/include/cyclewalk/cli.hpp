#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cyclewalk/period.hpp"

namespace cyclewalk {

enum class Command { DumpU, Charpoly, Period, Sweep, Zeta, AbsZeta, Verify };
enum class OutputFormat { Text, Json, Csv };

OutputFormat format_from_string(const std::string& s);

// Exit code contract: CI distinguishes math failures from plumbing.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;    // invalid walk parameters and kin
inline constexpr int kExitInternal = 2;  // exactness assertion tripped
inline constexpr int kExitUsage = 64;    // malformed invocation

// Malformed command line (unknown command, bad range syntax, ...).
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Command command = Command::Period;
    std::optional<Family> family = Family::M;  // nullopt = both families
    std::vector<unsigned> states;
    std::vector<unsigned> vertices;
    int sector = -1;  // charpoly: restrict to one momentum sector
    OutputFormat format = OutputFormat::Text;
    std::string output_path;
    // numeric verification knobs (abszeta)
    bool verify_mellin = false;
    double w = 6.0;
    double s = 1.0;
    double tol = 1e-4;
    unsigned threads = 0;  // 0 = CYCLEWALK_THREADS or hardware default

    void validate() const;
};

// "3,5,7" -> {3,5,7}
std::vector<unsigned> parse_unsigned_list(const std::string& text);
// "2..12" -> {2,...,12}; also accepts single values and comma lists.
std::vector<unsigned> parse_vertex_range(const std::string& text);

struct SweepRow {
    Family family;
    unsigned states;
    unsigned vertices;
    PeriodResult result;
    double elapsed_ms = 0.0;
};

// family, L, N, verdict, T, certificate_kind, certificate_detail
std::string render_sweep_rows(const std::vector<SweepRow>& rows, OutputFormat format);

unsigned resolve_threads(unsigned requested, std::size_t jobs);

// Dispatches a validated config, writing the rendered result to `out`
// (or the configured output path) and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace cyclewalk
