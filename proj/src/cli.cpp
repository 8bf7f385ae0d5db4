#include "cyclewalk/cli.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "cyclewalk/json_io.hpp"
#include "cyclewalk/shadow.hpp"
#include "cyclewalk/version.hpp"
#include "cyclewalk/zeta.hpp"

namespace cyclewalk {

using nlohmann::json;

OutputFormat format_from_string(const std::string& s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    throw UsageError("unknown output format: " + s);
}

namespace {

const char* command_name(Command c) {
    switch (c) {
        case Command::DumpU: return "dump-u";
        case Command::Charpoly: return "charpoly";
        case Command::Period: return "period";
        case Command::Sweep: return "sweep";
        case Command::Zeta: return "zeta";
        case Command::AbsZeta: return "abszeta";
        case Command::Verify: return "verify";
    }
    return "?";
}

const char* format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::Text: return "text";
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
    }
    return "?";
}

double elapsed_ms(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

json make_envelope(const RunConfig& c) {
    json family = c.family ? json(std::string(1, family_letter(*c.family))) : json("both");
    json config{{"command", command_name(c.command)},
                {"family", family},
                {"states", c.states},
                {"vertices", c.vertices},
                {"format", format_name(c.format)}};
    if (c.sector >= 0) config["sector"] = c.sector;
    if (c.command == Command::AbsZeta) {
        config["verify_mellin"] = c.verify_mellin;
        if (c.verify_mellin) {
            config["w"] = c.w;
            config["s"] = c.s;
            config["tol"] = c.tol;
        }
    }
    return json{{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
                {"config", std::move(config)},
                {"results", json::array()}};
}

std::vector<Family> selected_families(const RunConfig& c) {
    if (c.family) return {*c.family};
    return {Family::M, Family::F};
}

std::vector<WalkSpec> selected_specs(const RunConfig& c) {
    std::vector<WalkSpec> specs;
    for (Family fam : selected_families(c)) {
        for (unsigned L : c.states) {
            for (unsigned N : c.vertices) {
                specs.push_back(WalkSpec{fam, L, N});
            }
        }
    }
    return specs;
}

}  // namespace

void RunConfig::validate() const {
    if (command == Command::Verify) return;
    if (states.empty()) throw std::domain_error("at least one state count is required");
    for (unsigned L : states) {
        if (L < 3 || L % 2 == 0) {
            throw std::domain_error("state counts must be odd integers >= 3, got " +
                                    std::to_string(L));
        }
    }
    const bool vertices_needed = command != Command::AbsZeta;
    if (vertices_needed && vertices.empty()) {
        throw std::domain_error("at least one vertex count is required");
    }
    for (unsigned N : vertices) {
        if (N < 2) throw std::domain_error("vertex counts must be >= 2, got " + std::to_string(N));
    }
    if (format == OutputFormat::Csv && command != Command::Sweep) {
        throw UsageError("csv output is only available for sweep");
    }
    if (sector >= 0 && command != Command::Charpoly) {
        throw UsageError("--sector only applies to charpoly");
    }
    if (verify_mellin && !(tol > 0)) throw std::domain_error("tolerance must be positive");
}

std::vector<unsigned> parse_unsigned_list(const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw UsageError("empty entry in list: " + text);
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            throw UsageError("unparsable number in list: " + item);
        }
        if (used != item.size()) throw UsageError("unparsable number in list: " + item);
        out.push_back(static_cast<unsigned>(v));
    }
    if (out.empty()) throw UsageError("empty list: " + text);
    return out;
}

std::vector<unsigned> parse_vertex_range(const std::string& text) {
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos) return parse_unsigned_list(text);
    const std::string lo_s = text.substr(0, dots);
    const std::string hi_s = text.substr(dots + 2);
    std::vector<unsigned> lo = parse_unsigned_list(lo_s);
    std::vector<unsigned> hi = parse_unsigned_list(hi_s);
    if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0]) {
        throw UsageError("malformed range: " + text);
    }
    std::vector<unsigned> out;
    for (unsigned v = lo[0]; v <= hi[0]; ++v) out.push_back(v);
    return out;
}

unsigned resolve_threads(unsigned requested, std::size_t jobs) {
    unsigned n = requested;
    if (n == 0) {
        if (const char* env = std::getenv("CYCLEWALK_THREADS")) {
            char* end = nullptr;
            const unsigned long v = std::strtoul(env, &end, 10);
            if (end && *end == '\0' && v > 0) n = static_cast<unsigned>(v);
        }
    }
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

namespace {

std::vector<SweepRow> run_sweep_cells(const std::vector<WalkSpec>& cells, unsigned threads) {
    std::vector<SweepRow> rows(cells.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) break;
            try {
                const auto t0 = std::chrono::steady_clock::now();
                PeriodResult r = decide_period(cells[i]);
                rows[i] = SweepRow{cells[i].family, cells[i].states, cells[i].vertices,
                                   std::move(r), elapsed_ms(t0)};
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };

    const unsigned n = resolve_threads(threads, cells.size());
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return rows;
}

std::string sweep_row_fields(const SweepRow& row, char sep) {
    std::ostringstream os;
    os << family_letter(row.family) << sep << row.states << sep << row.vertices << sep
       << (row.result.finite() ? "finite" : "infinite") << sep;
    if (row.result.finite()) os << row.result.period;
    os << sep << row.result.certificate_kind() << sep << row.result.certificate_detail();
    return os.str();
}

}  // namespace

std::string render_sweep_rows(const std::vector<SweepRow>& rows, OutputFormat format) {
    std::ostringstream os;
    if (format == OutputFormat::Json) {
        json arr = json::array();
        for (const auto& row : rows) {
            json item = io::period_result_json(row.result);
            item["spec"] = io::walk_spec_json(WalkSpec{row.family, row.states, row.vertices});
            item["elapsed_ms"] = row.elapsed_ms;
            arr.push_back(std::move(item));
        }
        os << arr.dump(2) << "\n";
        return os.str();
    }
    os << "family,L,N,verdict,T,certificate_kind,certificate_detail\n";
    for (const auto& row : rows) {
        os << sweep_row_fields(row, ',') << "\n";
    }
    return os.str();
}

namespace {

// ---- verify: the structural identity suite -------------------------------

struct CheckOutcome {
    std::string name;
    bool pass;
    std::string detail;
    double ms;
};

CheckOutcome run_check(const std::string& name, const std::function<std::string()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = true;
    try {
        detail = body();
        pass = detail.empty();
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    return CheckOutcome{name, pass, detail, elapsed_ms(t0)};
}

std::string check_phi_product_identity() {
    for (unsigned n = 1; n <= 60; ++n) {
        Polynomial prod = Polynomial::one();
        for (unsigned d : divisors(n)) prod *= cyclotomic_polynomial(d);
        if (prod != Polynomial::power_minus_one(n)) {
            return "product of cyclotomics misses x^" + std::to_string(n) + "-1";
        }
    }
    return "";
}

std::string check_phi_integrality() {
    for (unsigned n = 1; n <= 60; ++n) {
        const Polynomial& phi = cyclotomic_polynomial(n);
        if (!phi.is_integer_poly()) return "Phi_" + std::to_string(n) + " not integral";
        if (phi.degree() != static_cast<int>(euler_phi(n))) {
            return "deg Phi_" + std::to_string(n) + " != phi(n)";
        }
        if (!phi.is_monic()) return "Phi_" + std::to_string(n) + " not monic";
    }
    return "";
}

CyclotomicElement random_cyclo(std::mt19937& rng, unsigned order) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> coeffs;
    const unsigned deg = euler_phi(order);
    coeffs.reserve(deg);
    for (unsigned i = 0; i < deg; ++i) coeffs.push_back(make_rational(num(rng), den(rng)));
    return CyclotomicElement(order, Polynomial(std::move(coeffs)));
}

std::string check_field_axioms() {
    std::mt19937 rng(20240811);
    for (unsigned order : {5u, 8u, 12u}) {
        for (int trial = 0; trial < 24; ++trial) {
            const auto a = random_cyclo(rng, order);
            const auto b = random_cyclo(rng, order);
            const auto c = random_cyclo(rng, order);
            if (a * (b + c) != a * b + a * c) return "distributivity fails";
            if (a * b != b * a || a + b != b + a) return "commutativity fails";
            if ((a * b) * c != a * (b * c)) return "associativity fails";
            if (!a.is_zero()) {
                const auto prod = a * a.inverse();
                if (!prod.is_rational() || prod.rational_value() != 1) return "inverse fails";
            }
            // lifting is a ring embedding
            const unsigned target = order * 3;
            if ((a + b).lift_to(target) != a.lift_to(target) + b.lift_to(target)) {
                return "lift does not commute with addition";
            }
            if ((a * b).lift_to(target) != a.lift_to(target) * b.lift_to(target)) {
                return "lift does not commute with multiplication";
            }
        }
    }
    // float shadow commutes with the arithmetic
    for (unsigned order = 2; order <= 20; ++order) {
        const auto a = random_cyclo(rng, order);
        const auto b = random_cyclo(rng, order);
        const auto prod = (a * b).to_complex();
        const auto sum = (a + b).to_complex();
        if (std::abs(prod - a.to_complex() * b.to_complex()) > 1e-9) return "mul shadow off";
        if (std::abs(sum - (a.to_complex() + b.to_complex())) > 1e-9) return "add shadow off";
    }
    return "";
}

std::vector<WalkSpec> grid_specs(unsigned max_dim) {
    std::vector<WalkSpec> specs;
    for (Family fam : {Family::M, Family::F}) {
        for (unsigned L = 3; L * 2 <= max_dim; L += 2) {
            for (unsigned N = 2; L * N <= max_dim; ++N) {
                specs.push_back(WalkSpec{fam, L, N});
            }
        }
    }
    return specs;
}

std::string check_evolution_orthogonality() {
    for (const WalkSpec& spec : grid_specs(60)) {
        const RationalMatrix u = evolution_matrix(spec);
        if (!is_orthogonal(u)) return "U not orthogonal for " + spec.to_string();
        for (std::size_t i = 0; i < u.rows(); ++i) {
            unsigned row_nonzeros = 0, col_nonzeros = 0;
            for (std::size_t j = 0; j < u.cols(); ++j) {
                if (u(i, j) != 0) ++row_nonzeros;
                if (u(j, i) != 0) ++col_nonzeros;
            }
            if (row_nonzeros != spec.states || col_nonzeros != spec.states) {
                return "nonzero count off for " + spec.to_string();
            }
        }
    }
    return "";
}

std::string check_sector_closed_forms() {
    for (unsigned L : {3u, 5u, 7u}) {
        const WalkSpec spec{Family::M, L, L};
        const Polynomial expected0 =
            (Polynomial::x() - Polynomial::one()) *
            (Polynomial::x() + Polynomial::one()).pow(L - 1);
        if (sector_charpoly(spec, 0).to_rational_polynomial() != expected0) {
            return "stationary sector mismatch at L=" + std::to_string(L);
        }
        for (unsigned k = 1; k < L; ++k) {
            if (sector_charpoly(spec, k).to_rational_polynomial() !=
                Polynomial::power_minus_one(L)) {
                return "moving sector mismatch at L=" + std::to_string(L) +
                       " k=" + std::to_string(k);
            }
        }
    }
    return "";
}

std::string check_product_identity_spot() {
    const std::vector<WalkSpec> spots = {
        {Family::M, 3, 5}, {Family::F, 3, 5},  {Family::M, 5, 4},  {Family::F, 5, 4},
        {Family::M, 7, 3}, {Family::F, 7, 3},  {Family::M, 3, 19}, {Family::F, 3, 19},
    };
    for (const WalkSpec& spec : spots) {
        if (!full_charpoly(spec).direct_checked) {
            return "direct check skipped for " + spec.to_string();
        }
    }
    return "";
}

std::string check_fourth_power() {
    for (unsigned L : {3u, 5u, 7u}) {
        if (!fourth_power_check(WalkSpec{Family::F, L, L})) {
            return "fourth power identity fails at L=" + std::to_string(L);
        }
    }
    return "";
}

std::string check_float_shadow() {
    for (Family fam : {Family::M, Family::F}) {
        for (unsigned L : {3u, 5u, 7u}) {
            for (unsigned N = 2; N <= 8; ++N) {
                const WalkSpec spec{fam, L, N};
                const auto eigs = eigenvalue_shadow(evolution_matrix(spec));
                const double dev = max_unit_circle_deviation(eigs);
                if (dev > 1e-8) {
                    return "eigenvalue off the unit circle by " + std::to_string(dev) + " for " +
                           spec.to_string();
                }
            }
        }
    }
    return "";
}

std::string check_infinite_shadow() {
    for (const WalkSpec spec :
         {WalkSpec{Family::M, 3, 2}, WalkSpec{Family::M, 3, 9}, WalkSpec{Family::F, 5, 3}}) {
        if (decide_period(spec).finite()) return spec.to_string() + " unexpectedly periodic";
        const auto eigs = eigenvalue_shadow(evolution_matrix(spec));
        if (!some_eigenvalue_avoids_unity(eigs, 1000, 1e-6)) {
            return "no witness eigenvalue for " + spec.to_string();
        }
    }
    return "";
}

int run_verify(const RunConfig& config, std::ostream& out) {
    const std::vector<std::pair<std::string, std::function<std::string()>>> checks = {
        {"phi-product-identity", check_phi_product_identity},
        {"phi-integrality", check_phi_integrality},
        {"cyclotomic-field-axioms", check_field_axioms},
        {"evolution-orthogonality", check_evolution_orthogonality},
        {"sector-closed-forms", check_sector_closed_forms},
        {"product-identity-spot", check_product_identity_spot},
        {"fourth-power-identity", check_fourth_power},
        {"float-shadow-unit-circle", check_float_shadow},
        {"infinite-period-shadow", check_infinite_shadow},
    };
    bool all_pass = true;
    json results = json::array();
    for (const auto& [name, body] : checks) {
        const CheckOutcome outcome = run_check(name, body);
        all_pass = all_pass && outcome.pass;
        if (config.format == OutputFormat::Json) {
            results.push_back(json{{"check", outcome.name},
                                   {"pass", outcome.pass},
                                   {"detail", outcome.detail},
                                   {"elapsed_ms", outcome.ms}});
        } else {
            out << (outcome.pass ? "PASS" : "FAIL") << " " << outcome.name << " ("
                << std::fixed << std::setprecision(1) << outcome.ms << " ms)";
            if (!outcome.pass) out << ": " << outcome.detail;
            out << "\n";
        }
    }
    if (config.format == OutputFormat::Json) {
        json envelope = make_envelope(config);
        envelope["results"] = std::move(results);
        envelope["all_pass"] = all_pass;
        out << envelope.dump(2) << "\n";
    } else {
        out << (all_pass ? "verify: all checks passed" : "verify: FAILURES above") << "\n";
    }
    return all_pass ? kExitOk : kExitInternal;
}

// ---- per-command execution ------------------------------------------------

void render_dump_u(const RunConfig& config, json& envelope, std::ostream& text) {
    for (const WalkSpec& spec : selected_specs(config)) {
        const auto t0 = std::chrono::steady_clock::now();
        const RationalMatrix u = evolution_matrix(spec);
        if (config.format == OutputFormat::Json) {
            envelope["results"].push_back(json{{"spec", io::walk_spec_json(spec)},
                                               {"dimension", spec.dimension()},
                                               {"entries", io::matrix_json(u)},
                                               {"elapsed_ms", elapsed_ms(t0)}});
        } else {
            text << "U" << spec.to_string() << ", dimension " << spec.dimension() << ":\n";
            for (std::size_t i = 0; i < u.rows(); ++i) {
                for (std::size_t j = 0; j < u.cols(); ++j) {
                    text << (j ? " " : "") << to_string(u(i, j));
                }
                text << "\n";
            }
        }
    }
}

void render_charpoly(const RunConfig& config, json& envelope, std::ostream& text) {
    for (const WalkSpec& spec : selected_specs(config)) {
        const auto t0 = std::chrono::steady_clock::now();
        if (config.sector >= 0) {
            if (static_cast<unsigned>(config.sector) >= spec.vertices) {
                throw std::domain_error("sector index out of range for " + spec.to_string());
            }
            const CyclotomicPolynomial p = sector_charpoly(spec, config.sector);
            if (config.format == OutputFormat::Json) {
                envelope["results"].push_back(json{{"spec", io::walk_spec_json(spec)},
                                                   {"sector", config.sector},
                                                   {"charpoly", io::cyclo_poly_json(p)},
                                                   {"elapsed_ms", elapsed_ms(t0)}});
            } else {
                text << "f_" << spec.vertices << "," << config.sector << spec.to_string() << ":";
                for (std::size_t d = 0; d < p.coeffs().size(); ++d) {
                    text << " [x^" << d << "] " << p.coeff(d).to_string() << ";";
                }
                text << "\n";
            }
            continue;
        }
        const CharPolyBundle bundle = full_charpoly(spec);
        if (config.format == OutputFormat::Json) {
            json sectors = json::array();
            for (const auto& s : bundle.sectors) sectors.push_back(io::cyclo_poly_json(s));
            envelope["results"].push_back(json{{"spec", io::walk_spec_json(spec)},
                                               {"sectors", std::move(sectors)},
                                               {"product", io::polynomial_json(bundle.product)},
                                               {"direct_checked", bundle.direct_checked},
                                               {"elapsed_ms", elapsed_ms(t0)}});
        } else {
            text << "f" << spec.to_string() << " = " << bundle.product.to_string() << "\n";
        }
    }
}

void render_period(const RunConfig& config, json& envelope, std::ostream& text) {
    for (const WalkSpec& spec : selected_specs(config)) {
        const auto t0 = std::chrono::steady_clock::now();
        const PeriodResult r = decide_period(spec);
        if (config.format == OutputFormat::Json) {
            json item = io::period_result_json(r);
            item["spec"] = io::walk_spec_json(spec);
            item["elapsed_ms"] = elapsed_ms(t0);
            envelope["results"].push_back(std::move(item));
        } else {
            text << spec.to_string() << ": ";
            if (r.finite()) {
                text << "finite, T = " << r.period << ", factors " << r.certificate_detail()
                     << (r.confirmed_by_power ? " (confirmed by power)"
                                              : " (unconfirmed-by-power)");
            } else {
                text << "infinite, " << r.certificate_kind() << " " << r.certificate_detail();
            }
            text << "\n";
        }
    }
}

void render_zeta(const RunConfig& config, json& envelope, std::ostream& text) {
    for (const WalkSpec& spec : selected_specs(config)) {
        const auto t0 = std::chrono::steady_clock::now();
        const WalkZeta z = walk_zeta(spec);
        if (config.format == OutputFormat::Json) {
            envelope["results"].push_back(
                json{{"spec", io::walk_spec_json(spec)},
                     {"denominator", io::polynomial_json(z.denominator)},
                     {"direct_checked", z.direct_checked},
                     {"elapsed_ms", elapsed_ms(t0)}});
        } else {
            text << "zeta" << spec.to_string() << "(u) = 1 / (" << z.denominator.to_string("u")
                 << ")\n";
        }
    }
}

void render_abszeta(const RunConfig& config, json& envelope, std::ostream& text) {
    for (Family fam : selected_families(config)) {
        for (unsigned L : config.states) {
            const unsigned N = config.vertices.empty() ? L : config.vertices.front();
            const WalkSpec spec{fam, L, N};
            const auto t0 = std::chrono::steady_clock::now();
            const WalkZeta z = walk_zeta(spec);
            const auto form = recognize_kurokawa(Polynomial::one(), z.denominator);
            if (!form) {
                throw std::domain_error(
                    "walk zeta is not a product of (x^m - 1) factors for " + spec.to_string() +
                    "; no absolute-zeta descriptor exists under this recognizer");
            }
            const AbsZetaDescriptor desc = absolute_zeta_descriptor(*form);

            json item{{"spec", io::walk_spec_json(spec)},
                      {"descriptor", io::abs_zeta_descriptor_json(desc)}};
            std::ostringstream text_block;
            text_block << "abszeta" << spec.to_string() << ":\n"
                       << "  form: zeta(u) = " << form->to_string("u") << "\n"
                       << desc.render_text() << "\n";

            if (config.verify_mellin) {
                const double mellin = eval_Zf_mellin(*form, config.w, config.s, config.tol);
                const double series = eval_subset_series(desc, config.w, config.s, config.tol);
                const double diff = std::abs(mellin - series);
                const bool pass = diff < 2.0 * config.tol;
                item["mellin_check"] = json{{"w", config.w},         {"s", config.s},
                                            {"tol", config.tol},     {"mellin", mellin},
                                            {"subset_series", series}, {"abs_diff", diff},
                                            {"pass", pass}};
                text_block << "  mellin check at (w=" << config.w << ", s=" << config.s
                           << "): mellin=" << mellin << " series=" << series << " |diff|=" << diff
                           << (pass ? " PASS" : " FAIL") << "\n";
                if (!pass) {
                    throw InternalError("Mellin identity check failed for " + spec.to_string());
                }
            }
            item["elapsed_ms"] = elapsed_ms(t0);
            if (config.format == OutputFormat::Json) {
                envelope["results"].push_back(std::move(item));
            } else {
                text << text_block.str();
            }
        }
    }
}

void render_sweep(const RunConfig& config, json& envelope, std::ostream& text) {
    std::vector<WalkSpec> cells = selected_specs(config);
    const std::vector<SweepRow> rows = run_sweep_cells(cells, config.threads);
    if (config.format == OutputFormat::Json) {
        json arr = json::array();
        for (const auto& row : rows) {
            json item = io::period_result_json(row.result);
            item["spec"] = io::walk_spec_json(WalkSpec{row.family, row.states, row.vertices});
            item["elapsed_ms"] = row.elapsed_ms;
            arr.push_back(std::move(item));
        }
        envelope["results"] = std::move(arr);
    } else {
        text << render_sweep_rows(rows, config.format);
    }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        config.validate();

        std::ostringstream buffer;
        if (config.command == Command::Verify) {
            const int code = run_verify(config, buffer);
            if (!config.output_path.empty()) {
                std::ofstream f(config.output_path);
                f << buffer.str();
            } else {
                out << buffer.str();
            }
            return code;
        }

        json envelope = make_envelope(config);
        switch (config.command) {
            case Command::DumpU: render_dump_u(config, envelope, buffer); break;
            case Command::Charpoly: render_charpoly(config, envelope, buffer); break;
            case Command::Period: render_period(config, envelope, buffer); break;
            case Command::Zeta: render_zeta(config, envelope, buffer); break;
            case Command::AbsZeta: render_abszeta(config, envelope, buffer); break;
            case Command::Sweep: render_sweep(config, envelope, buffer); break;
            case Command::Verify: break;  // handled above
        }
        std::string rendered =
            config.format == OutputFormat::Json ? envelope.dump(2) + "\n" : buffer.str();
        if (!config.output_path.empty()) {
            std::ofstream f(config.output_path);
            if (!f) throw std::domain_error("cannot open output path: " + config.output_path);
            f << rendered;
        } else {
            out << rendered;
        }
        return kExitOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace cyclewalk
