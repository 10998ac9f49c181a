// Command-line front end: recompute the classification, bicanonical and
// generator tables over a parameter grid, query cohomology of a single
// divisor class, and run the verification sweeps.
//
// Exit codes: 0 all checks pass, 1 verification failures, 2 usage errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "quadcover/bicanonical.hpp"
#include "quadcover/report.hpp"
#include "quadcover/verify.hpp"

namespace {

using namespace quadcover;

constexpr const char* kSurfaceUsage =
    "surface must be \"P2\" or \"F:<e>\" (e >= 0), e.g. --surface F:2";
constexpr const char* kDivisorUsage =
    "divisor must be \"d\" on P2 or \"a,b\" on F:<e>, e.g. --divisor 0,-2";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SurfaceKind parse_surface(const std::string& text) {
    if (text == "P2" || text == "p2") return SurfaceKind::plane();
    if (!text.empty() && (text[0] == 'F' || text[0] == 'f')) {
        std::string rest = text.substr(1);
        if (!rest.empty() && rest[0] == ':') rest = rest.substr(1);
        try {
            std::size_t used = 0;
            int e = std::stoi(rest, &used);
            if (used == rest.size() && e >= 0) return SurfaceKind::hirzebruch(e);
        } catch (const std::exception&) {
        }
    }
    throw UsageError(std::string("cannot parse surface \"") + text + "\"; " + kSurfaceUsage);
}

DivisorClass parse_divisor(const std::string& text, const SurfaceKind& s) {
    try {
        if (s.is_plane()) {
            std::size_t used = 0;
            int d = std::stoi(text, &used);
            if (used != text.size()) throw UsageError("");
            return DivisorClass::plane(d);
        }
        const std::size_t comma = text.find(',');
        if (comma == std::string::npos) throw UsageError("");
        std::size_t used_a = 0, used_b = 0;
        const std::string first = text.substr(0, comma), second = text.substr(comma + 1);
        int a = std::stoi(first, &used_a);
        int b = std::stoi(second, &used_b);
        if (used_a != first.size() || used_b != second.size()) throw UsageError("");
        return DivisorClass::ruled(a, b);
    } catch (const std::exception&) {
        throw UsageError(std::string("cannot parse divisor \"") + text + "\" on " + s.name() +
                         "; " + kDivisorUsage);
    }
}

int run_cohomology(const std::string& surface_text, const std::string& divisor_text,
                   const RunConfig& config) {
    const SurfaceKind s = parse_surface(surface_text);
    const DivisorClass d = parse_divisor(divisor_text, s);
    const CohomologySummary c = cohomology(d, s);
    if (config.format == "json") {
        nlohmann::json row = {{"surface", s.name()}, {"divisor", d.str()},  {"h0", c.h0},
                              {"h1", c.h1},          {"h2", c.h2},          {"chi", c.chi}};
        nlohmann::json out = {{"command", "cohomology"},
                              {"config", {{"surface", s.name()}, {"divisor", d.str()}}},
                              {"rows", nlohmann::json::array({row})},
                              {"pass", true}};
        std::cout << out.dump(2) << '\n';
    } else if (config.format == "csv") {
        std::cout << "surface,divisor,h0,h1,h2,chi\n"
                  << s.name() << ",\"" << d.str() << "\"," << c.h0 << ',' << c.h1 << ',' << c.h2
                  << ',' << c.chi << '\n';
    } else {
        std::cout << "O(" << d.str() << ") on " << s.name() << ":  h0 = " << c.h0
                  << "  h1 = " << c.h1 << "  h2 = " << c.h2 << "  chi = " << c.chi << '\n';
    }
    return 0;
}

int run_table(const std::string& kind, const RunConfig& config) {
    Table table;
    if (kind == "classification")
        table = classification_table(config);
    else if (kind == "bicanonical")
        table = bicanonical_table(config);
    else if (kind == "generators")
        table = generators_table(config);
    else
        throw UsageError("unknown table kind \"" + kind +
                         "\"; expected classification, bicanonical or generators");
    if (config.format == "json")
        std::cout << to_json(table, config).dump(2) << '\n';
    else if (config.format == "csv")
        std::cout << to_csv(table);
    else if (config.format == "latex")
        std::cout << to_latex(table);
    else
        std::cout << to_text(table);
    return table.all_pass() ? 0 : 1;
}

int run_verify(const VerifyOptions& options, const RunConfig& config) {
    const std::vector<SuiteResult> results = run_suites(options);
    long long total = 0, failed = 0;
    if (config.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const SuiteResult& suite : results) {
            rows.push_back({{"suite", suite.name},
                            {"checked", suite.checked},
                            {"failed", suite.failed},
                            {"pass", suite.passed()}});
            total += suite.checked;
            failed += suite.failed;
        }
        nlohmann::json out = {{"command", "verify"},
                              {"config",
                               {{"m_max", options.m_max},
                                {"n_max", options.n_max},
                                {"oracle", options.oracle},
                                {"only", options.only}}},
                              {"rows", std::move(rows)},
                              {"pass", failed == 0}};
        std::cout << out.dump(2) << '\n';
    } else if (config.format == "csv") {
        std::cout << "suite,checked,failed,pass\n";
        for (const SuiteResult& suite : results) {
            total += suite.checked;
            failed += suite.failed;
            std::cout << suite.name << ',' << suite.checked << ',' << suite.failed << ','
                      << (suite.passed() ? "PASS" : "FAIL") << '\n';
        }
    } else {
        for (const SuiteResult& suite : results) {
            total += suite.checked;
            failed += suite.failed;
            if (suite.passed())
                std::cout << "PASS  " << suite.name << "  (" << suite.checked << " checks)\n";
            else {
                std::cout << "FAIL  " << suite.name << "  (" << suite.failed << "/"
                          << suite.checked << " failed)\n";
                for (const std::string& message : suite.failures)
                    std::cout << "      " << message << '\n';
            }
        }
        std::cout << (failed == 0 ? "all suites passed" : "FAILURES PRESENT") << ": " << total
                  << " checks, " << failed << " failed\n";
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of quadruple Galois canonical covers of surfaces of minimal "
                 "degree"};
    app.require_subcommand(1);

    RunConfig config;
    app.add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json", "latex"}))
        ->capture_default_str();

    std::string surface_text, divisor_text;
    CLI::App* cohomology_cmd =
        app.add_subcommand("cohomology", "h0/h1/h2/chi of a divisor class");
    cohomology_cmd->fallthrough();
    cohomology_cmd->add_option("--surface", surface_text, "P2 or F:<e>")->required();
    cohomology_cmd->add_option("--divisor", divisor_text, "d (plane) or a,b (ruled)")->required();

    std::string table_kind;
    std::string type_text;
    CLI::App* table_cmd = app.add_subcommand("table", "Recompute a verified table");
    table_cmd->fallthrough();
    table_cmd->add_option("kind", table_kind, "classification, bicanonical or generators")
        ->required();
    table_cmd->add_option("--m-max", config.m_max, "Largest m in the grid")->capture_default_str();
    table_cmd->add_option("--type", type_text, "Restrict to a single type, e.g. 5.2");

    VerifyOptions options;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run the verification sweeps");
    verify_cmd->fallthrough();
    verify_cmd->add_option("--m-max", options.m_max, "Largest m in the grids")
        ->capture_default_str();
    verify_cmd->add_option("--n-max", options.n_max, "Chain length for normal generation")
        ->capture_default_str();
    verify_cmd->add_option("--only", options.only, "Run only suites whose name contains this");
    verify_cmd->add_flag("--oracle", options.oracle, "Include the dense exact-rank cross-check");

    CLI::App* describe_cmd = app.add_subcommand("describe", "Emit one cover descriptor as JSON");
    describe_cmd->fallthrough();
    std::string describe_type;
    int describe_m = 0, describe_e = 0;
    describe_cmd->add_option("--type", describe_type, "Type id, e.g. 7")->required();
    CLI::Option* m_opt = describe_cmd->add_option("--m", describe_m, "Parameter m");
    CLI::Option* e_opt = describe_cmd->add_option("--e", describe_e, "Parameter e");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return 2;
    }

    try {
        if (*cohomology_cmd) return run_cohomology(surface_text, divisor_text, config);
        if (*table_cmd) {
            if (!type_text.empty()) {
                config.type_filter = parse_type_id(type_text);
                if (!config.type_filter)
                    throw UsageError("unknown type \"" + type_text +
                                     "\"; expected 1, 2, ..., 5.1, 5.2, ..., 12");
            }
            if (config.m_max < 1) throw UsageError("--m-max must be >= 1");
            return run_table(table_kind, config);
        }
        if (*verify_cmd) {
            if (options.m_max < 1) throw UsageError("--m-max must be >= 1");
            return run_verify(options, config);
        }
        if (*describe_cmd) {
            const auto type = parse_type_id(describe_type);
            if (!type) throw UsageError("unknown type \"" + describe_type + "\"");
            std::optional<int> m, e;
            if (*m_opt) m = describe_m;
            if (*e_opt) e = describe_e;
            std::cout << descriptor_json(make_cover(*type, m, e)).dump(2) << '\n';
            return 0;
        }
    } catch (const UsageError& error) {
        std::cerr << "usage error: " << error.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& error) {
        std::cerr << "usage error: " << error.what() << '\n';
        return 2;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 1;
    }
    return 2;
}
