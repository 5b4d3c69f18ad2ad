// kleinjac: command-line front end for the verification suites.
//
//   kleinjac sigma-action --genus G
//   kleinjac components (--genus G | --re2 FILE) [--oracle grid=N]
//   kleinjac divisor-suite --torsion N [--max-support K]
//   kleinjac verify [--seed S] [--genus-range A..B]
//
// Every subcommand accepts --json PATH to write the report document.
// Exit status: 0 all checks pass, 1 some check failed, 2 usage error.

#include "kleinjac/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string command_echo(int argc, char** argv) {
    std::string s = kleinjac::kToolName;
    for (int i = 1; i < argc; ++i) s += std::string(" ") + argv[i];
    return s;
}

unsigned parse_genus_range_end(const std::string& text, unsigned& lo) {
    static const std::regex re(R"((\d+)\.\.(\d+))");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw UsageError("--genus-range expects A..B");
    lo = static_cast<unsigned>(std::stoul(m[1]));
    const auto hi = static_cast<unsigned>(std::stoul(m[2]));
    if (lo == 0 || hi < lo) throw UsageError("--genus-range needs 1 <= A <= B");
    return hi;
}

kleinjac::OracleOptions parse_oracle(const std::string& text) {
    static const std::regex re(R"(grid=(\d+))");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw UsageError("--oracle expects grid=N");
    kleinjac::OracleOptions o;
    o.grid = std::stoul(m[1]);
    if (o.grid < 4 || o.grid % 2 != 0) throw UsageError("--oracle grid must be even and >= 4");
    return o;
}

void print_matrix(const char* label, const kleinjac::IntegerMatrix& m) { std::cout << label << " = " << m << '\n'; }

int emit(kleinjac::Report& report, const std::string& command, const std::string& json_path) {
    report.command = command;
    for (const auto& c : report.checks) std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  [" << c.anchor << "]\n";
    std::cout << report.checks.size() - report.failures() << "/" << report.checks.size() << " checks passed\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + json_path);
        out << report.to_json().dump(2) << '\n';
    }
    return report.all_passed() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Real structures on Jacobians of Klein-surface double covers: verification suites"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kleinjac::kToolVersion);

    std::string json_path;

    unsigned genus = 0;
    auto* sigma_cmd = app.add_subcommand("sigma-action", "Homology action, basis change and transformed action");
    sigma_cmd->add_option("--genus", genus, "genus of the double cover")->required();
    sigma_cmd->add_option("--json", json_path, "write report JSON to PATH");

    std::string re2_file;
    std::string oracle_spec;
    auto* comp_cmd = app.add_subcommand("components", "Connected components of the fixed locus on the Jacobian torus");
    auto* comp_genus = comp_cmd->add_option("--genus", genus, "use the canonical Re P for this genus");
    auto* comp_re2 = comp_cmd->add_option("--re2", re2_file, "JSON file {genus, parity, re2} holding 2 Re P");
    comp_genus->excludes(comp_re2);
    comp_cmd->add_option("--oracle", oracle_spec, "cross-check with the grid scan, e.g. grid=8");
    comp_cmd->add_option("--json", json_path, "write report JSON to PATH");

    unsigned torsion = 0;
    unsigned max_support = 2;
    auto* div_cmd = app.add_subcommand("divisor-suite", "Torsion census of the genus-1 divisor model and lambda checks");
    div_cmd->add_option("--torsion", torsion, "torsion order N (even)")->required();
    div_cmd->add_option("--max-support", max_support, "total multiplicity bound of enumerated divisors");
    div_cmd->add_option("--json", json_path, "write report JSON to PATH");

    std::uint64_t seed = 0;
    std::string genus_range = "1..6";
    auto* verify_cmd = app.add_subcommand("verify", "Run every check");
    verify_cmd->add_option("--seed", seed, "seed for randomized sweeps");
    verify_cmd->add_option("--genus-range", genus_range, "genus range A..B");
    verify_cmd->add_option("--json", json_path, "write report JSON to PATH");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    const std::string command = command_echo(argc, argv);
    try {
        kleinjac::Report report;
        if (*sigma_cmd) {
            if (genus == 0) throw UsageError("--genus must be >= 1");
            const auto h = kleinjac::make_homology_action(genus, kleinjac::parity_of(genus));
            std::cout << "genus " << genus << " (" << kleinjac::to_string(h.parity) << ")\n";
            print_matrix("sigma", h.action);
            print_matrix("C", h.basis_change);
            print_matrix("C^-1 sigma C", h.transformed);
            print_matrix("A", *kleinjac::check_inv_condition(h.transformed));
            report = kleinjac::sigma_action_suite(genus);
        } else if (*comp_cmd) {
            std::optional<kleinjac::OracleOptions> oracle;
            if (!oracle_spec.empty()) oracle = parse_oracle(oracle_spec);
            if (!re2_file.empty()) {
                std::ifstream in(re2_file);
                if (!in) throw UsageError("cannot read " + re2_file);
                const auto rp = kleinjac::real_part_from_json(kleinjac::json::parse(in));
                report = kleinjac::components_suite(rp, oracle);
            } else {
                if (genus == 0) throw UsageError("components needs --genus >= 1 or --re2 FILE");
                report = kleinjac::canonical_components_suite(genus, oracle);
            }
            const auto& w = report.checks.front().witness;
            std::cout << "count " << w.at("count") << ", offsets " << w.at("offsets").dump() << '\n';
        } else if (*div_cmd) {
            if (torsion == 0 || torsion % 2 != 0) throw UsageError("--torsion must be a positive even integer");
            if (max_support == 0) throw UsageError("--max-support must be positive");
            report = kleinjac::divisor_suite(torsion, max_support);
            const auto& w = report.checks.front().witness;
            std::cout << "T1 " << w.at("T1") << ", T2 " << w.at("T2") << ", NOT_FIXED " << w.at("NOT_FIXED") << '\n';
        } else if (*verify_cmd) {
            kleinjac::VerifyOptions opt;
            opt.seed = seed;
            opt.genus_hi = parse_genus_range_end(genus_range, opt.genus_lo);
            report = kleinjac::verify_all(opt);
        }
        return emit(report, command, json_path);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "bad input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
}
