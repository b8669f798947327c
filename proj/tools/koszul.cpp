#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <koszul.hpp>

namespace {

using namespace koszul;

struct GlobalFlags {
    std::string format = "text";
    std::optional<std::string> order;
    std::optional<uint32_t> degree_bound;
    std::optional<uint32_t> power_bound;
};

void emit(const OrderedJson& doc, const GlobalFlags& flags) {
    std::cout << render_report(doc, flags.format);
}

int error_report(const std::string& command, const std::string& digest,
                 const GlobalFlags& flags, const char* kind, const std::string& message,
                 std::size_t line, std::size_t col, int code) {
    OrderedJson doc = report_skeleton(command, digest);
    OrderedJson err;
    err["kind"] = kind;
    err["message"] = message;
    if (line > 0) {
        err["line"] = std::to_string(line);
        err["column"] = std::to_string(col);
    }
    doc["error"] = std::move(err);
    doc["status"] = "ERROR";
    emit(doc, flags);
    std::cerr << "error: " << message;
    if (line > 0) std::cerr << " (line " << line << ", column " << col << ")";
    std::cerr << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Koszul complex and residue pairing calculator"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags flags;
    std::string order_flag, zeros_flag, numerator_flag;
    app.add_option("--format", flags.format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    auto* order_opt = app.add_option("--order", order_flag,
                                     "monomial order: degrevlex, deglex, or lex");
    uint32_t degree_flag = 0, power_flag = 0;
    auto* degree_opt =
        app.add_option("--degree-bound", degree_flag, "truncation degree for homology");
    auto* power_opt =
        app.add_option("--power-bound", power_flag, "search bound for pure powers");

    std::string spec_path;
    CLI::App* cmd_coh = app.add_subcommand("cohomology", "truncated homology and vanishing");
    cmd_coh->add_option("spec", spec_path, "section spec file")->required();
    CLI::App* cmd_pair = app.add_subcommand("pairing", "trace pairing Gram matrix and rank");
    cmd_pair->add_option("spec", spec_path, "section spec file")->required();
    CLI::App* cmd_res = app.add_subcommand("residue", "Grothendieck residue of a numerator");
    cmd_res->add_option("spec", spec_path, "section spec file")->required();
    auto* numerator_opt =
        cmd_res->add_option("--numerator", numerator_flag, "numerator polynomial");
    numerator_opt->required();
    auto* zeros_opt = cmd_res->add_option(
        "--zeros", zeros_flag, "exact simple zeros \"(a, b); (c, d)\" for the oracle path");
    uint64_t seed = 0;
    uint32_t n_max = 2;
    CLI::App* cmd_ver = app.add_subcommand("verify-identities", "operator identity battery");
    cmd_ver->add_option("--seed", seed, "randomness seed");
    cmd_ver->add_option("--n-max", n_max, "largest dimension to exercise");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (*order_opt) flags.order = order_flag;
    if (*degree_opt) flags.degree_bound = degree_flag;
    if (*power_opt) flags.power_bound = power_flag;

    std::string command = app.get_subcommands().front()->get_name();
    std::string digest = "unavailable";
    auto started = std::chrono::steady_clock::now();
    int code = 0;
    try {
        CommandResult result;
        if (command == "verify-identities") {
            result = cmd_verify(seed, n_max);
        } else {
            std::string raw = read_spec_file(spec_path);
            digest = digest_string(raw);
            SectionSpec spec =
                parse_spec_text(raw, flags.order, flags.degree_bound, flags.power_bound);
            if (command == "cohomology") {
                result = cmd_cohomology(spec, digest);
            } else if (command == "pairing") {
                result = cmd_pairing(spec, digest);
            } else {
                std::optional<std::string> zeros;
                if (*zeros_opt) zeros = zeros_flag;
                result = cmd_residue(spec, digest, numerator_flag, zeros);
            }
        }
        emit(result.report, flags);
        if (result.exit_code == 2 && result.report.contains("error"))
            std::cerr << "error: "
                      << result.report["error"]["message"].get<std::string>() << "\n";
        code = result.exit_code;
    } catch (const ParseError& e) {
        code = error_report(command, digest, flags, "parse", e.what(), e.line, e.col, 1);
    } catch (const SpecError& e) {
        code = error_report(command, digest, flags, "validation", e.what(), 0, 0, 1);
    } catch (const std::invalid_argument& e) {
        code = error_report(command, digest, flags, "input", e.what(), 0, 0, 1);
    } catch (const std::domain_error& e) {
        code = error_report(command, digest, flags, "input", e.what(), 0, 0, 1);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    std::cerr << "elapsed_ms: " << elapsed << "\n";
    return code;
}
