#include "dicrit/corpus/acceptance.hpp"
#include "dicrit/error.hpp"
#include "dicrit/io/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using dicrit::io::Json;

namespace {

constexpr const char* version = "0.1.0";

std::string read_input(const std::string& arg)
{
    if (arg.empty() || arg == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
    std::ifstream in(arg);
    if (!in) throw dicrit::ParseError("input", "cannot open " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Plain-text rendering: one "key: value" per scalar, nested by indentation.
void render(const Json& j, std::ostream& os, int indent = 0)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_structured() && !v.empty() && !(v.is_array() && !v.front().is_structured())) {
                os << pad << k << ":\n";
                render(v, os, indent + 2);
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object()) {
                os << pad << "-\n";
                render(v, os, indent + 2);
            } else {
                os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dicritical divisors, Gauss extensions and monomial ideal tools"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.set_version_flag("--version", version);

    dicrit::io::Options options;
    bool json = false, timing = false;
    std::string extend = "quadratic";
    int bound = -1;
    app.add_option("--seed", options.seed, "Seed for randomized searches")->default_val(0);
    app.add_option("--max-depth", options.max_depth, "Blowup depth limit")->default_val(24)->check(CLI::PositiveNumber);
    app.add_option("--bound", bound, "Normality or certification bound")->check(CLI::NonNegativeNumber);
    app.add_flag("--json", json, "Machine-readable JSON output");
    app.add_option("--extend", extend, "Residue field extensions over Q")
        ->check(CLI::IsMember({"none", "quadratic"}));
    app.add_flag("--timing", timing, "Include wall-clock timing in the report");

    std::string command, action, input;
    int m = 0;
    std::string forms;
    std::string corpus_dir = dicrit::acceptance::default_corpus_dir();

    for (const auto& [name, actions] : dicrit::io::command_table()) {
        auto* sub = app.add_subcommand(name);
        if (name == "example83") {
            sub->add_option("--m", m, "Exponent of Z")->required();
            sub->add_option("--forms", forms, "Comma-separated linear forms in X, Y")->required();
            sub->callback([&, name] { command = name; });
            continue;
        }
        if (actions.size() == 1 && actions.front().empty()) {
            sub->add_option("input", input, "JSON file, inline JSON, or - for stdin");
            sub->callback([&, name] { command = name; });
            continue;
        }
        sub->require_subcommand(1);
        for (const auto& a : actions) {
            auto* leaf = sub->add_subcommand(a);
            leaf->add_option("input", input, "JSON file, inline JSON, or - for stdin");
            leaf->callback([&, name, a] {
                command = name;
                action = a;
            });
        }
    }
    auto* corpus = app.add_subcommand("corpus", "Corpus management");
    corpus->require_subcommand(1);
    auto* run = corpus->add_subcommand("run", "Run the acceptance suite");
    run->add_option("dir", corpus_dir, "Corpus directory");
    run->callback([&] { command = "corpus"; action = "run"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        Json err{{"error", {{"kind", "ParseError"}, {"field", "arguments"}, {"reason", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 2;
    }
    if (bound >= 0) options.bound = bound;
    options.extend = extend == "none" ? dicrit::pencil::ExtensionPolicy::none : dicrit::pencil::ExtensionPolicy::quadratic;

    const std::string echo = action.empty() ? command : command + " " + action;
    if (command == "corpus") {
        Json rows = Json::array();
        int failed = 0;
        try {
            dicrit::acceptance::run_all(corpus_dir, [&](const dicrit::acceptance::CriterionResult& r) {
                failed += r.pass ? 0 : 1;
                Json row{{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}};
                if (timing) row["seconds"] = r.seconds;
                rows.push_back(row);
                if (!json) {
                    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title << "  (" << r.detail
                              << ")";
                    if (timing) std::cout << "  " << r.seconds << "s";
                    std::cout << std::endl;
                }
            });
        } catch (const dicrit::Error& e) {
            std::cout << Json{{"command", echo}, {"error", dicrit::io::error_to_json(e)}}.dump(2) << "\n";
            return e.kind() == dicrit::ErrorKind::parse_error ? 2 : 1;
        }
        if (json) std::cout << Json{{"command", echo}, {"tool_version", version}, {"results", rows}}.dump(2) << "\n";
        return failed == 0 ? 0 : 1;
    }

    Json report{{"command", echo}, {"tool_version", version}, {"seed", options.seed}};
    const auto start = std::chrono::steady_clock::now();
    try {
        Json request = command == "example83" ? Json{{"m", m}, {"forms", forms}} : dicrit::io::parse_text(read_input(input));
        report["result"] = dicrit::io::run_command(command, action, request, options);
    } catch (const dicrit::Error& e) {
        report["error"] = dicrit::io::error_to_json(e);
        std::cout << report.dump(2) << "\n";
        return e.kind() == dicrit::ErrorKind::parse_error ? 2 : 1;
    } catch (const std::exception& e) {
        report["error"] = {{"kind", "internal"}, {"message", e.what()}};
        std::cout << report.dump(2) << "\n";
        return 1;
    }
    if (timing)
        report["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (json) std::cout << report.dump(2) << "\n";
    else render(report, std::cout);
    return 0;
}
