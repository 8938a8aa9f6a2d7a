#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geobound/checks.hpp"

// Exit codes: 0 all checks pass, 1 some check failed, 2 usage error.

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorial verifier for a bounding hyperbolic gluing "
                 "of two ideal 24-cells"};
    app.require_subcommand(1);

    CLI::App* verify = app.add_subcommand("verify", "run all checks and print a report");
    std::string format = "text";
    verify->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    std::vector<std::string> export_args;
    verify->add_option("--export", export_args,
                       "write a triangulation (large|small|example-doubled) to a file")
        ->expected(2);
    bool list_only = false;
    verify->add_flag("--list-checks", list_only, "list check ids and claims, then exit");
    bool corrupt = false;
    verify->add_flag("--corrupt-pairing", corrupt)->group("");    // fault-injection hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            app.exit(e);
            return 0;
        }
        app.exit(e);
        return 2;
    }

    if (list_only) {
        for (const auto& [id, claim] : geobound::list_checks())
            std::cout << id << ": " << claim << "\n";
        return 0;
    }

    geobound::PipelineOptions options;
    options.corrupt_pairing = corrupt;
    geobound::Report report = geobound::run_pipeline(options);
    std::cout << (format == "json" ? geobound::render_json(report)
                                   : geobound::render_text(report));

    if (!export_args.empty()) {
        try {
            geobound::export_triangulation(export_args[0], export_args[1]);
            std::cerr << "exported " << export_args[0] << " to " << export_args[1] << "\n";
        } catch (const std::exception& e) {
            std::cerr << "export error: " << e.what() << "\n";
            return 2;
        }
    }
    return report.all_pass() ? 0 : 1;
}
