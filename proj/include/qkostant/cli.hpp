#pragma once

#include <string>
#include <vector>

namespace qk::cli {

/// Result of one dispatched command: exit code (0 success/pass, 1 check
/// failure, 2 usage error), the human-readable text, and the JSON report when
/// one was produced.
struct CliOutcome {
    int exit_code = 0;
    std::string output;
    std::string report_json;
    bool has_report = false;
    std::string report_path;
};

/// Parse and run one command line (without argv[0]). Pure apart from the
/// delegated computation; writing output/report files is run_main's job.
CliOutcome dispatch(const std::vector<std::string>& args);

/// Full CLI entry point: dispatch, print, write the report file if requested.
int run_main(int argc, char** argv);

}  // namespace qk::cli
