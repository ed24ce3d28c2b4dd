#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace salab {

struct RunOptions {
    bool stop_on_fail = false;
};

struct Payload {
    std::string name;
    std::string text;
    bool residual = false;  // participates in pass/fail
    bool zero = false;
};

struct CommandResult {
    std::string command;
    std::string status;  // pass | fail | error
    std::string message;  // for errors
    std::vector<Payload> payloads;
    double ms = 0.0;
};

struct Report {
    std::vector<CommandResult> results;
    // 0: all pass; 1: some residual nonzero; 2: parse/type error
    int exit_code = 0;
};

// Text must be a JSON scenario document; see README for the schema.
Report run_scenario_text(const std::string& text, const RunOptions& opt);
Report run_scenario_file(const std::string& path, const RunOptions& opt);

void print_report_text(const Report& r, std::ostream& os);
void print_report_json(const Report& r, std::ostream& os);

}  // namespace salab
