#include <iostream>

#include <CLI11.hpp>

#include "salab/fuzz.hpp"
#include "salab/mutation.hpp"
#include "salab/scenario.hpp"

int main(int argc, char** argv) {
    CLI::App app{"salab: exact verification of string algebroid identities on a chart"};
    app.require_subcommand(1);

    std::string path, format = "text";
    bool stop_on_fail = false;
    CLI::App* run = app.add_subcommand("run", "run a scenario file");
    run->add_option("file", path, "scenario file (JSON)")->required();
    run->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    run->add_flag("--stop-on-fail", stop_on_fail, "stop at the first failing command");

    std::uint64_t seed = 1;
    int cases = 100, max_n = 2, max_deg = 2, max_k = 2;
    std::string mutate = "none", fformat = "text";
    CLI::App* fuzz = app.add_subcommand("fuzz", "run the randomized property suite");
    fuzz->add_option("--seed", seed, "rng seed");
    fuzz->add_option("--cases", cases, "number of cases");
    fuzz->add_option("--n", max_n, "max chart dimension (<= 3)")->check(CLI::Range(1, 3));
    fuzz->add_option("--deg", max_deg, "max polynomial degree (<= 4)")->check(CLI::Range(0, 4));
    fuzz->add_option("--k", max_k, "max matrix size (<= 3)")->check(CLI::Range(1, 3));
    fuzz->add_option("--mutate", mutate, "fault injection for suite self-tests")
        ->check(CLI::IsMember({"none", "bracket-sym", "group-c", "dgla-sign"}));
    fuzz->add_option("--format", fformat, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        salab::RunOptions opt;
        opt.stop_on_fail = stop_on_fail;
        salab::Report report = salab::run_scenario_file(path, opt);
        if (format == "json")
            salab::print_report_json(report, std::cout);
        else
            salab::print_report_text(report, std::cout);
        return report.exit_code;
    }

    if (mutate == "bracket-sym")
        salab::mutation::set_active(salab::mutation::Site::dorfman_pairing_sign);
    else if (mutate == "group-c")
        salab::mutation::set_active(salab::mutation::Site::group_product_c_sign);
    else if (mutate == "dgla-sign")
        salab::mutation::set_active(salab::mutation::Site::dgla_bracket_sign);

    salab::FuzzConfig cfg;
    cfg.seed = seed;
    cfg.cases = cases;
    cfg.max_n = max_n;
    cfg.max_k = max_k;
    cfg.max_degree = max_deg;
    salab::FuzzReport rep = salab::run_fuzz(cfg);

    if (fformat == "json") {
        std::cout << "{\"cases\": " << rep.cases_run << ", \"failures\": " << rep.failures.size()
                  << "}\n";
    } else {
        std::cout << "ran " << rep.cases_run << " cases\n";
        for (const auto& f : rep.failures)
            std::cout << "counterexample in " << f.property << " (case " << f.case_index
                      << "):\n  " << f.witness << "\n";
        if (rep.ok()) std::cout << "no counterexamples\n";
    }
    return rep.ok() ? 0 : 1;
}
