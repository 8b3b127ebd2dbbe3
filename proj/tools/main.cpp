#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spinflip/report.hpp"

namespace {

std::vector<std::string> split_columns(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"entanglement / mixedness / spin-flip symmetry calculator"};
    app.require_subcommand(1);

    std::string spec_text;
    std::string out_path;
    std::string columns;
    bool csv = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "analyze a single state");
    analyze_cmd->add_option("spec", spec_text, "family spec, e.g. werner(w=0.5)")->required();
    analyze_cmd->add_flag("--csv", csv, "also print a CSV row");

    std::string sweep_spec;
    std::string sweep_out;
    auto* sweep_cmd = app.add_subcommand("sweep", "sweep one parameter, write CSV");
    sweep_cmd->add_option("spec", sweep_spec, "spec with one range, e.g. werner(w=0:1:11)")
        ->required();
    sweep_cmd->add_option("--out", sweep_out, "output CSV path")->required();
    sweep_cmd->add_option("--columns", columns, "comma-separated column subset");

    int trials = 200;
    int nmax = 4;
    std::uint64_t seed = 1;
    double tol = 1e-8;
    auto* verify_cmd = app.add_subcommand("verify", "verify identities on random states");
    verify_cmd->add_option("--trials", trials, "number of random trials");
    verify_cmd->add_option("--nmax", nmax, "largest qubit count");
    verify_cmd->add_option("--seed", seed, "generator seed");
    verify_cmd->add_option("--tol", tol, "pass/fail tolerance");

    std::string stokes_spec;
    std::string stokes_out;
    auto* stokes_cmd = app.add_subcommand("stokes", "dump the Stokes tensor as CSV");
    stokes_cmd->add_option("spec", stokes_spec, "family spec")->required();
    stokes_cmd->add_option("--out", stokes_out, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (*analyze_cmd) {
        const spinflip::FamilySpec spec = spinflip::parse_family_spec(spec_text);
        if (spec.ranged_param())
            throw spinflip::parse_error("analyze takes a concrete spec; use sweep for ranges");
        const spinflip::ResultRow row = spinflip::evaluate_row(spec, "-", 0.0);
        spinflip::print_analysis(std::cout, spec, row);
        if (csv) {
            std::cout << spinflip::csv_header(row, {}) << "\n";
            std::cout << spinflip::csv_line(row, {}) << "\n";
        }
        return 0;
    }
    if (*sweep_cmd) {
        const spinflip::FamilySpec spec = spinflip::parse_family_spec(sweep_spec);
        spinflip::write_sweep_csv(spec, sweep_out, split_columns(columns));
        return 0;
    }
    if (*verify_cmd) {
        const spinflip::VerifyReport rep = spinflip::verify_identities(trials, 1, nmax, seed);
        spinflip::print_verify_report(std::cout, rep, tol);
        return rep.pass(tol) ? 0 : 1;
    }
    if (*stokes_cmd) {
        const spinflip::FamilySpec spec = spinflip::parse_family_spec(stokes_spec);
        spinflip::write_stokes_csv(spec, stokes_out);
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const spinflip::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const spinflip::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
