#pragma once

#include <iosfwd>

#include "spinflip/familyspec.hpp"
#include "spinflip/harness.hpp"
#include "spinflip/stokes.hpp"

namespace spinflip {

// One output row; optional fields appear only for the applicable families
// (two-qubit measures, three-qubit pure pairwise concurrences).
struct ResultRow {
    std::string param_name;
    double param_value;
    int n_qubits;
    AnalysisReport report;
    std::optional<double> concurrence;
    std::optional<double> eof_value;
    std::optional<std::array<double, 3>> pair_c_sq;  // AB, BC, AC
};

ResultRow evaluate_row(const FamilySpec& bound, const std::string& param_name,
                       double param_value);

// 17 significant digits, round-trip exact.
std::string format_number(double x);

std::vector<std::string> csv_columns(const ResultRow& row,
                                     const std::vector<std::string>& selected);
std::string csv_header(const ResultRow& row, const std::vector<std::string>& selected);
std::string csv_line(const ResultRow& row, const std::vector<std::string>& selected);

void print_analysis(std::ostream& os, const FamilySpec& spec, const ResultRow& row);

// Sweep: exactly one ranged parameter; rows written in parameter order,
// atomically (temp file + rename).
void write_sweep_csv(const FamilySpec& spec, const std::string& out_path,
                     const std::vector<std::string>& selected);

// index,value rows (base-4 index strings) plus norm footer lines.
void write_stokes_csv(const FamilySpec& spec, const std::string& out_path);

void print_verify_report(std::ostream& os, const VerifyReport& rep, double tol);

}  // namespace spinflip
