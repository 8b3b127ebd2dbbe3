#include "spinflip/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "spinflip/measures.hpp"

namespace spinflip {

ResultRow evaluate_row(const FamilySpec& bound, const std::string& param_name,
                       double param_value) {
    const BuiltState built = build_state(bound);
    ResultRow row{};
    row.param_name = param_name;
    row.param_value = param_value;
    row.n_qubits = built.rho.n_qubits();
    row.report = analyze(built.rho);
    if (row.n_qubits == 2) {
        row.concurrence = concurrence_mixed(built.rho).concurrence;
        row.eof_value = eof(built.rho);
    }
    if (row.n_qubits == 3 && built.psi) {
        auto pair_c_sq = [&](std::initializer_list<int> drop) {
            const DensityMatrix reduced = partial_trace(built.rho, std::vector<int>(drop));
            const double c = concurrence_mixed(reduced).concurrence;
            return c * c;
        };
        row.pair_c_sq = {pair_c_sq({3}), pair_c_sq({1}), pair_c_sq({2})};
    }
    return row;
}

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

struct NamedValue {
    const char* name;
    double value;
};

std::vector<NamedValue> numeric_fields(const ResultRow& row) {
    std::vector<NamedValue> out = {
        {"purity", row.report.purity},
        {"mixedness", row.report.mixedness},
        {"s_n_sq", row.report.s_n_sq},
        {"d_hs_sq", row.report.d_hs_sq},
        {"indistinguishability", row.report.indistinguishability},
        {"residual_eq13", row.report.residual_purity_split},
        {"residual_eq14", row.report.residual_symmetry},
    };
    if (row.concurrence) out.push_back({"concurrence", *row.concurrence});
    if (row.eof_value) out.push_back({"eof", *row.eof_value});
    if (row.pair_c_sq) {
        out.push_back({"c_sq_ab", (*row.pair_c_sq)[0]});
        out.push_back({"c_sq_bc", (*row.pair_c_sq)[1]});
        out.push_back({"c_sq_ac", (*row.pair_c_sq)[2]});
    }
    return out;
}

bool selected_contains(const std::vector<std::string>& selected, const char* name) {
    return selected.empty() ||
           std::find(selected.begin(), selected.end(), name) != selected.end();
}

}  // namespace

std::vector<std::string> csv_columns(const ResultRow& row,
                                     const std::vector<std::string>& selected) {
    std::vector<std::string> cols = {"param_name", "param_value", "n_qubits"};
    for (const NamedValue& nv : numeric_fields(row))
        if (selected_contains(selected, nv.name)) cols.push_back(nv.name);
    if (!selected.empty())
        for (const std::string& s : selected) {
            bool known = false;
            for (const NamedValue& nv : numeric_fields(row))
                if (s == nv.name) known = true;
            if (!known) throw parse_error("unknown column '" + s + "'");
        }
    return cols;
}

std::string csv_header(const ResultRow& row, const std::vector<std::string>& selected) {
    const std::vector<std::string> cols = csv_columns(row, selected);
    std::string out;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out += ',';
        out += cols[i];
    }
    return out;
}

std::string csv_line(const ResultRow& row, const std::vector<std::string>& selected) {
    std::string out = row.param_name;
    out += ',';
    out += format_number(row.param_value);
    out += ',';
    out += std::to_string(row.n_qubits);
    for (const NamedValue& nv : numeric_fields(row))
        if (selected_contains(selected, nv.name)) {
            out += ',';
            out += format_number(nv.value);
        }
    return out;
}

void print_analysis(std::ostream& os, const FamilySpec& spec, const ResultRow& row) {
    os << "family: " << family_name(spec.family) << "\n";
    os << "n_qubits: " << row.n_qubits << "\n";
    for (const NamedValue& nv : numeric_fields(row))
        os << nv.name << ": " << format_number(nv.value) << "\n";
}

namespace {

class AtomicFile {
  public:
    explicit AtomicFile(const std::string& path)
        : path_(path), tmp_(path + ".tmp"), out_(tmp_, std::ios::trunc) {
        if (!out_) throw std::runtime_error("cannot open output file " + tmp_);
    }
    std::ofstream& stream() { return out_; }
    void commit() {
        out_.close();
        if (!out_) throw std::runtime_error("write failed for " + tmp_);
        std::filesystem::rename(tmp_, path_);
    }

  private:
    std::string path_;
    std::string tmp_;
    std::ofstream out_;
};

}  // namespace

void write_sweep_csv(const FamilySpec& spec, const std::string& out_path,
                     const std::vector<std::string>& selected) {
    const std::optional<std::string> key = spec.ranged_param();
    if (!key) throw parse_error("sweep spec must contain exactly one ranged parameter");
    const ParamRange range = *spec.params.at(*key).range;

    std::vector<ResultRow> rows;
    rows.reserve(static_cast<std::size_t>(range.steps));
    for (int i = 0; i < range.steps; ++i) {
        const double v = range.value_at(i);
        rows.push_back(evaluate_row(bind_param(spec, *key, v), *key, v));
    }

    AtomicFile file(out_path);
    file.stream() << csv_header(rows.front(), selected) << "\n";
    for (const ResultRow& row : rows) file.stream() << csv_line(row, selected) << "\n";
    file.commit();
}

void write_stokes_csv(const FamilySpec& spec, const std::string& out_path) {
    const BuiltState built = build_state(spec);
    const StokesTensor tensor = stokes_from_density(built.rho);

    AtomicFile file(out_path);
    file.stream() << "index,value\n";
    for (std::size_t flat = 0; flat < tensor.size(); ++flat)
        file.stream() << tensor.index_string(flat) << ',' << format_number(tensor[flat])
                      << "\n";
    file.stream() << "# euclidean_norm_sq=" << format_number(euclidean_norm_sq(tensor))
                  << "\n";
    file.stream() << "# minkowski_norm_sq=" << format_number(minkowski_norm_sq(tensor))
                  << "\n";
    file.commit();
}

void print_verify_report(std::ostream& os, const VerifyReport& rep, double tol) {
    os << "verify: trials=" << rep.trials << " n=" << rep.n_min << ".." << rep.n_max
       << " seed=" << rep.seed << " tol=" << format_number(tol) << "\n";
    const auto line = [&](const char* name, double v) {
        os << "  " << name << ": " << format_number(v)
           << (v <= tol ? "  [ok]" : "  [FAIL]") << "\n";
    };
    line("max residual, entanglement + distance vs purity", rep.purity_split);
    line("max residual, entanglement + mixedness vs symmetry", rep.symmetry_relation);
    line("max drift, purity under local unitaries", rep.unitary_purity);
    line("max drift, entanglement under local unitaries", rep.unitary_entanglement);
    line("max relative drift, unnormalized det-1 action", rep.slocc_invariance_rel);
    line("max defect, spin-flip covariance", rep.flip_covariance);
    line("max residual, Werner complementarity", rep.werner_complementarity);
    os << "reference outputs:\n";
    for (const auto& [n, v] : rep.fully_mixed_s_sq)
        os << "  s_n_sq(fully_mixed(" << n << ")) = " << format_number(v)
           << "  (equals 2^-n, not zero)\n";
    os << "  eof(bell) = " << format_number(rep.bell_eof)
       << "  eof_literal(bell) = " << format_number(rep.bell_eof_literal) << "\n";
    os << (rep.pass(tol) ? "PASS" : "FAIL") << "\n";
}

}  // namespace spinflip
