#pragma once

#include <map>
#include <optional>
#include <string>

#include "spinflip/state.hpp"

namespace spinflip {

enum class Family {
    bell,
    bell_diagonal,
    werner,
    cat,
    w_state,
    mems,
    mixed_cat,
    basis_product,
    fully_mixed,
};

const char* family_name(Family f);

// Inclusive linear range start..stop with `steps` points, steps >= 2.
struct ParamRange {
    double start;
    double stop;
    int steps;

    double value_at(int i) const;
};

// A parameter is a scalar, an integer, a bit string, a named Bell label, or a
// range (ranges are only legal in sweep position).
struct ParamValue {
    std::optional<double> scalar;
    std::optional<std::string> text;  // bits / bell label
    std::optional<ParamRange> range;
};

struct FamilySpec {
    Family family;
    std::map<std::string, ParamValue> params;

    // Name of the unique ranged parameter, if any.
    std::optional<std::string> ranged_param() const;
};

// Grammar: family(key=value,...), e.g. werner(w=0.5), cat(n=3,alpha=0.7),
// basis_product(bits=0110), bell(which=phi+). Range values: key=start:stop:steps.
FamilySpec parse_family_spec(const std::string& text);

// A realized state: the density matrix plus the source vector when the family
// is pure (enables the pure-only measures downstream).
struct BuiltState {
    DensityMatrix rho;
    std::optional<StateVector> psi;
};

// All parameters must be scalar (no ranges).
BuiltState build_state(const FamilySpec& spec);

// Spec with the ranged parameter replaced by a concrete value.
FamilySpec bind_param(const FamilySpec& spec, const std::string& key, double value);

}  // namespace spinflip
