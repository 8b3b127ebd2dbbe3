#include "spinflip/familyspec.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <vector>

#include "spinflip/catalog.hpp"

namespace spinflip {

const char* family_name(Family f) {
    switch (f) {
        case Family::bell: return "bell";
        case Family::bell_diagonal: return "bell_diagonal";
        case Family::werner: return "werner";
        case Family::cat: return "cat";
        case Family::w_state: return "w_state";
        case Family::mems: return "mems";
        case Family::mixed_cat: return "mixed_cat";
        case Family::basis_product: return "basis_product";
        case Family::fully_mixed: return "fully_mixed";
    }
    return "?";
}

double ParamRange::value_at(int i) const {
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

std::optional<std::string> FamilySpec::ranged_param() const {
    std::optional<std::string> found;
    for (const auto& [key, val] : params)
        if (val.range) {
            if (found) throw parse_error("more than one ranged parameter in spec");
            found = key;
        }
    return found;
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg + " at position " + std::to_string(pos));
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
};

std::string read_ident(Cursor& cur) {
    const std::size_t start = cur.pos;
    while (!cur.done() &&
           (std::isalnum(static_cast<unsigned char>(cur.peek())) || cur.peek() == '_'))
        ++cur.pos;
    if (cur.pos == start) cur.fail("expected identifier");
    return cur.text.substr(start, cur.pos - start);
}

// Raw value token: everything up to ',' or ')'.
std::string read_token(Cursor& cur) {
    const std::size_t start = cur.pos;
    while (!cur.done() && cur.peek() != ',' && cur.peek() != ')') ++cur.pos;
    if (cur.pos == start) cur.fail("expected value");
    return cur.text.substr(start, cur.pos - start);
}

double parse_number(const std::string& s, const Cursor& cur) {
    double out;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw parse_error("malformed number '" + s + "' at position " +
                          std::to_string(cur.pos));
    return out;
}

Family family_from_name(const std::string& name, const Cursor& cur) {
    for (Family f : {Family::bell, Family::bell_diagonal, Family::werner, Family::cat,
                     Family::w_state, Family::mems, Family::mixed_cat, Family::basis_product,
                     Family::fully_mixed})
        if (name == family_name(f)) return f;
    throw parse_error("unknown family '" + name + "' at position " + std::to_string(cur.pos));
}

const std::map<Family, std::set<std::string>>& allowed_keys() {
    static const std::map<Family, std::set<std::string>> keys = {
        {Family::bell, {"which"}},
        {Family::bell_diagonal, {"w1", "w2", "w3", "w4"}},
        {Family::werner, {"w"}},
        {Family::cat, {"n", "alpha"}},
        {Family::w_state, {"alpha", "beta", "gamma"}},
        {Family::mems, {"gamma"}},
        {Family::mixed_cat, {"n", "w"}},
        {Family::basis_product, {"bits"}},
        {Family::fully_mixed, {"n"}},
    };
    return keys;
}

ParamValue parse_value(const std::string& token, const std::string& key, const Cursor& cur) {
    ParamValue v;
    if (key == "bits" || key == "which") {
        v.text = token;
        return v;
    }
    const std::size_t c1 = token.find(':');
    if (c1 != std::string::npos) {
        const std::size_t c2 = token.find(':', c1 + 1);
        if (c2 == std::string::npos)
            throw parse_error("range needs start:stop:steps at position " +
                              std::to_string(cur.pos));
        ParamRange r{};
        r.start = parse_number(token.substr(0, c1), cur);
        r.stop = parse_number(token.substr(c1 + 1, c2 - c1 - 1), cur);
        const double steps = parse_number(token.substr(c2 + 1), cur);
        if (steps != std::floor(steps) || steps < 2.0)
            throw parse_error("range steps must be an integer >= 2");
        r.steps = static_cast<int>(steps);
        v.range = r;
        return v;
    }
    v.scalar = parse_number(token, cur);
    return v;
}

double need_scalar(const FamilySpec& spec, const std::string& key) {
    const auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw parse_error(std::string("missing parameter '") + key + "' for family " +
                          family_name(spec.family));
    if (!it->second.scalar)
        throw parse_error(std::string("parameter '") + key + "' must be a number here");
    return *it->second.scalar;
}

int need_int(const FamilySpec& spec, const std::string& key) {
    const double x = need_scalar(spec, key);
    if (x != std::floor(x)) throw parse_error(std::string("parameter '") + key + "' must be an integer");
    return static_cast<int>(x);
}

std::string need_text(const FamilySpec& spec, const std::string& key) {
    const auto it = spec.params.find(key);
    if (it == spec.params.end() || !it->second.text)
        throw parse_error(std::string("missing parameter '") + key + "'");
    return *it->second.text;
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
    Cursor cur{text};
    FamilySpec spec{};
    const std::string name = read_ident(cur);
    spec.family = family_from_name(name, cur);
    cur.expect('(');
    const auto& keys = allowed_keys().at(spec.family);
    if (cur.peek() != ')') {
        while (true) {
            const std::string key = read_ident(cur);
            if (!keys.count(key))
                throw parse_error("unknown key '" + key + "' for family " + name +
                                  " at position " + std::to_string(cur.pos));
            if (spec.params.count(key))
                throw parse_error("duplicate key '" + key + "'");
            cur.expect('=');
            spec.params[key] = parse_value(read_token(cur), key, cur);
            if (cur.peek() == ',') {
                ++cur.pos;
                continue;
            }
            break;
        }
    }
    cur.expect(')');
    if (!cur.done()) cur.fail("trailing characters");
    spec.ranged_param();  // reject multiple ranges early
    return spec;
}

FamilySpec bind_param(const FamilySpec& spec, const std::string& key, double value) {
    FamilySpec out = spec;
    ParamValue v;
    v.scalar = value;
    out.params[key] = v;
    return out;
}

namespace {
BuiltState build_state_impl(const FamilySpec& spec);
}

BuiltState build_state(const FamilySpec& spec) {
    if (spec.ranged_param())
        throw parse_error("cannot build a state from a spec with a ranged parameter");
    try {
        return build_state_impl(spec);
    } catch (const validation_error& e) {
        // Domain violations of spec parameters count as spec errors.
        throw parse_error(e.what());
    }
}

namespace {

BuiltState build_state_impl(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::bell: {
            const std::string which = need_text(spec, "which");
            BellState b;
            if (which == "phi+") b = BellState::phi_plus;
            else if (which == "phi-") b = BellState::phi_minus;
            else if (which == "psi+") b = BellState::psi_plus;
            else if (which == "psi-") b = BellState::psi_minus;
            else throw parse_error("bell: which must be one of phi+, phi-, psi+, psi-");
            StateVector psi = bell_state(b);
            return {pure_density(psi), std::move(psi)};
        }
        case Family::bell_diagonal:
            return {bell_diagonal(need_scalar(spec, "w1"), need_scalar(spec, "w2"),
                                  need_scalar(spec, "w3"), need_scalar(spec, "w4")),
                    std::nullopt};
        case Family::werner:
            return {werner(need_scalar(spec, "w")), std::nullopt};
        case Family::cat: {
            StateVector psi = cat_state(need_int(spec, "n"), need_scalar(spec, "alpha"));
            return {pure_density(psi), std::move(psi)};
        }
        case Family::w_state: {
            StateVector psi = w_state(need_scalar(spec, "alpha"), need_scalar(spec, "beta"),
                                      need_scalar(spec, "gamma"));
            return {pure_density(psi), std::move(psi)};
        }
        case Family::mems:
            return {mems(need_scalar(spec, "gamma")), std::nullopt};
        case Family::mixed_cat:
            return {mixed_cat(need_int(spec, "n"), need_scalar(spec, "w")), std::nullopt};
        case Family::basis_product: {
            const std::string bits = need_text(spec, "bits");
            std::vector<int> b;
            for (char c : bits) {
                if (c != '0' && c != '1') throw parse_error("basis_product: bits must be 0/1");
                b.push_back(c - '0');
            }
            StateVector psi = basis_product(b);
            return {pure_density(psi), std::move(psi)};
        }
        case Family::fully_mixed:
            return {fully_mixed(need_int(spec, "n")), std::nullopt};
    }
    throw parse_error("unhandled family");
}

}  // namespace

}  // namespace spinflip
