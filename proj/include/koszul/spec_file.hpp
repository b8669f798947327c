#pragma once

#include <cctype>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "digest.hpp"
#include "errors.hpp"
#include "monomial_order.hpp"
#include "parse.hpp"
#include "poly.hpp"

namespace koszul {

// A validated problem instance: n variables and an n-component holomorphic
// section, with the monomial order and the two search bounds resolved.
struct SectionSpec {
    uint32_t n = 0;
    std::vector<std::string> variables;
    std::vector<std::string> section_text;
    std::vector<Poly> section;
    MonomialOrder order;
    uint32_t degree_bound = 0;
    uint32_t power_bound = 0;
};

inline bool valid_variable_name(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return name != "i";
}

namespace detail {

inline std::pair<std::size_t, std::size_t> json_error_position(const std::string& what) {
    std::size_t line = 0, col = 0;
    auto at = what.find("at line ");
    if (at != std::string::npos)
        std::sscanf(what.c_str() + at, "at line %zu, column %zu", &line, &col);
    return {line, col};
}

inline uint32_t positive_field(const nlohmann::json& j, const std::string& key) {
    const auto& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() <= 0)
        throw SpecError("field '" + key + "' must be a positive integer");
    long long raw = v.get<long long>();
    if (raw > 1000000) throw SpecError("field '" + key + "' is too large");
    return static_cast<uint32_t>(raw);
}

}  // namespace detail

// Parses and validates the JSON section spec.  Flag overrides for the order
// and bounds are applied before defaulting.
inline SectionSpec parse_spec_text(const std::string& text,
                                   const std::optional<std::string>& order_override = {},
                                   std::optional<uint32_t> degree_override = {},
                                   std::optional<uint32_t> power_override = {}) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = detail::json_error_position(e.what());
        throw ParseError(e.what(), line, col);
    }
    if (!doc.is_object()) throw SpecError("spec must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "n" && key != "variables" && key != "section" && key != "order" &&
            key != "degree_bound" && key != "power_bound")
            throw SpecError("unknown spec field '" + key + "'");
    }
    for (const char* key : {"n", "variables", "section"})
        if (!doc.contains(key)) throw SpecError(std::string("missing spec field '") + key + "'");

    SectionSpec spec;
    {
        const auto& v = doc.at("n");
        if (!v.is_number_integer() || v.get<long long>() <= 0)
            throw SpecError("field 'n' must be a positive integer");
        long long raw = v.get<long long>();
        if (raw > 16) throw SpecError("field 'n' must be at most 16");
        spec.n = static_cast<uint32_t>(raw);
    }

    const auto& vars = doc.at("variables");
    if (!vars.is_array() || vars.size() != spec.n)
        throw SpecError("field 'variables' must list exactly n names");
    for (const auto& v : vars) {
        if (!v.is_string()) throw SpecError("variable names must be strings");
        std::string name = v.get<std::string>();
        if (!valid_variable_name(name))
            throw SpecError("invalid variable name '" + name +
                            "' (a name starts with a letter and is not 'i')");
        for (const std::string& prev : spec.variables)
            if (prev == name) throw SpecError("duplicate variable name '" + name + "'");
        spec.variables.push_back(std::move(name));
    }

    const auto& sec = doc.at("section");
    if (!sec.is_array() || sec.size() != spec.n) throw SpecError("section arity mismatch");
    for (std::size_t k = 0; k < sec.size(); ++k) {
        if (!sec[k].is_string()) throw SpecError("section entries must be strings");
        std::string src = sec[k].get<std::string>();
        try {
            spec.section.push_back(parse_poly(src, spec.variables, false));
        } catch (const ParseError& e) {
            throw ParseError("section[" + std::to_string(k) + "]: " + e.bare, e.line,
                             e.col);
        }
        spec.section_text.push_back(std::move(src));
    }

    std::string order_name = "degrevlex";
    if (doc.contains("order")) {
        if (!doc.at("order").is_string()) throw SpecError("field 'order' must be a string");
        order_name = doc.at("order").get<std::string>();
    }
    if (order_override) order_name = *order_override;
    spec.order.kind = parse_order_kind(order_name);

    uint32_t degree_sum = 0;
    for (const Poly& p : spec.section) degree_sum += p.total_degree();
    spec.degree_bound = doc.contains("degree_bound")
                            ? detail::positive_field(doc, "degree_bound")
                            : std::max<uint32_t>(1, 2 * degree_sum);
    if (degree_override) spec.degree_bound = *degree_override;
    spec.power_bound = doc.contains("power_bound") ? detail::positive_field(doc, "power_bound")
                                                   : 4 * spec.degree_bound;
    if (power_override) spec.power_bound = *power_override;
    if (spec.degree_bound == 0 || spec.power_bound == 0)
        throw SpecError("bounds must be positive");
    return spec;
}

// Reads the file and returns its raw bytes next to the digest used in
// reports; parsing is separate so a digest exists even when parsing fails.
inline std::string read_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open spec file '" + path + "'", 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace koszul
