#pragma once

#include <string>

#include <json.hpp>

#include "errors.hpp"
#include "version.hpp"

namespace koszul {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson report_skeleton(const std::string& command, const std::string& digest) {
    OrderedJson doc;
    doc["tool"] = "koszul";
    doc["version"] = version_string;
    doc["command"] = command;
    doc["input_digest"] = digest;
    return doc;
}

namespace detail {

inline std::string scalar_text(const OrderedJson& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
}

inline bool scalar_array(const OrderedJson& v) {
    for (const auto& e : v)
        if (e.is_object() || e.is_array()) return false;
    return true;
}

inline std::string inline_array(const OrderedJson& v) {
    std::string out = "[";
    bool first = true;
    for (const auto& e : v) {
        if (!first) out += ", ";
        out += scalar_text(e);
        first = false;
    }
    return out + "]";
}

inline void render_node(const OrderedJson& node, std::string& out,
                        const std::string& indent);

inline void render_entry(const std::string& key, const OrderedJson& v, std::string& out,
                         const std::string& indent);

inline void render_list_item(const OrderedJson& e, std::string& out,
                             const std::string& indent) {
    if (e.is_object()) {
        bool first = true;
        for (const auto& [k, v] : e.items()) {
            if (first) {
                if (v.is_object() || (v.is_array() && !scalar_array(v))) {
                    out += indent + "-\n";
                    render_entry(k, v, out, indent + "  ");
                } else if (v.is_array()) {
                    out += indent + "- " + k + ": " + inline_array(v) + "\n";
                } else {
                    out += indent + "- " + k + ": " + scalar_text(v) + "\n";
                }
                first = false;
            } else {
                render_entry(k, v, out, indent + "  ");
            }
        }
        if (first) out += indent + "- {}\n";
    } else if (e.is_array() && scalar_array(e)) {
        out += indent + "- " + inline_array(e) + "\n";
    } else if (e.is_array()) {
        out += indent + "-\n";
        for (const auto& x : e) render_list_item(x, out, indent + "  ");
    } else {
        out += indent + "- " + scalar_text(e) + "\n";
    }
}

inline void render_entry(const std::string& key, const OrderedJson& v, std::string& out,
                         const std::string& indent) {
    if (v.is_object()) {
        out += indent + key + ":\n";
        render_node(v, out, indent + "  ");
    } else if (v.is_array() && !scalar_array(v)) {
        out += indent + key + ":\n";
        for (const auto& e : v) render_list_item(e, out, indent + "  ");
    } else if (v.is_array()) {
        out += indent + key + ": " + inline_array(v) + "\n";
    } else {
        out += indent + key + ": " + scalar_text(v) + "\n";
    }
}

inline void render_node(const OrderedJson& node, std::string& out,
                        const std::string& indent) {
    for (const auto& [key, value] : node.items()) render_entry(key, value, out, indent);
}

}  // namespace detail

// Text rendering mirrors the structured document field for field, so the two
// formats stay in lockstep and both are deterministic.
inline std::string render_text(const OrderedJson& doc) {
    std::string out;
    detail::render_node(doc, out, "");
    return out;
}

inline std::string render_report(const OrderedJson& doc, const std::string& format) {
    if (format == "json") return doc.dump(2) + "\n";
    internal_check(format == "text", "unknown report format");
    return render_text(doc);
}

}  // namespace koszul
