#include "support/schema_check.hpp"

#include <fstream>

namespace k25::testing {

namespace {

using nlohmann::json;

bool type_matches(const std::string& type, const json& doc) {
    if (type == "object") return doc.is_object();
    if (type == "array") return doc.is_array();
    if (type == "string") return doc.is_string();
    if (type == "integer") return doc.is_number_integer();
    if (type == "number") return doc.is_number();
    if (type == "boolean") return doc.is_boolean();
    if (type == "null") return doc.is_null();
    return false;
}

void check(const json& root, const json& schema, const json& doc, const std::string& where,
           std::vector<std::string>& out) {
    if (schema.contains("$ref")) {
        const std::string ref = schema["$ref"].get<std::string>();
        const std::string prefix = "#/definitions/";
        if (ref.rfind(prefix, 0) != 0) {
            out.push_back(where + ": unsupported $ref '" + ref + "'");
            return;
        }
        const std::string name = ref.substr(prefix.size());
        if (!root.contains("definitions") || !root["definitions"].contains(name)) {
            out.push_back(where + ": unresolved $ref '" + ref + "'");
            return;
        }
        check(root, root["definitions"][name], doc, where, out);
        return;
    }

    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(t.get<std::string>(), doc);
        } else {
            for (const auto& option : t)
                if (type_matches(option.get<std::string>(), doc)) ok = true;
        }
        if (!ok) {
            out.push_back(where + ": type mismatch, got " + std::string(doc.type_name()));
            return;
        }
    }

    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& option : schema["enum"])
            if (option == doc) ok = true;
        if (!ok) out.push_back(where + ": value not in enum");
    }

    if (doc.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!doc.contains(key.get<std::string>()))
                    out.push_back(where + ": missing required key '" + key.get<std::string>() +
                                  "'");
        const json props =
            schema.contains("properties") ? schema["properties"] : json::object();
        for (const auto& [key, value] : doc.items()) {
            if (props.contains(key)) {
                check(root, props[key], value, where + "." + key, out);
            } else if (schema.contains("additionalProperties") &&
                       schema["additionalProperties"].is_boolean() &&
                       !schema["additionalProperties"].get<bool>()) {
                out.push_back(where + ": unexpected key '" + key + "'");
            }
        }
    }

    if (doc.is_array() && schema.contains("items")) {
        std::size_t i = 0;
        for (const auto& item : doc) {
            check(root, schema["items"], item, where + "[" + std::to_string(i) + "]", out);
            ++i;
        }
    }
}

} // namespace

std::vector<std::string> schema_violations(const json& schema, const json& document) {
    std::vector<std::string> out;
    check(schema, schema, document, "$", out);
    return out;
}

std::vector<std::string> validate_against_schema_file(const std::string& schema_path,
                                                      const json& document) {
    std::ifstream in(schema_path);
    if (!in) return {"cannot open schema file " + schema_path};
    json schema;
    in >> schema;
    auto out = schema_violations(schema, document);
    for (auto& v : out) v = schema_path + " " + v;
    return out;
}

} // namespace k25::testing
