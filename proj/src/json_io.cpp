#include "alg2/json_io.hpp"

namespace alg2 {

using nlohmann::json;

FieldSpec field_from_json(const json& value) {
    if (value.is_string()) {
        std::string s = value.get<std::string>();
        if (s == "Q") return FieldSpec::rational();
        if (s == "F2") return FieldSpec::prime(2);
        throw bad_argument_error("unsupported field \"" + s + "\"");
    }
    if (value.is_object()) {
        if (value.size() != 1 || !value.contains("p"))
            throw parse_error("field object must be exactly {\"p\": <prime>}");
        if (!value["p"].is_number_unsigned())
            throw parse_error("field key \"p\" must be a positive integer");
        return FieldSpec::prime(value["p"].get<std::uint64_t>());
    }
    throw parse_error("field must be \"Q\", \"F2\" or {\"p\": <prime>}");
}

json field_to_json(const FieldSpec& f) {
    if (f.is_rational()) return "Q";
    if (f.p() == 2) return "F2";
    return json{{"p", f.p()}};
}

namespace {

Vector2 parse_entry(const FieldSpec& f, const json& doc, const char* key) {
    if (!doc.contains(key)) throw parse_error(std::string("table is missing key \"") + key + "\"");
    const json& e = doc[key];
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw parse_error(std::string("table entry \"") + key +
                          "\" must be an array of two scalar strings");
    return {Scalar::parse(f, e[0].get<std::string>()), Scalar::parse(f, e[1].get<std::string>())};
}

}  // namespace

Algebra algebra_from_json(const json& doc) {
    if (!doc.is_object()) throw parse_error("algebra document must be a JSON object");
    for (const auto& [key, _] : doc.items()) {
        if (key != "field" && key != "table")
            throw parse_error("unknown key \"" + key + "\" in algebra document");
    }
    if (!doc.contains("field")) throw parse_error("algebra document is missing key \"field\"");
    if (!doc.contains("table")) throw parse_error("algebra document is missing key \"table\"");
    FieldSpec f = field_from_json(doc["field"]);
    const json& table = doc["table"];
    if (!table.is_object()) throw parse_error("\"table\" must be a JSON object");
    for (const auto& [key, _] : table.items()) {
        if (key != "e1e1" && key != "e1e2" && key != "e2e1" && key != "e2e2")
            throw parse_error("unknown key \"" + key + "\" in table");
    }
    return Algebra::from_products(f, parse_entry(f, table, "e1e1"), parse_entry(f, table, "e1e2"),
                                  parse_entry(f, table, "e2e1"), parse_entry(f, table, "e2e2"));
}

Algebra algebra_from_json_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw parse_error("malformed JSON");
    return algebra_from_json(doc);
}

json algebra_to_json(const Algebra& A) {
    auto entry = [&](int i, int j) {
        Vector2 p = A.product(i, j);
        return json::array({p.x1.render(), p.x2.render()});
    };
    return json{{"field", field_to_json(A.field())},
                {"table",
                 {{"e1e1", entry(1, 1)},
                  {"e1e2", entry(1, 2)},
                  {"e2e1", entry(2, 1)},
                  {"e2e2", entry(2, 2)}}}};
}

}  // namespace alg2
