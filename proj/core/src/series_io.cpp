#include "harmsub/series_io.hpp"

#include <json.hpp>

namespace harmsub {

namespace {

using nlohmann::json;

json coeffs_to_json(const std::vector<Complex>& c) {
    json arr = json::array();
    for (const Complex& v : c)
        arr.push_back(json::array({v.real(), v.imag()}));
    return arr;
}

std::vector<Complex> coeffs_from_json(const json& arr, const char* which) {
    if (!arr.is_array())
        throw Error(std::string("series document: \"") + which +
                    "\" is not an array");
    std::vector<Complex> out;
    out.reserve(arr.size());
    for (const json& e : arr) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
            !e[1].is_number())
            throw Error(std::string("series document: \"") + which +
                        "\" entries must be [re, im] number pairs");
        out.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return out;
}

} // namespace

std::string serialize(const HarmonicSeries& f) {
    json doc;
    doc["a"] = coeffs_to_json(f.analytic_coeffs());
    doc["b"] = coeffs_to_json(f.coanalytic_coeffs());
    return doc.dump();
}

HarmonicSeries deserialize(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
    if (!doc.is_object() || !doc.contains("a") || !doc.contains("b"))
        throw Error("series document: expected object with \"a\" and \"b\"");
    // The HarmonicSeries constructor enforces non-empty, finite coefficients.
    return HarmonicSeries(coeffs_from_json(doc["a"], "a"),
                          coeffs_from_json(doc["b"], "b"));
}

} // namespace harmsub
