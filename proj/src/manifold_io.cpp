#include "fillcert/manifold_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fillcert {

namespace {

using nlohmann::json;

std::string at_cusp(const std::string& what, std::size_t i) {
    return what + " at cusp " + std::to_string(i);
}

Vec2 parse_vec(const json& j, const char* field, std::size_t i) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw std::invalid_argument(
            at_cusp(std::string(field) + " must be an array of two numbers", i));
    }
    return Vec2{j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

ManifoldDocument parse_manifold(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        // e.what() carries the byte offset of the failure.
        throw std::invalid_argument(std::string("manifold parse error: ") + e.what());
    }
    if (!doc.is_object()) {
        throw std::invalid_argument("manifold document must be a JSON object");
    }

    ManifoldDocument out;
    if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer()) {
        throw std::invalid_argument("missing or non-integer schema_version");
    }
    out.schema_version = doc["schema_version"].get<int>();
    if (out.schema_version != 1) {
        throw std::invalid_argument("unsupported schema_version " +
                                    std::to_string(out.schema_version) + " (expected 1)");
    }

    if (doc.contains("name")) {
        if (!doc["name"].is_string()) {
            throw std::invalid_argument("name must be a string");
        }
        out.name = doc["name"].get<std::string>();
    }

    if (!doc.contains("cusps") || !doc["cusps"].is_array() || doc["cusps"].empty()) {
        throw std::invalid_argument("cusps must be a nonempty array");
    }
    const json& cusps = doc["cusps"];
    for (std::size_t i = 0; i < cusps.size(); ++i) {
        const json& c = cusps[i];
        if (!c.is_object() || !c.contains("meridian") || !c.contains("longitude")) {
            throw std::invalid_argument(
                at_cusp("cusp entry must be {meridian, longitude}", i));
        }
        const Vec2 m = parse_vec(c["meridian"], "meridian", i);
        const Vec2 l = parse_vec(c["longitude"], "longitude", i);
        try {
            out.input.cusps.emplace_back(m, l);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(at_cusp(e.what(), i));
        }
    }

    out.input.fillings.assign(cusps.size(), std::nullopt);
    if (doc.contains("fillings")) {
        const json& f = doc["fillings"];
        if (!f.is_array() || f.size() != cusps.size()) {
            throw std::invalid_argument("fillings must be an array matching cusps");
        }
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i].is_null()) continue;
            if (!f[i].is_array() || f[i].size() != 2 || !f[i][0].is_number_integer() ||
                !f[i][1].is_number_integer()) {
                throw std::invalid_argument(
                    at_cusp("filling must be null or a pair of integers", i));
            }
            const auto p = f[i][0].get<std::int64_t>();
            const auto q = f[i][1].get<std::int64_t>();
            if (!Slope::is_primitive(p, q)) {
                throw std::invalid_argument(at_cusp("slope not primitive", i));
            }
            out.input.fillings[i] = Slope(p, q);
        }
    }

    if (!doc.contains("genus") || !doc["genus"].is_number_integer()) {
        throw std::invalid_argument("missing or non-integer genus");
    }
    out.input.genus = doc["genus"].get<int>();
    if (out.input.genus < 1) {
        throw std::invalid_argument("genus must be a positive integer");
    }
    return out;
}

ManifoldDocument load_manifold(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open manifold file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_manifold(buf.str());
}

}  // namespace fillcert
