#include "conic2bezier/scene.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <set>

#include "conic2bezier/errors.hpp"
#include "json.hpp"

namespace conic2bezier {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min(byte, text.size());
    for (std::size_t i = 0; i + 1 < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.contains(key)) {
            throw ValidationError(where.empty() ? key : where + "." + key, "unknown member");
        }
    }
}

double read_number(const json& v, const std::string& field) {
    if (!v.is_number()) {
        throw ValidationError(field, "expected a number");
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
        throw ValidationError(field, "number must be finite");
    }
    return d;
}

Point2 read_point(const json& v, const std::string& field) {
    if (!v.is_array() || v.size() != 2) {
        throw ValidationError(field, "expected an array [x, y]");
    }
    return {read_number(v[0], field + "[0]"), read_number(v[1], field + "[1]")};
}

const json& require_member(const json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw ValidationError(where.empty() ? std::string(key) : where + "." + key, "missing required member");
    }
    return *it;
}

AffineMap2 read_transform(const json& v, const std::string& field) {
    if (!v.is_array() || v.size() != 6) {
        throw ValidationError(field, "expected an array of six numbers [m11, m21, m12, m22, tx, ty]");
    }
    double m[6];
    for (std::size_t i = 0; i < 6; ++i) {
        m[i] = read_number(v[i], field + "[" + std::to_string(i) + "]");
    }
    // SVG matrix(a, b, c, d, e, f) order.
    AffineMap2 t;
    t.m11 = m[0];
    t.m21 = m[1];
    t.m12 = m[2];
    t.m22 = m[3];
    t.tx = m[4];
    t.ty = m[5];
    return t;
}

bool is_attribute_name(const std::string& key) {
    if (key.empty() || !std::isalpha(static_cast<unsigned char>(key.front()))) {
        return false;
    }
    for (char ch : key) {
        const auto c = static_cast<unsigned char>(ch);
        if (!std::isalnum(c) && ch != '-' && ch != '_' && ch != ':') {
            return false;
        }
    }
    return true;
}

std::map<std::string, std::string> read_style(const json& v, const std::string& field) {
    if (!v.is_object()) {
        throw ValidationError(field, "expected an object of strings");
    }
    std::map<std::string, std::string> style;
    for (const auto& [key, value] : v.items()) {
        const std::string name = field + "." + key;
        if (!is_attribute_name(key) || key == "d") {
            throw ValidationError(name, "not a usable attribute name");
        }
        if (!value.is_string()) {
            throw ValidationError(name, "expected a string");
        }
        style.emplace(key, value.get<std::string>());
    }
    return style;
}

SceneItem read_item(const json& v, const std::string& where) {
    if (!v.is_object()) {
        throw ValidationError(where, "expected an object");
    }
    reject_unknown_keys(v, {"kind", "C", "P", "Q", "astart", "asweep", "transform", "style"}, where);

    SceneItem item;
    const json& kind = require_member(v, "kind", where);
    if (!kind.is_string()) {
        throw ValidationError(where + ".kind", "expected a string");
    }
    const std::string k = kind.get<std::string>();
    if (k == "ellipse") {
        item.kind = ItemKind::Ellipse;
    } else if (k == "arc") {
        item.kind = ItemKind::Arc;
    } else if (k == "pie") {
        item.kind = ItemKind::Pie;
    } else {
        throw ValidationError(where + ".kind", "must be \"ellipse\", \"arc\" or \"pie\"");
    }

    item.ellipse.C = read_point(require_member(v, "C", where), where + ".C");
    item.ellipse.P = read_point(require_member(v, "P", where), where + ".P");
    item.ellipse.Q = read_point(require_member(v, "Q", where), where + ".Q");

    if (item.kind == ItemKind::Ellipse) {
        // Angles carry no meaning for a full ellipse but must still be numbers.
        for (const char* key : {"astart", "asweep"}) {
            if (const auto it = v.find(key); it != v.end()) {
                read_number(*it, where + "." + key);
            }
        }
    } else {
        item.astart = read_number(require_member(v, "astart", where), where + ".astart");
        item.asweep = read_number(require_member(v, "asweep", where), where + ".asweep");
    }

    if (const auto it = v.find("transform"); it != v.end()) {
        item.transform = read_transform(*it, where + ".transform");
    }
    if (const auto it = v.find("style"); it != v.end()) {
        item.style = read_style(*it, where + ".style");
    }
    return item;
}

}  // namespace

Scene parse_scene(std::string_view text, int default_precision) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_and_column(text, e.byte);
        throw ParseError("malformed scene document", line, column);
    } catch (const json::out_of_range&) {
        throw ValidationError("document", "number out of double range");
    }

    if (!doc.is_object()) {
        throw ValidationError("document", "expected a JSON object");
    }
    reject_unknown_keys(doc, {"width", "height", "precision", "items"}, "");

    Scene scene;
    scene.width = read_number(require_member(doc, "width", ""), "width");
    scene.height = read_number(require_member(doc, "height", ""), "height");
    if (scene.width <= 0.0) {
        throw ValidationError("width", "must be positive");
    }
    if (scene.height <= 0.0) {
        throw ValidationError("height", "must be positive");
    }

    scene.precision = default_precision;
    if (const auto it = doc.find("precision"); it != doc.end()) {
        if (!it->is_number_integer()) {
            throw ValidationError("precision", "expected an integer");
        }
        const auto p = it->get<long long>();
        if (p < kMinPrecision || p > kMaxPrecision) {
            throw ValidationError("precision", "must lie in [1, 12]");
        }
        scene.precision = static_cast<int>(p);
    }
    if (scene.precision < kMinPrecision || scene.precision > kMaxPrecision) {
        throw ValidationError("precision", "must lie in [1, 12]");
    }

    const json& items = require_member(doc, "items", "");
    if (!items.is_array()) {
        throw ValidationError("items", "expected an array");
    }
    scene.items.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        scene.items.push_back(read_item(items[i], "items[" + std::to_string(i) + "]"));
    }
    return scene;
}

int precision_from_environment() {
    const char* raw = std::getenv("CONIC2BEZIER_PRECISION");
    if (raw == nullptr || *raw == '\0') {
        return kDefaultPrecision;
    }
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < kMinPrecision || v > kMaxPrecision) {
        throw ValidationError("CONIC2BEZIER_PRECISION", "must be an integer in [1, 12]");
    }
    return static_cast<int>(v);
}

}  // namespace conic2bezier
