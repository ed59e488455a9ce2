#pragma once

// Polytope files (JSON with exact rational strings), summand manifests,
// and OFF export for figures.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polycalc/errors.hpp"
#include "polycalc/polytope.hpp"
#include "polycalc/rational.hpp"

namespace polycalc {

struct PolytopeFile {
    std::string name;
    Polytope polytope;
};

inline nlohmann::json vector_to_json(const RationalVector& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& q : v) arr.push_back(to_string(q));
    return arr;
}

inline std::string polytope_to_json(const Polytope& p, const std::string& name) {
    nlohmann::json j;
    j["name"] = name;
    j["ambient_dim"] = p.ambient_dim();
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : p.vertices()) j["vertices"].push_back(vector_to_json(v));
    return j.dump(2) + "\n";
}

namespace detail {

inline std::size_t line_of_offset(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

inline std::size_t line_of_key(std::string_view text, std::string_view key) {
    const std::string quoted = "\"" + std::string(key) + "\"";
    const auto pos = text.find(quoted);
    return pos == std::string_view::npos ? 0 : line_of_offset(text, pos);
}

inline nlohmann::json parse_json(std::string_view text) {
    try {
        return nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        throw ParseError(std::string("invalid JSON: ") + e.what(), line_of_offset(text, byte));
    }
}

inline Rational rational_from_json(const nlohmann::json& value) {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long long>());
    throw ParseError("coordinates must be rational strings or integers");
}

}  // namespace detail

/// The H-representation is recomputed from the vertices, never read.
inline PolytopeFile parse_polytope_json(std::string_view text) {
    const nlohmann::json j = detail::parse_json(text);
    if (!j.is_object()) throw ParseError("polytope file must hold a JSON object", 1);
    if (!j.contains("ambient_dim") || !j["ambient_dim"].is_number_unsigned() || j["ambient_dim"].get<std::size_t>() == 0)
        throw ParseError("missing or invalid 'ambient_dim'", detail::line_of_key(text, "ambient_dim"));
    const std::size_t d = j["ambient_dim"].get<std::size_t>();
    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("'name' must be a string", detail::line_of_key(text, "name"));
        name = j["name"].get<std::string>();
    }
    const std::size_t vline = detail::line_of_key(text, "vertices");
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
        throw ParseError("missing or empty 'vertices'", vline);
    std::vector<RationalVector> pts;
    std::size_t index = 0;
    for (const auto& row : j["vertices"]) {
        if (!row.is_array() || row.size() != d)
            throw ParseError("vertex " + std::to_string(index) + " does not have " + std::to_string(d) + " coordinates",
                             vline);
        RationalVector v(d);
        for (std::size_t c = 0; c < d; ++c) {
            try {
                v[c] = detail::rational_from_json(row[c]);
            } catch (const ParseError& e) {
                throw ParseError("vertex " + std::to_string(index) + ": " + e.what(), vline);
            }
        }
        pts.push_back(std::move(v));
        ++index;
    }
    return {std::move(name), convex_hull(std::move(pts), d)};
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
}

inline PolytopeFile load_polytope(const std::string& path) {
    try {
        return parse_polytope_json(read_text_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline void save_polytope(const std::string& path, const Polytope& p, const std::string& name) {
    write_text_file(path, polytope_to_json(p, name));
}

/// {"summands": ["a.poly", ...]}; paths are relative to the manifest.
inline bool is_manifest(std::string_view text) {
    try {
        const auto j = nlohmann::json::parse(text.begin(), text.end());
        return j.is_object() && j.contains("summands");
    } catch (const nlohmann::json::parse_error&) {
        return false;
    }
}

inline std::vector<std::string> parse_manifest(std::string_view text) {
    const nlohmann::json j = detail::parse_json(text);
    if (!j.is_object() || !j.contains("summands") || !j["summands"].is_array())
        throw ParseError("manifest must hold a 'summands' array", detail::line_of_key(text, "summands"));
    std::vector<std::string> out;
    for (const auto& s : j["summands"]) {
        if (!s.is_string()) throw ParseError("manifest entries must be file names", detail::line_of_key(text, "summands"));
        out.push_back(s.get<std::string>());
    }
    return out;
}

inline std::string manifest_to_json(const std::vector<std::string>& files) {
    nlohmann::json j;
    j["summands"] = files;
    return j.dump(2) + "\n";
}

namespace detail {

inline RationalVector cross3(const RationalVector& a, const RationalVector& b) {
    return RationalVector{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// Vertex indices of a planar convex polygon, counter-clockwise seen from `normal`.
inline std::vector<std::size_t> boundary_order(const Polytope& p, std::vector<std::size_t> ids,
                                               const RationalVector& normal) {
    if (ids.size() < 3) return ids;
    RationalVector centre(3);
    for (auto i : ids) centre += p.vertex(i);
    centre *= Rational(1, static_cast<long>(ids.size()));
    const RationalVector ref = p.vertex(ids.front()) - centre;
    auto half = [&](const RationalVector& a) {
        const Rational s = dot(cross3(ref, a), normal);
        return (s > 0 || (s == 0 && dot(ref, a) > 0)) ? 0 : 1;
    };
    std::sort(ids.begin(), ids.end(), [&](std::size_t x, std::size_t y) {
        const RationalVector a = p.vertex(x) - centre;
        const RationalVector b = p.vertex(y) - centre;
        const int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        return dot(cross3(a, b), normal) > 0;
    });
    return ids;
}

}  // namespace detail

/// OFF geometry for a polytope (or polygon) in R^3. Coordinates are decimal
/// renderings of the exact rationals and are for figures only.
inline std::string polytope_to_off(const Polytope& p) {
    if (p.ambient_dim() != 3 || p.dim() < 2)
        throw PreconditionError("OFF export needs a polygon or 3-polytope in R^3");
    std::vector<std::vector<std::size_t>> faces;
    if (p.dim() == 3) {
        for (std::size_t f = 0; f < p.num_facets(); ++f) {
            std::vector<std::size_t> ids;
            for (std::size_t v = 0; v < p.num_vertices(); ++v)
                if (p.incident(v, f)) ids.push_back(v);
            faces.push_back(detail::boundary_order(p, std::move(ids), p.facet(f).normal));
        }
    } else {
        std::vector<std::size_t> ids(p.num_vertices());
        for (std::size_t v = 0; v < ids.size(); ++v) ids[v] = v;
        faces.push_back(detail::boundary_order(p, std::move(ids), p.normal_space().front()));
    }
    std::ostringstream os;
    os << "OFF\n# vertex coordinates are decimal approximations of exact rational values\n";
    os << p.num_vertices() << ' ' << faces.size() << " 0\n";
    os << std::setprecision(12);
    for (const auto& v : p.vertices()) os << to_double(v[0]) << ' ' << to_double(v[1]) << ' ' << to_double(v[2]) << '\n';
    for (const auto& f : faces) {
        os << f.size();
        for (auto i : f) os << ' ' << i;
        os << '\n';
    }
    return os.str();
}

}  // namespace polycalc
