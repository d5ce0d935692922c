#pragma once

#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cogrowth/cover.hpp"
#include "cogrowth/graph.hpp"
#include "cogrowth/growth.hpp"
#include "cogrowth/identities.hpp"
#include "cogrowth/numeric.hpp"
#include "cogrowth/tree.hpp"
#include "cogrowth/vertex_function.hpp"
#include "cogrowth/walks.hpp"

namespace cogrowth {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

// --------------------------- graph files ----------------------------------
// {"vertex_count": n, "edges": [[u,v],...], "side": ["U"|"W",...]?}

inline Json graph_to_json(const Graph& g) {
    Json j;
    j["vertex_count"] = g.vertex_count();
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (g.side) {
        Json side = Json::array();
        for (Side s : *g.side) side.push_back(s == Side::U ? "U" : "W");
        j["side"] = std::move(side);
    }
    return j;
}

inline Graph graph_from_json(const Json& j) {
    int n = j.at("vertex_count").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    std::optional<std::vector<Side>> side;
    if (j.contains("side")) {
        std::vector<Side> s;
        for (const auto& lbl : j.at("side")) {
            std::string t = lbl.get<std::string>();
            if (t != "U" && t != "W") throw std::invalid_argument("side label must be U or W");
            s.push_back(t == "U" ? Side::U : Side::W);
        }
        side = std::move(s);
    }
    return build_graph(n, edges, std::move(side));
}

// ------------------------- function files ---------------------------------
// {"kind": "dense", "values": [...]} | {"kind": "radial", "profile": [...]}
// | {"kind": "geometric", "base": "1.2"} | {"kind": "indicator", "vertices": [..]}
// All numerics are decimal strings.

struct FunctionSpec {
    enum class Kind { dense, radial, geometric, indicator };
    Kind kind = Kind::dense;
    std::vector<Rational> values;  // dense values or radial profile
    Rational base = 0;             // geometric
    std::vector<int> vertices;     // indicator

    bool is_radial() const { return kind == Kind::radial || kind == Kind::geometric; }

    RadialProfile to_radial_profile() const {
        if (kind == Kind::radial) return RadialProfile::shells(values);
        if (kind == Kind::geometric) return RadialProfile::geometric_family(base);
        throw std::invalid_argument("function is not radial");
    }

    // Expands to per-vertex weights; radial kinds are taken about `center`.
    VertexFunction to_vertex_function(const Graph& g, int center = 0) const {
        switch (kind) {
            case Kind::dense: {
                if (static_cast<int>(values.size()) != g.vertex_count())
                    throw std::invalid_argument("dense function length != vertex count");
                VertexFunction f;
                f.values = values;
                f.check_non_negative();
                return f;
            }
            case Kind::indicator:
                return VertexFunction::indicator(g.vertex_count(), vertices);
            case Kind::radial:
            case Kind::geometric: {
                RadialProfile p = to_radial_profile();
                auto dist = bfs_distances(g, center);
                VertexFunction f = VertexFunction::zero(g.vertex_count());
                for (int v = 0; v < g.vertex_count(); ++v)
                    if (dist[static_cast<std::size_t>(v)] >= 0)
                        f.values[static_cast<std::size_t>(v)] =
                            p.value_at(dist[static_cast<std::size_t>(v)]);
                return f;
            }
        }
        throw std::logic_error("unreachable");
    }
};

inline Json function_spec_to_json(const FunctionSpec& f) {
    Json j;
    switch (f.kind) {
        case FunctionSpec::Kind::dense: {
            j["kind"] = "dense";
            Json vals = Json::array();
            for (const auto& v : f.values) vals.push_back(to_decimal_string(v));
            j["values"] = std::move(vals);
            break;
        }
        case FunctionSpec::Kind::radial: {
            j["kind"] = "radial";
            Json vals = Json::array();
            for (const auto& v : f.values) vals.push_back(to_decimal_string(v));
            j["profile"] = std::move(vals);
            break;
        }
        case FunctionSpec::Kind::geometric:
            j["kind"] = "geometric";
            j["base"] = to_decimal_string(f.base);
            break;
        case FunctionSpec::Kind::indicator:
            j["kind"] = "indicator";
            j["vertices"] = f.vertices;
            break;
    }
    return j;
}

inline FunctionSpec function_spec_from_json(const Json& j) {
    FunctionSpec f;
    std::string kind = j.at("kind").get<std::string>();
    auto parse_list = [](const Json& arr) {
        std::vector<Rational> out;
        for (const auto& v : arr) out.push_back(parse_decimal(v.get<std::string>()));
        return out;
    };
    if (kind == "dense") {
        f.kind = FunctionSpec::Kind::dense;
        f.values = parse_list(j.at("values"));
    } else if (kind == "radial") {
        f.kind = FunctionSpec::Kind::radial;
        f.values = parse_list(j.at("profile"));
    } else if (kind == "geometric") {
        f.kind = FunctionSpec::Kind::geometric;
        f.base = parse_decimal(j.at("base").get<std::string>());
    } else if (kind == "indicator") {
        f.kind = FunctionSpec::Kind::indicator;
        f.vertices = j.at("vertices").get<std::vector<int>>();
    } else {
        throw std::invalid_argument("unknown function kind '" + kind + "'");
    }
    return f;
}

// Inline shorthand for CLI flags: "ones", "geometric:1.2", "radial:0,0,1",
// "indicator:2,5", "dense:1,0.5,...".
inline FunctionSpec parse_function_spec(const std::string& text) {
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> parts;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, sep)) parts.push_back(item);
        return parts;
    };
    if (text == "ones") {
        FunctionSpec f;
        f.kind = FunctionSpec::Kind::geometric;
        f.base = 1;
        return f;
    }
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("bad function spec '" + text + "'");
    std::string kind = text.substr(0, colon);
    std::string payload = text.substr(colon + 1);
    FunctionSpec f;
    if (kind == "geometric") {
        f.kind = FunctionSpec::Kind::geometric;
        f.base = parse_decimal(payload);
    } else if (kind == "radial" || kind == "dense") {
        f.kind = kind == "radial" ? FunctionSpec::Kind::radial : FunctionSpec::Kind::dense;
        for (const auto& part : split(payload, ',')) f.values.push_back(parse_decimal(part));
    } else if (kind == "indicator") {
        f.kind = FunctionSpec::Kind::indicator;
        for (const auto& part : split(payload, ',')) f.vertices.push_back(std::stoi(part));
    } else {
        throw std::invalid_argument("unknown function kind '" + kind + "'");
    }
    return f;
}

// -------------------------- count series files -----------------------------
// JSON mirror of the CSV columns r, value, log_value, exact_flag.

inline Json series_to_json(const CountSeries& s) {
    Json j;
    j["kind"] = walk_kind_name(s.kind);
    j["base"] = s.base;
    j["r_max"] = s.r_max;
    j["provenance"] = s.provenance;
    if (s.function_mass) j["function_mass"] = *s.function_mass;
    Json entries = Json::array();
    for (int r = 0; r <= s.r_max; ++r) {
        Json e;
        e["r"] = r;
        if (s.has_exact())
            e["value"] = to_decimal_string(s.exact_at(r));
        double lv = s.log_at(r);
        if (lv == -std::numeric_limits<double>::infinity())
            e["log_value"] = nullptr;
        else
            e["log_value"] = lv;
        e["exact"] = static_cast<bool>(s.exact_flags[static_cast<std::size_t>(r)]);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

inline CountSeries series_from_json(const Json& j) {
    CountSeries s;
    std::string kind = j.at("kind").get<std::string>();
    if (kind != "a" && kind != "b") throw std::invalid_argument("series kind must be a or b");
    s.kind = kind == "a" ? WalkKind::nbw : WalkKind::walk;
    s.base = j.at("base").get<int>();
    s.r_max = j.at("r_max").get<int>();
    s.provenance = j.value("provenance", std::string());
    if (j.contains("function_mass")) s.function_mass = j.at("function_mass").get<double>();
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != s.r_max + 1)
        throw std::invalid_argument("series entries do not match r_max");
    bool any_value = false;
    for (const auto& e : entries) {
        if (e.contains("value")) any_value = true;
    }
    for (const auto& e : entries) {
        if (any_value) {
            if (!e.contains("value"))
                throw std::invalid_argument("series mixes exact and non-exact rows");
            s.exact.push_back(parse_decimal(e.at("value").get<std::string>()));
        }
        if (e.at("log_value").is_null())
            s.logvals.push_back(-std::numeric_limits<double>::infinity());
        else
            s.logvals.push_back(e.at("log_value").get<double>());
        s.exact_flags.push_back(e.at("exact").get<bool>() ? 1 : 0);
    }
    return s;
}

inline std::string series_to_csv(const CountSeries& s) {
    std::string out = "r,value,log_value,exact_flag\n";
    for (int r = 0; r <= s.r_max; ++r) {
        out += std::to_string(r);
        out += ',';
        if (s.has_exact()) out += to_decimal_string(s.exact_at(r));
        out += ',';
        double lv = s.log_at(r);
        out += (lv == -std::numeric_limits<double>::infinity()) ? "-inf"
                                                                : detail::format_double(lv);
        out += ',';
        out += s.exact_flags[static_cast<std::size_t>(r)] ? '1' : '0';
        out += '\n';
    }
    return out;
}

inline CountSeries series_from_csv(const std::string& text, WalkKind kind = WalkKind::walk) {
    CountSeries s;
    s.kind = kind;
    std::stringstream ss(text);
    std::string line;
    if (!std::getline(ss, line)) throw std::invalid_argument("empty CSV");
    bool any_value = false, first = true;
    std::vector<std::string> values;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::string r_s, value_s, log_s, exact_s;
        std::getline(ls, r_s, ',');
        std::getline(ls, value_s, ',');
        std::getline(ls, log_s, ',');
        std::getline(ls, exact_s, ',');
        if (first) {
            any_value = !value_s.empty();
            first = false;
        }
        if (any_value != !value_s.empty())
            throw std::invalid_argument("CSV mixes exact and non-exact rows");
        values.push_back(value_s);
        s.logvals.push_back(log_s == "-inf" ? -std::numeric_limits<double>::infinity()
                                            : std::stod(log_s));
        s.exact_flags.push_back(exact_s == "1" ? 1 : 0);
    }
    if (s.logvals.empty()) throw std::invalid_argument("CSV has no rows");
    s.r_max = static_cast<int>(s.logvals.size()) - 1;
    if (any_value)
        for (const auto& v : values) s.exact.push_back(parse_decimal(v));
    return s;
}

// "r,log_value" rows for external plotting.
inline std::string series_to_plot_csv(const CountSeries& s) {
    std::string out = "r,log_value\n";
    for (int r = 0; r <= s.r_max; ++r) {
        double lv = s.log_at(r);
        out += std::to_string(r);
        out += ',';
        out += (lv == -std::numeric_limits<double>::infinity()) ? "-inf"
                                                                : detail::format_double(lv);
        out += '\n';
    }
    return out;
}

// ------------------------------ reports -----------------------------------

inline Json estimate_to_json(const GrowthEstimate& est, const std::string& value_name) {
    Json j;
    j[value_name] = est.value;
    j["method"] = estimate_method_name(est.method);
    j["window"] = {est.window.lo, est.window.hi};
    j["residual"] = est.residual;
    return j;
}

inline Json identity_report_to_json(const IdentityReport& rep) {
    Json j;
    j["identity"] = rep.identity;
    Json params;
    for (const auto& [k, v] : rep.params) params[k] = v;
    j["params"] = std::move(params);
    j["lhs"] = rep.lhs;
    j["rhs"] = rep.rhs;
    j["abs_gap"] = rep.abs_gap;
    j["rel_gap"] = rep.rel_gap;
    j["terms_used"] = rep.terms_used;
    j["tail_bound"] = rep.tail_bound;
    j["check_tolerance"] = rep.check_tolerance;
    j["passed"] = rep.passed;
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

// ------------------------------ file helpers -------------------------------

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

inline Json load_json(const std::string& path) { return Json::parse(read_text_file(path)); }

inline void save_json(const std::string& path, const Json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

// Sniffs JSON vs CSV by the first non-space byte.
inline CountSeries load_series(const std::string& path) {
    std::string text = read_text_file(path);
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{')
        return series_from_json(Json::parse(text));
    return series_from_csv(text);
}

}  // namespace cogrowth
