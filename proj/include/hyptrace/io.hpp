#pragma once

// Graph files and exact-number serialization.
//
// JSON:  {"n": 5, "edges": [[0,1],[1,2]]}
// text:  a header line "n 5" followed by one "u v" pair per line; blank
//        lines and lines starting with '#' are ignored.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyptrace/errors.hpp"
#include "hyptrace/exact.hpp"
#include "hyptrace/graph.hpp"

namespace hyptrace {

using Json = nlohmann::ordered_json;

inline Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw MalformedInput("graph JSON needs keys \"n\" and \"edges\"");
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0)
        throw MalformedInput("\"n\" must be a non-negative integer");
    if (!j["edges"].is_array()) throw MalformedInput("\"edges\" must be an array");
    const auto n = j["n"].get<std::size_t>();
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
            e[0].get<long long>() < 0 || e[1].get<long long>() < 0)
            throw MalformedInput("each edge must be a pair of non-negative integers");
        pairs.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    return Graph(n, pairs);
}

inline Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

inline Graph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<std::size_t> n;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        auto bad = [&] { return MalformedInput("graph text line " + std::to_string(lineno) + ": cannot parse \"" + line + "\""); };
        if (!n) {
            std::string tag;
            long long count = -1;
            if (!(ls >> tag >> count) || tag != "n" || count < 0) throw bad();
            n = static_cast<std::size_t>(count);
        } else {
            long long u = -1, v = -1;
            if (!(ls >> u >> v) || u < 0 || v < 0) throw bad();
            pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
        std::string rest;
        if (ls >> rest) throw bad();
    }
    if (!n) throw MalformedInput("graph text has no \"n <count>\" header");
    return Graph(*n, pairs);
}

inline std::string graph_to_text(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.vertex_count() << "\n";
    for (const auto& e : g.edges()) os << e.u << " " << e.v << "\n";
    return os.str();
}

/// Parses either format; JSON is recognised by a leading '{'.
inline Graph parse_graph(const std::string& content) {
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{') {
        Json j;
        try {
            j = Json::parse(content);
        } catch (const nlohmann::json::parse_error& e) {
            throw MalformedInput(std::string("graph JSON: ") + e.what());
        }
        return graph_from_json(j);
    }
    return graph_from_text(content);
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw MalformedInput("cannot open graph file " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_graph(ss.str());
}

/// JSON unless the path ends in ".txt".
inline void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream f(path);
    if (!f) throw MalformedInput("cannot write graph file " + path);
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".txt") == 0)
        f << graph_to_text(g);
    else
        f << graph_to_json(g).dump() << "\n";
}

/// {"num": "...", "den": "..."}, always reduced.
inline Json rational_to_json(Rational q) {
    q.canonicalize();
    return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

inline Rational rational_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string() ||
        !j["den"].is_string())
        throw MalformedInput("rational JSON needs string fields \"num\" and \"den\"");
    try {
        return make_rational(BigInt(j["num"].get<std::string>()), BigInt(j["den"].get<std::string>()));
    } catch (const std::invalid_argument&) {
        throw MalformedInput("rational JSON: invalid integer string");
    }
}

}  // namespace hyptrace
