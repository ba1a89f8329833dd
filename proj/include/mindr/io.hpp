#pragma once

#include <climits>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "mindr/instance.hpp"
#include "mindr/oracle.hpp"

namespace mindr {

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream stream(line);
    std::string token;
    while (stream >> token) {
        if (token[0] == '#') break; // rest of the line is a comment
        out.push_back(token);
    }
    return out;
}

inline int parse_int(const std::string& token, int line, const char* what) {
    char* end = nullptr;
    long value = std::strtol(token.c_str(), &end, 10);
    if (end != token.c_str() + token.size() || value < INT_MIN || value > INT_MAX) {
        throw ParseError(line, std::string("expected integer ") + what + ", got '" + token + "'");
    }
    return static_cast<int>(value);
}

inline std::int64_t parse_int64(const std::string& token, int line, const char* what) {
    char* end = nullptr;
    long long value = std::strtoll(token.c_str(), &end, 10);
    if (end != token.c_str() + token.size()) {
        throw ParseError(line, std::string("expected integer ") + what + ", got '" + token + "'");
    }
    return value;
}

inline double parse_weight(const std::string& token, int line, const char* what) {
    char* end = nullptr;
    double value = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || !std::isfinite(value) || value < 0.0) {
        throw ParseError(line, std::string("expected nonnegative number ") + what + ", got '" +
                                   token + "'");
    }
    return value;
}

inline std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

} // namespace detail

/// Parses the instance text format:
///   n <vertex_count>        exactly once, first non-comment line
///   e <u> <v> [<weight>]    edge, weight >= 0, default 1
///   s <i> <v1> <v2> ...     candidate set, indices 1..k contiguous
///   f <i> <v1> ...          fair subset of set i (optional)
///   a <v> <weight>          anchor entry (optional, repeatable)
/// '#' starts a comment. Errors carry the offending line number.
inline MindrInstance parse_instance(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    std::optional<int> vertex_count;
    std::vector<Edge> edges;
    std::map<int, std::vector<int>> sets_by_index;     // 1-based file index
    std::map<int, std::pair<int, std::vector<int>>> fair_by_index; // index -> (line, verts)
    std::vector<AnchorEntry> anchors;

    auto check_vertex = [&](int v, int at_line) {
        if (!vertex_count || v < 0 || v >= *vertex_count) {
            throw ParseError(at_line, "vertex " + std::to_string(v) + " out of range");
        }
    };

    while (std::getline(stream, line)) {
        ++line_no;
        auto tokens = detail::split_tokens(line);
        if (tokens.empty()) continue;
        const std::string& kind = tokens[0];
        if (kind == "n") {
            if (vertex_count) throw ParseError(line_no, "duplicate n record");
            if (tokens.size() != 2) throw ParseError(line_no, "n record needs one value");
            int n = detail::parse_int(tokens[1], line_no, "vertex count");
            if (n < 0) throw ParseError(line_no, "vertex count must be nonnegative");
            vertex_count = n;
        } else if (kind == "e") {
            if (!vertex_count) throw ParseError(line_no, "n record must come first");
            if (tokens.size() != 3 && tokens.size() != 4) {
                throw ParseError(line_no, "e record needs two vertices and an optional weight");
            }
            int u = detail::parse_int(tokens[1], line_no, "edge endpoint");
            int v = detail::parse_int(tokens[2], line_no, "edge endpoint");
            check_vertex(u, line_no);
            check_vertex(v, line_no);
            double w = tokens.size() == 4 ? detail::parse_weight(tokens[3], line_no, "edge weight") : 1.0;
            edges.push_back({u, v, w});
        } else if (kind == "s") {
            if (!vertex_count) throw ParseError(line_no, "n record must come first");
            if (tokens.size() < 3) throw ParseError(line_no, "s record needs an index and vertices");
            int index = detail::parse_int(tokens[1], line_no, "set index");
            if (index < 1) throw ParseError(line_no, "set index must be >= 1");
            if (sets_by_index.count(index)) {
                throw ParseError(line_no, "duplicate set index " + std::to_string(index));
            }
            std::vector<int> verts;
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                int v = detail::parse_int(tokens[i], line_no, "set vertex");
                check_vertex(v, line_no);
                verts.push_back(v);
            }
            std::sort(verts.begin(), verts.end());
            verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
            sets_by_index.emplace(index, std::move(verts));
        } else if (kind == "f") {
            if (!vertex_count) throw ParseError(line_no, "n record must come first");
            if (tokens.size() < 3) throw ParseError(line_no, "f record needs an index and vertices");
            int index = detail::parse_int(tokens[1], line_no, "fair set index");
            if (fair_by_index.count(index)) {
                throw ParseError(line_no, "duplicate fair set for index " + std::to_string(index));
            }
            std::vector<int> verts;
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                int v = detail::parse_int(tokens[i], line_no, "fair vertex");
                check_vertex(v, line_no);
                verts.push_back(v);
            }
            std::sort(verts.begin(), verts.end());
            verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
            fair_by_index.emplace(index, std::make_pair(line_no, std::move(verts)));
        } else if (kind == "a") {
            if (!vertex_count) throw ParseError(line_no, "n record must come first");
            if (tokens.size() != 3) throw ParseError(line_no, "a record needs a vertex and a weight");
            int v = detail::parse_int(tokens[1], line_no, "anchor vertex");
            check_vertex(v, line_no);
            anchors.push_back({v, detail::parse_weight(tokens[2], line_no, "anchor weight")});
        } else {
            throw ParseError(line_no, "unknown record '" + kind + "'");
        }
    }
    if (!vertex_count) throw ParseError(line_no, "missing n record");
    if (sets_by_index.empty()) throw ParseError(line_no, "instance needs at least one s record");
    int k = static_cast<int>(sets_by_index.size());
    if (sets_by_index.begin()->first != 1 || sets_by_index.rbegin()->first != k) {
        throw ParseError(line_no, "set indices must be contiguous 1..k");
    }

    MindrInstance inst;
    inst.graph = Graph(*vertex_count, std::move(edges));
    inst.sets.reserve(static_cast<std::size_t>(k));
    for (auto& [index, verts] : sets_by_index) inst.sets.push_back(std::move(verts));
    inst.fair.assign(static_cast<std::size_t>(k), {});
    for (auto& [index, entry] : fair_by_index) {
        auto& [at_line, verts] = entry;
        if (index < 1 || index > k) {
            throw ParseError(at_line, "fair set index " + std::to_string(index) + " has no set");
        }
        const auto& set = inst.sets[static_cast<std::size_t>(index - 1)];
        for (int v : verts) {
            if (!std::binary_search(set.begin(), set.end(), v)) {
                throw ParseError(at_line, "fair vertex " + std::to_string(v) +
                                              " outside set " + std::to_string(index));
            }
        }
        inst.fair[static_cast<std::size_t>(index - 1)] = std::move(verts);
    }
    inst.anchors = std::move(anchors);
    return inst;
}

/// Canonical serialization; parse(serialize(inst)) reconstructs an equal instance.
inline std::string serialize_instance(const MindrInstance& inst) {
    std::ostringstream out;
    out << "n " << inst.graph.vertex_count() << "\n";
    for (const Edge& e : inst.graph.edges()) {
        out << "e " << e.u << " " << e.v;
        if (e.w != 1.0) out << " " << detail::format_double(e.w);
        out << "\n";
    }
    for (std::size_t i = 0; i < inst.sets.size(); ++i) {
        out << "s " << i + 1;
        for (int v : inst.sets[i]) out << " " << v;
        out << "\n";
    }
    for (std::size_t i = 0; i < inst.fair.size(); ++i) {
        if (inst.fair[i].empty()) continue;
        out << "f " << i + 1;
        for (int v : inst.fair[i]) out << " " << v;
        out << "\n";
    }
    for (const AnchorEntry& z : inst.anchors) {
        out << "a " << z.vertex << " " << detail::format_double(z.weight) << "\n";
    }
    return out.str();
}

/// Solution format: one "<i> <vertex>" line per set (i = 1..k ascending),
/// then "cost <decimal>".
inline std::string serialize_solution(const Solution& sol) {
    std::ostringstream out;
    for (std::size_t i = 0; i < sol.choices.size(); ++i) {
        out << i + 1 << " " << sol.choices[i] << "\n";
    }
    out << "cost " << detail::format_double(sol.cost) << "\n";
    return out.str();
}

inline Solution parse_solution(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    Solution sol;
    bool have_cost = false;
    int expected = 1;
    while (std::getline(stream, line)) {
        ++line_no;
        auto tokens = detail::split_tokens(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "cost") {
            if (tokens.size() != 2) throw ParseError(line_no, "cost record needs one value");
            sol.cost = detail::parse_weight(tokens[1], line_no, "cost");
            have_cost = true;
        } else {
            if (have_cost) throw ParseError(line_no, "records after cost line");
            if (tokens.size() != 2) throw ParseError(line_no, "choice record needs index and vertex");
            int index = detail::parse_int(tokens[0], line_no, "set index");
            if (index != expected) {
                throw ParseError(line_no, "expected choice for set " + std::to_string(expected));
            }
            ++expected;
            sol.choices.push_back(detail::parse_int(tokens[1], line_no, "chosen vertex"));
        }
    }
    if (sol.choices.empty()) throw ParseError(line_no, "solution has no choices");
    if (!have_cost) throw ParseError(line_no, "solution missing cost line");
    return sol;
}

/// MaxCRS format: "s <i> <elements...>" set records (1..k contiguous), then
/// "c <x> <y> <capacity>" records for cross-set pairs.
inline MaxCrsInstance parse_maxcrs(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    std::map<int, std::vector<std::int64_t>> sets_by_index;
    std::vector<std::tuple<int, std::int64_t, std::int64_t, double>> caps; // line, x, y, c
    while (std::getline(stream, line)) {
        ++line_no;
        auto tokens = detail::split_tokens(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "s") {
            if (tokens.size() < 3) throw ParseError(line_no, "s record needs an index and elements");
            int index = detail::parse_int(tokens[1], line_no, "set index");
            if (index < 1) throw ParseError(line_no, "set index must be >= 1");
            if (sets_by_index.count(index)) {
                throw ParseError(line_no, "duplicate set index " + std::to_string(index));
            }
            std::vector<std::int64_t> elems;
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                elems.push_back(detail::parse_int64(tokens[i], line_no, "element"));
            }
            std::sort(elems.begin(), elems.end());
            if (std::adjacent_find(elems.begin(), elems.end()) != elems.end()) {
                throw ParseError(line_no, "repeated element in set");
            }
            sets_by_index.emplace(index, std::move(elems));
        } else if (tokens[0] == "c") {
            if (tokens.size() != 4) throw ParseError(line_no, "c record needs two elements and a capacity");
            caps.emplace_back(line_no, detail::parse_int64(tokens[1], line_no, "element"),
                              detail::parse_int64(tokens[2], line_no, "element"),
                              detail::parse_weight(tokens[3], line_no, "capacity"));
        } else {
            throw ParseError(line_no, "unknown record '" + tokens[0] + "'");
        }
    }
    if (sets_by_index.empty()) throw ParseError(line_no, "MaxCRS file needs at least one set");
    int k = static_cast<int>(sets_by_index.size());
    if (sets_by_index.begin()->first != 1 || sets_by_index.rbegin()->first != k) {
        throw ParseError(line_no, "set indices must be contiguous 1..k");
    }
    MaxCrsInstance mc;
    std::map<std::int64_t, int> owner;
    for (auto& [index, elems] : sets_by_index) {
        for (std::int64_t x : elems) {
            if (!owner.emplace(x, index).second) {
                throw ParseError(line_no, "element " + std::to_string(x) + " in two sets");
            }
        }
        mc.sets.push_back(std::move(elems));
    }
    for (const auto& [at_line, x, y, c] : caps) {
        auto ix = owner.find(x);
        auto iy = owner.find(y);
        if (ix == owner.end() || iy == owner.end()) {
            throw ParseError(at_line, "capacity references unknown element");
        }
        if (ix->second == iy->second) {
            throw ParseError(at_line, "capacity within a single set");
        }
        if (!mc.capacity.emplace(std::pair<std::int64_t, std::int64_t>(std::minmax(x, y)), c).second) {
            throw ParseError(at_line, "duplicate capacity for pair");
        }
    }
    return mc;
}

} // namespace mindr
