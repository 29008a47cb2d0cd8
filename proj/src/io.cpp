#include "nerveforge/io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nerveforge/errors.h"
#include "nerveforge/rational.h"

namespace nerveforge {

using json = nlohmann::json;

namespace {

// nlohmann reports a 1-based byte offset; turn it into line:column.
[[noreturn]] void rethrow_parse(const std::string& text, const json::parse_error& e) {
    size_t offset = e.byte ? e.byte - 1 : 0;
    if (offset > text.size()) offset = text.size();
    int line = 1, col = 1;
    for (size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    std::ostringstream msg;
    msg << "line " << line << ", column " << col << ": " << e.what();
    throw ParseError(msg.str());
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        rethrow_parse(text, e);
    }
}

Rat coord_from_json(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rat((long)v.get<long long>());
    if (v.is_number_unsigned()) {
        unsigned long long u = v.get<unsigned long long>();
        return Rat((unsigned long)u);
    }
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_float())
        throw ParseError(where + ": non-integer numbers must be quoted strings to stay exact");
    throw ParseError(where + ": expected an integer or a quoted rational literal");
}

json coord_to_json(const Rat& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return json((long long)q.get_num().get_si());
    return json(rational_str(q));
}

int int_field(const json& obj, const std::string& key) {
    if (!obj.contains(key)) throw ParseError("missing field \"" + key + "\"");
    const json& v = obj[key];
    if (!v.is_number_integer() && !v.is_number_unsigned())
        throw ParseError("field \"" + key + "\" must be an integer");
    long long raw = v.get<long long>();
    if (raw < -(1LL << 31) || raw > (1LL << 31))
        throw ParseError("field \"" + key + "\" out of range");
    return (int)raw;
}

}  // namespace

PointSet parse_points(const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("point file must be a JSON object");
    int dim = int_field(doc, "dim");
    if (dim < 1) throw DimensionError("dim must be at least 1");
    if (!doc.contains("points") || !doc["points"].is_array())
        throw ParseError("field \"points\" must be an array of rows");
    PointSet ps;
    ps.dim = dim;
    int row_idx = 0;
    for (const json& row : doc["points"]) {
        std::string where = "points[" + std::to_string(row_idx) + "]";
        if (!row.is_array()) throw ParseError(where + ": expected a coordinate row");
        if ((int)row.size() != dim)
            throw DimensionError(where + ": has " + std::to_string(row.size()) +
                                 " coordinates, expected " + std::to_string(dim));
        Point p;
        for (const json& v : row) p.push_back(coord_from_json(v, where));
        ps.points.push_back(std::move(p));
        ++row_idx;
    }
    ps.validate();
    return ps;
}

PointSet load_points(const std::string& path) { return parse_points(read_file(path)); }

std::string points_json(const PointSet& ps) {
    json rows = json::array();
    for (const Point& p : ps.points) {
        json row = json::array();
        for (const Rat& q : p) row.push_back(coord_to_json(q));
        rows.push_back(std::move(row));
    }
    json doc;
    doc["dim"] = ps.dim;
    doc["points"] = std::move(rows);
    return doc.dump();
}

void save_points(const PointSet& ps, const std::string& path) { write_file(path, points_json(ps)); }

Partition parse_partition(const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("partition file must be a JSON object");
    int n_parts = int_field(doc, "n_parts");
    if (n_parts < 1) throw PartitionError("n_parts must be at least 1");
    if (!doc.contains("assignment") || !doc["assignment"].is_array())
        throw ParseError("field \"assignment\" must be an array");
    Partition part;
    part.parts.assign(n_parts, {});
    int i = 0;
    for (const json& v : doc["assignment"]) {
        if (!v.is_number_integer() && !v.is_number_unsigned())
            throw ParseError("assignment[" + std::to_string(i) + "] must be an integer");
        long long a = v.get<long long>();
        if (a < 0 || a >= n_parts)
            throw PartitionError("assignment[" + std::to_string(i) + "] out of range");
        part.parts[(size_t)a].push_back(i);
        ++i;
    }
    part.point_count = i;
    for (int k = 0; k < n_parts; ++k)
        if (part.parts[k].empty())
            throw PartitionError("part " + std::to_string(k) + " is empty");
    return part;
}

Partition load_partition(const std::string& path) { return parse_partition(read_file(path)); }

std::string partition_json(const Partition& part) {
    std::vector<int> assignment(part.point_count, -1);
    for (int k = 0; k < part.part_count(); ++k)
        for (int idx : part.parts[k]) assignment[idx] = k;
    json doc;
    doc["n_parts"] = part.part_count();
    doc["assignment"] = assignment;
    return doc.dump();
}

void save_partition(const Partition& part, const std::string& path) {
    write_file(path, partition_json(part));
}

GraphSpec parse_graph(const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("graph file must be a JSON object");
    int n = int_field(doc, "n");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw ParseError("field \"edges\" must be an array of pairs");
    std::vector<std::pair<int, int>> edges;
    int i = 0;
    for (const json& e : doc["edges"]) {
        std::string where = "edges[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError(where + " must be a pair of integers [u, v]");
        edges.emplace_back((int)e[0].get<long long>(), (int)e[1].get<long long>());
        ++i;
    }
    GraphKind kind = GraphKind::general;
    if (doc.contains("kind")) {
        if (!doc["kind"].is_string()) throw ParseError("field \"kind\" must be a string");
        std::string k = doc["kind"].get<std::string>();
        if (k == "tree") kind = GraphKind::tree;
        else if (k == "cycle") kind = GraphKind::cycle;
        else if (k == "general") kind = GraphKind::general;
        else throw ParseError("unknown graph kind \"" + k + "\"");
    }
    return GraphSpec::make(n, std::move(edges), kind);
}

GraphSpec load_graph(const std::string& path) { return parse_graph(read_file(path)); }

std::string graph_json(const GraphSpec& g) {
    json edges = json::array();
    for (auto& [u, v] : g.edges) edges.push_back(json::array({u, v}));
    json doc;
    doc["n"] = g.n;
    doc["edges"] = std::move(edges);
    switch (g.kind) {
        case GraphKind::tree: doc["kind"] = "tree"; break;
        case GraphKind::cycle: doc["kind"] = "cycle"; break;
        case GraphKind::general: doc["kind"] = "general"; break;
    }
    return doc.dump();
}

void save_graph(const GraphSpec& g, const std::string& path) { write_file(path, graph_json(g)); }

namespace {

PointSet planar_set(std::initializer_list<std::pair<long, long>> coords) {
    PointSet ps;
    ps.dim = 2;
    for (auto& [x, y] : coords) ps.points.push_back({Rat(x), Rat(y)});
    return ps;
}

}  // namespace

BuiltinConfig builtin_config(const std::string& name) {
    if (name == "p4-blocker-8") {
        return {name,
                planar_set({{222, 243}, {238, 13}, {131, 50}, {154, 105},
                            {166, 145}, {134, 106}, {174, 188}, {18, 51}}),
                "8 planar points in general position admitting no 4-part partition whose "
                "intersection graph is the path on four vertices"};
    }
    if (name == "c4-blocker-10") {
        return {name,
                planar_set({{0, 0}, {8, 5}, {18, 3}, {7, 4}, {14, 5},
                            {10, 8}, {11, 7}, {14, 17}, {11, 6}, {12, 12}}),
                "10 planar points admitting no 4-part partition whose intersection graph "
                "is the 4-cycle"};
    }
    throw UnknownConfigError("unknown builtin config \"" + name + "\"");
}

std::vector<std::string> builtin_config_names() { return {"p4-blocker-8", "c4-blocker-10"}; }

uint64_t digest_bytes(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string RunReport::json() const {
    nlohmann::json doc;
    doc["command"] = command;
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)inputs_digest);
        doc["inputs_digest"] = std::string(buf);
    }
    doc["outcome"] = outcome;
    if (partition) doc["partition"] = nlohmann::json::parse(partition_json(*partition));
    doc["verification"] = verification;
    if (!detail.empty()) doc["detail"] = detail;
    doc["elapsed_seconds"] = elapsed_seconds;
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IOError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IOError("cannot read " + path);
    return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IOError("cannot open " + path + " for writing");
    out.write(bytes.data(), (std::streamsize)bytes.size());
    out.flush();
    if (!out) throw IOError("cannot write " + path);
}

}  // namespace nerveforge
