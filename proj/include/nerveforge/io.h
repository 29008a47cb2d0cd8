#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nerveforge/geometry.h"
#include "nerveforge/graph.h"
#include "nerveforge/partition.h"

namespace nerveforge {

// Point files: {"dim": d, "points": [[x, y, ...], ...]}. Coordinates are JSON
// integers or quoted literals ("3/7", "0.25", "-1.5e2"), converted exactly.
// Raw fractional JSON numbers are rejected so nothing is silently rounded.
PointSet parse_points(const std::string& text);
PointSet load_points(const std::string& path);
std::string points_json(const PointSet& ps);
void save_points(const PointSet& ps, const std::string& path);

// Partition files: {"n_parts": k, "assignment": [part index per point]}.
Partition parse_partition(const std::string& text);
Partition load_partition(const std::string& path);
std::string partition_json(const Partition& part);
void save_partition(const Partition& part, const std::string& path);

// Graph files: {"n": k, "edges": [[u, v], ...]} with an optional
// "kind": "tree" | "cycle" | "general" tag that is validated on load.
GraphSpec parse_graph(const std::string& text);
GraphSpec load_graph(const std::string& path);
std::string graph_json(const GraphSpec& g);
void save_graph(const GraphSpec& g, const std::string& path);

struct BuiltinConfig {
    std::string name;
    PointSet points;
    std::string note;
};

// Named reference point sets: "p4-blocker-8" (8 planar points admitting no
// 4-part partition whose intersection graph is the path on four vertices) and
// "c4-blocker-10" (10 planar points likewise blocking the 4-cycle).
BuiltinConfig builtin_config(const std::string& name);
std::vector<std::string> builtin_config_names();

// FNV-1a over the raw bytes.
uint64_t digest_bytes(const std::string& bytes);

// One record per CLI run. The verification field is always recomputed from
// the produced partition, never copied from the constructing routine.
struct RunReport {
    std::string command;
    uint64_t inputs_digest = 0;
    std::string outcome;  // "ok", "not-found", "error"
    std::optional<Partition> partition;
    std::string verification = "n/a";  // "pass", "fail", "n/a"
    std::string detail;
    double elapsed_seconds = 0.0;
    std::string json() const;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

}  // namespace nerveforge
