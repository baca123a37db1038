#ifndef starcolor_trace_hpp
#define starcolor_trace_hpp

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "starcolor/bigint.hpp"
#include "starcolor/coloring.hpp"
#include "starcolor/graph.hpp"
#include "starcolor/star_forest.hpp"

namespace starcolor {

enum class TraceKind { greedy_leaf, base_star_leaf, decompose };

inline const char* to_string(TraceKind k) {
    switch (k) {
    case TraceKind::greedy_leaf: return "greedy";
    case TraceKind::base_star_leaf: return "base_star";
    case TraceKind::decompose: return "decompose";
    }
    return "?";
}

/// Half-open color range [offset, offset + size), relative to the start of
/// the owning node's own range.
struct PaletteRange {
    Color offset = 0;
    Color size = 0;

    Color end() const { return offset + size; }
};

struct TraceNode;

/// One stable k-subset Y of X and the vertices A_Y outside N + v with no
/// neighbour in Y.
struct StableBlock {
    std::vector<Vertex> y;
    std::vector<Vertex> a;
    PaletteRange palette;
    std::unique_ptr<TraceNode> child;
};

/// Record of one call of the coloring recursion. All vertex lists hold labels
/// of the top-level input graph.
struct TraceNode {
    TraceKind kind = TraceKind::greedy_leaf;
    std::vector<Vertex> vertices;
    StarForest pattern;
    std::uint64_t c = 0;
    std::size_t omega = 0;
    Color palette_size = 0;

    // Leaves.
    std::vector<Vertex> order;
    std::size_t max_degree = 0;
    BigInt threshold = 0;

    // Decompose.
    Vertex v = 0;
    std::vector<Vertex> neighborhood;
    std::uint64_t clique_target = 0;
    std::vector<std::vector<Vertex>> cliques;
    std::vector<Vertex> x0;
    std::size_t t = 0;
    std::vector<StableBlock> blocks;
    std::vector<Vertex> b;
    PaletteRange center_palette;
    PaletteRange x0_palette;
    PaletteRange b_palette;
    std::unique_ptr<TraceNode> x0_child;
    std::unique_ptr<TraceNode> b_child;
};

inline nlohmann::json palette_json(const PaletteRange& p) { return nlohmann::json::array({p.offset, p.end()}); }

/// Serializes a trace. Palette ranges are [begin, end) pairs relative to the
/// node; `palette_size` is the width of the node's own range.
inline nlohmann::ordered_json to_json(const TraceNode& node) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(node.kind);
    j["vertices"] = node.vertices;
    j["pattern"] = node.pattern.stars();
    j["c"] = node.c;
    j["omega"] = node.omega;
    j["palette_size"] = node.palette_size;
    if (node.kind != TraceKind::decompose) {
        j["order"] = node.order;
        j["max_degree"] = node.max_degree;
        if (node.threshold != 0) j["threshold"] = node.threshold.str();
        return j;
    }
    j["v"] = node.v;
    j["neighborhood"] = node.neighborhood;
    j["n"] = node.clique_target;
    j["cliques"] = node.cliques;
    j["x0"] = node.x0;
    j["t"] = node.t;
    j["b"] = node.b;
    j["palettes"] = {{"center", palette_json(node.center_palette)},
                     {"x0", palette_json(node.x0_palette)},
                     {"b", palette_json(node.b_palette)}};
    auto blocks = nlohmann::ordered_json::array();
    for (const auto& blk : node.blocks) {
        nlohmann::ordered_json bj;
        bj["y"] = blk.y;
        bj["a"] = blk.a;
        bj["palette"] = palette_json(blk.palette);
        if (blk.child) bj["child"] = to_json(*blk.child);
        blocks.push_back(std::move(bj));
    }
    j["blocks"] = std::move(blocks);
    if (node.x0_child) j["x0_child"] = to_json(*node.x0_child);
    if (node.b_child) j["b_child"] = to_json(*node.b_child);
    return j;
}

/// Counts nodes of each kind in a trace.
struct TraceStats {
    std::size_t greedy = 0;
    std::size_t base_star = 0;
    std::size_t decompose = 0;
    std::size_t depth = 0;
};

inline void collect_stats(const TraceNode& node, TraceStats& stats, std::size_t depth = 1) {
    stats.depth = std::max(stats.depth, depth);
    switch (node.kind) {
    case TraceKind::greedy_leaf: ++stats.greedy; break;
    case TraceKind::base_star_leaf: ++stats.base_star; break;
    case TraceKind::decompose: ++stats.decompose; break;
    }
    if (node.x0_child) collect_stats(*node.x0_child, stats, depth + 1);
    for (const auto& blk : node.blocks)
        if (blk.child) collect_stats(*blk.child, stats, depth + 1);
    if (node.b_child) collect_stats(*node.b_child, stats, depth + 1);
}

inline TraceStats trace_stats(const TraceNode& node) {
    TraceStats s;
    collect_stats(node, s);
    return s;
}

} // namespace starcolor

#endif // starcolor_trace_hpp
