#ifndef starcolor_colorer_hpp
#define starcolor_colorer_hpp

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "starcolor/bigint.hpp"
#include "starcolor/coloring.hpp"
#include "starcolor/errors.hpp"
#include "starcolor/exponent.hpp"
#include "starcolor/graph.hpp"
#include "starcolor/oracles.hpp"
#include "starcolor/star_forest.hpp"
#include "starcolor/trace.hpp"

namespace starcolor {

/// Inputs above this order skip the H-freeness pre-check unless it is
/// requested explicitly.
inline constexpr std::size_t auto_check_limit = 60;

struct ColorerConfig {
    /// Unset: check iff the graph has at most auto_check_limit vertices.
    std::optional<bool> check_h_free;
    /// Lowers the degree threshold omega^c above which a vertex is split off.
    /// The split additionally needs degree >= omega^(k+2) so that the n
    /// cliques inside the neighbourhood exist.
    std::optional<std::uint64_t> degree_threshold_override;
    /// Maximum number of stable k-subsets of X enumerated at one node.
    std::uint64_t enumeration_cap = 1'000'000;
};

/// The input contains the excluded pattern; `embedding` is an induced copy.
class NotHFree : public std::runtime_error {
public:
    explicit NotHFree(Embedding e)
        : std::runtime_error("input graph is not H-free"), embedding_(std::move(e)) {}

    const Embedding& embedding() const { return embedding_; }

private:
    Embedding embedding_;
};

struct ColoringResult {
    Coloring coloring;
    TraceNode trace;
    ExponentCertificate certificate;
    std::size_t omega = 0;
    /// True when H-freeness was verified, so colors_used <= omega^c is
    /// guaranteed and was asserted.
    bool bound_guaranteed = false;
};

namespace detail {

/// Stable k-subsets of `pool` (ascending) in lexicographic order.
inline std::vector<std::vector<Vertex>> stable_subsets(const Graph& g, const std::vector<Vertex>& pool, std::size_t k,
                                                       std::uint64_t cap) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> current;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (current.size() == k) {
            if (out.size() == cap) {
                throw EnumerationCapExceeded("stable " + std::to_string(k) + "-subsets of a " +
                                             std::to_string(pool.size()) + "-vertex clique union exceed cap " +
                                             std::to_string(cap));
            }
            out.push_back(current);
            return;
        }
        for (std::size_t i = start; i + (k - current.size()) <= pool.size(); ++i) {
            const Vertex u = pool[i];
            bool ok = true;
            for (Vertex w : current) {
                if (g.adjacent(u, w)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            current.push_back(u);
            self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

class Colorer {
public:
    Colorer(const StarForest& h, const ColorerConfig& cfg, bool guaranteed) : cfg_(cfg), guaranteed_(guaranteed) {
        const auto& stars = h.stars();
        for (std::size_t i = 0; i <= stars.size(); ++i) {
            patterns_.emplace_back(std::vector<int>(stars.begin() + static_cast<std::ptrdiff_t>(i), stars.end()));
            exponents_.push_back(compute_exponent(patterns_.back()).final_c);
        }
    }

    /// Colors g (whose vertices carry top-level `labels`) for the pattern
    /// suffix starting at `level`. Colors are relative to the node's range.
    Coloring color(const Graph& g, std::span<const Vertex> labels, std::size_t level, std::size_t omega,
                   TraceNode& node) {
        node.vertices.assign(labels.begin(), labels.end());
        node.pattern = patterns_[level];
        node.c = exponents_[level];
        node.omega = omega;
        node.max_degree = g.max_degree();

        const std::size_t stars_left = patterns_[level].component_count();
        if (g.order() == 0 || omega <= 1) return greedy_leaf(g, labels, node, natural_order(g.order()));
        if (stars_left == 0) {
            if (guaranteed_) fail("nonempty graph claimed free of the empty pattern", node);
            return greedy_leaf(g, labels, node, natural_order(g.order()));
        }

        const int k = patterns_[level].stars().front();
        if (stars_left == 1) return base_star(g, labels, k, node);

        const std::uint64_t c = exponents_[level];
        const BigInt genuine = color_bound(omega, c);
        BigInt threshold = genuine;
        if (cfg_.degree_threshold_override) threshold = std::min(threshold, BigInt(*cfg_.degree_threshold_override));
        const BigInt clique_target = ipow(BigInt(omega), static_cast<std::uint64_t>(k) + 1);
        node.threshold = threshold;

        const BigInt max_degree = g.max_degree();
        if (max_degree < threshold || max_degree < clique_target * omega) {
            Coloring col = greedy_leaf(g, labels, node, natural_order(g.order()));
            if (guaranteed_ && BigInt(col.palette_size) > genuine) {
                fail("greedy leaf exceeds omega^c colors", node);
            }
            return col;
        }
        return decompose(g, labels, level, k, static_cast<std::uint64_t>(clique_target), node);
    }

private:
    [[noreturn]] static void fail(const std::string& what, const TraceNode& node) {
        throw InvariantViolation(what, to_json(node).dump());
    }

    static Coloring greedy_leaf(const Graph& g, std::span<const Vertex> labels, TraceNode& node,
                                const std::vector<Vertex>& order) {
        node.kind = TraceKind::greedy_leaf;
        node.order = relabel(order, labels);
        Coloring col = greedy_color(g, order);
        node.palette_size = col.palette_size;
        return col;
    }

    // Single star K_{1,k}: every neighbourhood has no stable k-set and clique
    // number below omega, so max degree <= ramsey_bound(omega - 1, k) < omega^k
    // and first-fit in degeneracy order stays within omega^k colors.
    Coloring base_star(const Graph& g, std::span<const Vertex> labels, int k, TraceNode& node) {
        node.threshold = color_bound(node.omega, static_cast<std::uint64_t>(k));
        if (guaranteed_ && BigInt(g.max_degree()) >= node.threshold) {
            fail("base case: degree " + std::to_string(g.max_degree()) + " reaches omega^k", node);
        }
        Coloring col = greedy_leaf(g, labels, node, degeneracy_order(g));
        node.kind = TraceKind::base_star_leaf;
        if (guaranteed_ && BigInt(col.palette_size) > color_bound(node.omega, node.c)) {
            fail("base case exceeds omega^c colors", node);
        }
        return col;
    }

    Coloring decompose(const Graph& g, std::span<const Vertex> labels, std::size_t level, int k,
                       std::uint64_t clique_target, TraceNode& node) {
        node.kind = TraceKind::decompose;
        node.clique_target = clique_target;
        const std::size_t omega = node.omega;
        const std::size_t n = g.order();

        Vertex v = 0;
        for (Vertex u = 1; u < n; ++u)
            if (g.degree(u) > g.degree(v)) v = u;
        node.v = labels[v];
        const VertexSet& nbhd = g.neighbors(v);
        node.neighborhood = relabel(nbhd.to_vector(), labels);

        // X_1, ..., X_n: repeatedly the largest clique of what is left of N.
        VertexSet rest = nbhd;
        std::vector<Vertex> center_order{v};
        for (std::uint64_t i = 0; i < clique_target; ++i) {
            const Subgraph sub = induced_subgraph(g, rest);
            const std::vector<Vertex> q = relabel(max_clique(sub.graph), sub.labels);
            node.cliques.push_back(relabel(q, labels));
            if (q.empty()) fail("clique X_" + std::to_string(i + 1) + " is empty", node);
            if (q.size() >= omega) fail("clique inside N has size omega", node);
            if (i > 0 && q.size() > node.cliques[i - 1].size()) fail("clique sizes increase", node);
            for (Vertex u : q) {
                rest.erase(u);
                center_order.push_back(u);
            }
        }
        const VertexSet x_set = nbhd - rest;
        const std::size_t t = node.cliques.back().size();
        node.t = t;
        node.x0 = relabel(rest.to_vector(), labels);
        if (t < 1 || t > omega - 1) fail("t outside [1, omega - 1]", node);

        Coloring out{std::vector<Color>(n, uncolored), 0};

        // {v} + X: all distinct.
        node.center_palette = {0, center_order.size()};
        for (std::size_t i = 0; i < center_order.size(); ++i) out.colors[center_order[i]] = i;
        Color offset = node.center_palette.end();

        // X_0 has clique number at most t by the choice of X_n.
        {
            const Subgraph sub = induced_subgraph(g, rest);
            const std::size_t w = clique_number(sub.graph);
            if (w > t) fail("omega(X_0) exceeds t", node);
            node.x0_child = std::make_unique<TraceNode>();
            const Coloring child = color(sub.graph, relabel(sub.labels, labels), level, w, *node.x0_child);
            node.x0_palette = {offset, child.palette_size};
            place(out, child, sub.labels, offset, false);
            offset = node.x0_palette.end();
        }

        VertexSet outside = g.all() - nbhd;
        outside.erase(v);

        // A_Y for every stable k-subset Y of X. Y + v induces the star being
        // peeled and has no edge to A_Y, so G[A_Y] is free of the rest of the
        // pattern.
        const auto x_list = x_set.to_vector();
        const auto ys = stable_subsets(g, x_list, static_cast<std::size_t>(k), cfg_.enumeration_cap);
        VertexSet a_union(n);
        const bool check_children = guaranteed_ && cfg_.check_h_free.value_or(true);
        for (const auto& y : ys) {
            VertexSet a_y = outside;
            for (Vertex u : y) a_y -= g.neighbors(u);
            const Subgraph sub = induced_subgraph(g, a_y);
            StableBlock blk;
            blk.y = relabel(y, labels);
            blk.a = relabel(sub.labels, labels);
            if (check_children && !is_h_free(sub.graph, patterns_[level + 1])) {
                node.blocks.push_back(std::move(blk));
                fail("A_Y contains the remaining pattern", node);
            }
            const std::size_t w = clique_number(sub.graph);
            blk.child = std::make_unique<TraceNode>();
            const Coloring child = color(sub.graph, relabel(sub.labels, labels), level + 1, w, *blk.child);
            blk.palette = {offset, child.palette_size};
            place(out, child, sub.labels, offset, true);
            offset = blk.palette.end();
            a_union |= a_y;
            node.blocks.push_back(std::move(blk));
        }

        // B: every b has fewer than omega^k non-neighbours in X, which forces
        // omega(B) <= omega - t.
        const VertexSet b_set = outside - a_union;
        node.b = relabel(b_set.to_vector(), labels);
        const BigInt nonneighbour_limit = color_bound(omega, static_cast<std::uint64_t>(k));
        b_set.for_each([&](Vertex b) {
            const std::size_t missing = x_list.size() - x_set.intersection_size(g.neighbors(b));
            if (BigInt(missing) >= nonneighbour_limit) {
                fail("vertex " + std::to_string(labels[b]) + " of B has " + std::to_string(missing) +
                         " non-neighbours in X",
                     node);
            }
        });
        {
            const Subgraph sub = induced_subgraph(g, b_set);
            const std::size_t w = clique_number(sub.graph);
            if (w > omega - t) fail("omega(B) exceeds omega - t", node);
            node.b_child = std::make_unique<TraceNode>();
            const Coloring child = color(sub.graph, relabel(sub.labels, labels), level, w, *node.b_child);
            node.b_palette = {offset, child.palette_size};
            place(out, child, sub.labels, offset, false);
            offset = node.b_palette.end();
        }

        out.palette_size = offset;
        node.palette_size = offset;
        if (std::find(out.colors.begin(), out.colors.end(), uncolored) != out.colors.end()) {
            fail("parts do not cover the vertex set", node);
        }

        if (guaranteed_) {
            const std::uint64_t c = exponents_[level];
            const std::uint64_t c_prev = exponents_[level + 1];
            const BigInt n_omega = BigInt(clique_target) * omega;
            const BigInt budget = color_bound(t, c) + n_omega +
                                  ipow(n_omega, static_cast<std::uint64_t>(k)) * color_bound(omega, c_prev) +
                                  color_bound(omega - t, c);
            if (BigInt(offset) > budget) fail("palette exceeds t^c + n*omega + (n*omega)^k*omega^c' + (omega-t)^c", node);
            if (budget > color_bound(omega, c)) fail("palette budget exceeds omega^c", node);
        }
        return out;
    }

    // Copies a child coloring into `out`, shifted by `offset`. With
    // keep_existing, vertices that already have a color keep it.
    static void place(Coloring& out, const Coloring& child, const std::vector<Vertex>& local, Color offset,
                      bool keep_existing) {
        for (std::size_t i = 0; i < local.size(); ++i) {
            Color& slot = out.colors[local[i]];
            if (keep_existing && slot != uncolored) continue;
            slot = offset + child.colors[i];
        }
    }

    static constexpr Color uncolored = ~Color{0};

    const ColorerConfig& cfg_;
    bool guaranteed_;
    std::vector<StarForest> patterns_;
    std::vector<std::uint64_t> exponents_;
};

} // namespace detail

/// Colors an H-free graph with at most omega^c colors, c = compute_exponent(h).
///
/// Each call either colors greedily (low degree, clique number at most one,
/// or a single remaining star), or splits off a vertex v of maximum degree:
/// its neighbourhood N is cut into n = omega^(k+1) successively largest cliques
/// X_1..X_n plus the remainder X_0, the vertices outside N + v are divided into
/// the sets A_Y (no neighbour in a stable k-subset Y of X) and the rest B, and
/// X_0, each A_Y and B are colored recursively with disjoint palettes while
/// v + X receives distinct fresh colors. X_0 and B have smaller clique number;
/// each A_Y avoids one star fewer.
///
/// Throws NotHFree when the pre-check finds the pattern, EnumerationCapExceeded
/// when a node has too many stable k-subsets, and InvariantViolation if any
/// proof step fails to hold.
inline ColoringResult color_star_forest_free(const Graph& g, const StarForest& h, const ColorerConfig& cfg = {}) {
    ColoringResult result;
    result.certificate = compute_exponent(h);
    const bool check = cfg.check_h_free.value_or(g.order() <= auto_check_limit);
    if (check) {
        if (auto emb = contains_induced_star_forest(g, h)) throw NotHFree(std::move(*emb));
    }
    result.bound_guaranteed = check;
    result.omega = clique_number(g);

    ColorerConfig effective = cfg;
    effective.check_h_free = check;
    detail::Colorer colorer(h, effective, check);
    result.coloring = colorer.color(g, natural_order(g.order()), 0, result.omega, result.trace);

    if (!verify_coloring(g, result.coloring)) {
        throw InvariantViolation("output coloring is not proper", to_json(result.trace).dump());
    }
    if (check && !verify_bound(g, result.coloring, result.certificate)) {
        throw InvariantViolation("output coloring exceeds omega^c colors", to_json(result.trace).dump());
    }
    return result;
}

} // namespace starcolor

#endif // starcolor_colorer_hpp
