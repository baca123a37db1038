#ifndef starcolor_trace_check_hpp
#define starcolor_trace_check_hpp

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "starcolor/bigint.hpp"
#include "starcolor/coloring.hpp"
#include "starcolor/exponent.hpp"
#include "starcolor/graph.hpp"
#include "starcolor/oracles.hpp"
#include "starcolor/trace.hpp"

// Re-derives every claim of a trace from the input graph and the final
// coloring alone, with the exact oracles. Nothing here trusts the colorer.

namespace starcolor {

struct TraceCheckOptions {
    /// Also check the palette accounting against omega^c at split nodes and
    /// leaves. Only meaningful for inputs known to be H-free.
    bool bounds = false;
};

namespace detail {

class TraceChecker {
public:
    TraceChecker(const Graph& g, const Coloring& col, TraceCheckOptions opts) : g_(g), col_(col), opts_(opts) {}

    std::vector<std::string> run(const TraceNode& root) {
        if (col_.colors.size() != g_.order()) {
            report("root", "coloring is not total");
            return errors_;
        }
        check(root, 0, "root", g_.all());
        return errors_;
    }

private:
    void report(const std::string& where, const std::string& what) { errors_.push_back(where + ": " + what); }

    VertexSet as_set(const std::vector<Vertex>& vs, const std::string& where, const char* name) {
        VertexSet s(g_.order());
        for (Vertex v : vs) {
            if (v >= g_.order()) {
                report(where, std::string(name) + " has out-of-range vertex");
                continue;
            }
            if (s.contains(v)) report(where, std::string(name) + " repeats vertex " + std::to_string(v));
            s.insert(v);
        }
        return s;
    }

    std::size_t omega_of(const VertexSet& s) { return clique_number(induced_subgraph(g_, s).graph); }

    void check_range(const VertexSet& s, Color lo, Color hi, const std::string& where, const char* name) {
        s.for_each([&](Vertex u) {
            const Color c = col_.colors[u];
            if (c < lo || c >= hi) {
                report(where, std::string(name) + " vertex " + std::to_string(u) + " has color " + std::to_string(c) +
                                  " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + ")");
            }
        });
    }

    // `owned` holds the vertices whose final color this node decided; a vertex
    // of A that lies in several A_Y is owned only by the first block.
    void check(const TraceNode& node, Color base, const std::string& where, const VertexSet& owned) {
        const VertexSet verts = as_set(node.vertices, where, "vertices");
        if (!std::is_sorted(node.vertices.begin(), node.vertices.end())) report(where, "vertices not ascending");
        const Subgraph sub = induced_subgraph(g_, verts);
        const std::size_t omega = clique_number(sub.graph);
        if (omega != node.omega) report(where, "recorded omega " + std::to_string(node.omega) + " != " + std::to_string(omega));
        check_range(verts & owned, base, base + node.palette_size, where, "node");

        if (node.kind != TraceKind::decompose) {
            std::vector<Vertex> sorted = node.order;
            std::sort(sorted.begin(), sorted.end());
            if (sorted != node.vertices) report(where, "leaf order is not a permutation of the node");
            if (node.kind == TraceKind::base_star_leaf && node.pattern.component_count() != 1) {
                report(where, "base leaf with a pattern of " + std::to_string(node.pattern.component_count()) + " stars");
            }
            if (opts_.bounds && BigInt(node.palette_size) > color_bound(omega, node.c)) {
                report(where, "leaf uses more than omega^c colors");
            }
            return;
        }
        check_decompose(node, verts, omega, base, where, owned);
    }

    void check_decompose(const TraceNode& node, const VertexSet& verts, std::size_t omega, Color base,
                         const std::string& where, const VertexSet& owned) {
        if (node.pattern.component_count() < 2) report(where, "split with fewer than two stars left");
        if (!verts.contains(node.v)) {
            report(where, "v outside the node");
            return;
        }
        const int k = node.pattern.empty() ? 0 : node.pattern.stars().front();
        const VertexSet nbhd = g_.neighbors(node.v) & verts;
        if (as_set(node.neighborhood, where, "N") != nbhd) report(where, "recorded N differs from N(v)");

        // Cliques X_1..X_n.
        const BigInt target = ipow(BigInt(omega), static_cast<std::uint64_t>(k) + 1);
        if (BigInt(node.clique_target) != target) report(where, "n != omega^(k+1)");
        if (BigInt(node.cliques.size()) != target) report(where, "number of cliques != n");
        VertexSet x(g_.order());
        for (std::size_t i = 0; i < node.cliques.size(); ++i) {
            const auto& q = node.cliques[i];
            const std::string at = where + ".X_" + std::to_string(i + 1);
            if (q.empty()) report(at, "empty clique");
            if (!is_clique(g_, q)) report(at, "not a clique");
            if (q.size() + 1 > omega) report(at, "size not below omega");
            if (i > 0 && q.size() > node.cliques[i - 1].size()) report(at, "sizes increase");
            const VertexSet qs = as_set(q, at, "clique");
            if (!qs.is_subset_of(nbhd)) report(at, "leaves N");
            if (qs.intersects(x)) report(at, "overlaps an earlier clique");
            // Largest clique of what was left of N at this point.
            if (q.size() != omega_of(nbhd - x)) report(at, "not a maximum clique of the remainder");
            x |= qs;
        }
        const VertexSet x0 = nbhd - x;
        if (as_set(node.x0, where, "X_0") != x0) report(where, "X_0 != N minus X");
        const std::size_t t = node.cliques.empty() ? 0 : node.cliques.back().size();
        if (node.t != t) report(where, "t != |X_n|");
        if (t < 1 || t + 1 > omega) report(where, "t outside [1, omega - 1]");
        if (omega_of(x0) > t) report(where, "omega(X_0) > t");

        // Stable k-subsets and A_Y.
        VertexSet outside = verts - nbhd;
        outside.erase(node.v);
        const auto x_list = x.to_vector();
        std::vector<std::vector<Vertex>> expected_ys;
        {
            std::vector<Vertex> cur;
            auto rec = [&](auto&& self, std::size_t start) -> void {
                if (cur.size() == static_cast<std::size_t>(k)) {
                    expected_ys.push_back(cur);
                    return;
                }
                for (std::size_t i = start; i < x_list.size(); ++i) {
                    cur.push_back(x_list[i]);
                    if (is_stable(g_, cur)) self(self, i + 1);
                    cur.pop_back();
                }
            };
            rec(rec, 0);
        }
        if (expected_ys.size() != node.blocks.size()) {
            report(where, "expected " + std::to_string(expected_ys.size()) + " stable k-subsets, trace has " +
                              std::to_string(node.blocks.size()));
        }
        VertexSet a(g_.order());
        std::vector<VertexSet> a_sets;
        for (std::size_t i = 0; i < node.blocks.size(); ++i) {
            const auto& blk = node.blocks[i];
            const std::string at = where + ".Y" + std::to_string(i);
            if (i < expected_ys.size() && blk.y != expected_ys[i]) report(at, "Y out of lexicographic order");
            if (blk.y.size() != static_cast<std::size_t>(k) || !is_stable(g_, blk.y)) report(at, "Y not a stable k-set");
            VertexSet expect = outside;
            for (Vertex y : blk.y) expect -= g_.neighbors(y);
            const VertexSet ay = as_set(blk.a, at, "A_Y");
            if (ay != expect) report(at, "A_Y differs from the non-neighbours of Y outside N + v");
            a |= ay;
            a_sets.push_back(ay);
        }
        const VertexSet b = as_set(node.b, where, "B");
        if (b != outside - a) report(where, "B != V minus (A + N + v)");

        // Partition {v}, N, A, B.
        VertexSet v_set(g_.order(), {node.v});
        if ((v_set | nbhd | a | b) != verts || nbhd.intersects(a) || nbhd.intersects(b) || a.intersects(b) ||
            v_set.intersects(a | b | nbhd)) {
            report(where, "{v}, N, A, B do not partition the node");
        }

        // Every b in B misses fewer than omega^k vertices of X.
        const BigInt limit = ipow(BigInt(omega), static_cast<std::uint64_t>(k));
        b.for_each([&](Vertex u) {
            if (BigInt((x - g_.neighbors(u)).size()) >= limit) {
                report(where, "B vertex " + std::to_string(u) + " has at least omega^k non-neighbours in X");
            }
        });
        // ... which caps omega(B) at omega - t.
        if (omega_of(b) + t > omega) report(where, "omega(B) > omega - t");

        // Palettes: disjoint, in order, inside the node's range.
        std::vector<std::pair<PaletteRange, std::string>> ranges{{node.center_palette, "center"},
                                                                 {node.x0_palette, "x0"}};
        for (std::size_t i = 0; i < node.blocks.size(); ++i) ranges.push_back({node.blocks[i].palette, "Y" + std::to_string(i)});
        ranges.push_back({node.b_palette, "b"});
        for (std::size_t i = 0; i < ranges.size(); ++i) {
            if (ranges[i].first.end() > node.palette_size) report(where, ranges[i].second + " palette leaves the node range");
            for (std::size_t j = i + 1; j < ranges.size(); ++j) {
                const auto& p = ranges[i].first;
                const auto& q = ranges[j].first;
                if (p.size && q.size && p.offset < q.end() && q.offset < p.end()) {
                    report(where, ranges[i].second + " and " + ranges[j].second + " palettes overlap");
                }
            }
        }
        // {v} + X: distinct colors inside the center range.
        const VertexSet center = x | v_set;
        if (node.center_palette.size != center.size()) report(where, "center palette size != |X| + 1");
        const VertexSet owned_center = center & owned;
        check_range(owned_center, base + node.center_palette.offset, base + node.center_palette.end(), where,
                    "center");
        {
            std::set<Color> seen;
            owned_center.for_each([&](Vertex u) { seen.insert(col_.colors[u]); });
            if (seen.size() != owned_center.size()) report(where, "colors on {v} + X repeat");
        }
        // Each vertex of A takes its color from the first block containing it.
        std::vector<VertexSet> block_owned;
        VertexSet done(g_.order());
        for (std::size_t i = 0; i < node.blocks.size(); ++i) {
            block_owned.push_back((a_sets[i] - done) & owned);
            done |= a_sets[i];
        }

        if (opts_.bounds) {
            const std::uint64_t c = node.c;
            const std::uint64_t c_prev = compute_exponent(node.pattern.without_smallest()).final_c;
            const BigInt n_omega = BigInt(node.clique_target) * omega;
            const BigInt budget = ipow(BigInt(t), c) + n_omega +
                                  ipow(n_omega, static_cast<std::uint64_t>(k)) * ipow(BigInt(omega), c_prev) +
                                  ipow(BigInt(omega - std::min(t, omega)), c);
            if (BigInt(node.palette_size) > budget) report(where, "palette exceeds the accounting budget");
            if (budget > ipow(BigInt(omega), c)) report(where, "accounting budget exceeds omega^c");
        }

        // Children; their own color checks cover X_0, each A_Y and B.
        auto child = [&](const std::unique_ptr<TraceNode>& ch, const VertexSet& expect, const PaletteRange& p,
                         const StarForest& pattern, const std::string& at, const VertexSet& child_owned) {
            if (!ch) {
                report(at, "missing child");
                return;
            }
            if (as_set(ch->vertices, at, "child") != expect) report(at, "child vertex set mismatch");
            if (ch->pattern != pattern) report(at, "child pattern mismatch");
            if (ch->palette_size != p.size) report(at, "child palette size mismatch");
            check(*ch, base + p.offset, at, child_owned);
        };
        child(node.x0_child, x0, node.x0_palette, node.pattern, where + ".x0", x0 & owned);
        for (std::size_t i = 0; i < node.blocks.size(); ++i) {
            child(node.blocks[i].child, a_sets[i], node.blocks[i].palette, node.pattern.without_smallest(),
                  where + ".Y" + std::to_string(i), block_owned[i]);
        }
        child(node.b_child, b, node.b_palette, node.pattern, where + ".b", b & owned);
    }

    const Graph& g_;
    const Coloring& col_;
    TraceCheckOptions opts_;
    std::vector<std::string> errors_;
};

} // namespace detail

/// Independently re-checks every invariant recorded in a trace. Returns one
/// message per violation; empty means the trace is consistent with g and col.
inline std::vector<std::string> check_trace(const Graph& g, const Coloring& col, const TraceNode& root,
                                            TraceCheckOptions opts = {}) {
    return detail::TraceChecker(g, col, opts).run(root);
}

} // namespace starcolor

#endif // starcolor_trace_check_hpp
