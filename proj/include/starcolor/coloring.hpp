#ifndef starcolor_coloring_hpp
#define starcolor_coloring_hpp

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "starcolor/graph.hpp"

namespace starcolor {

using Color = std::uint64_t;

/// colors[v] is the color of vertex v; every color lies in [0, palette_size).
struct Coloring {
    std::vector<Color> colors;
    Color palette_size = 0;

    std::size_t colors_used() const {
        return std::set<Color>(colors.begin(), colors.end()).size();
    }

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// True iff `col` is total on g, within its palette, and proper.
inline bool verify_coloring(const Graph& g, const Coloring& col) {
    if (col.colors.size() != g.order()) return false;
    for (Color c : col.colors) {
        if (c >= col.palette_size) return false;
    }
    for (const auto& [u, v] : g.edges()) {
        if (col.colors[u] == col.colors[v]) return false;
    }
    return true;
}

/// First-fit coloring in the given order. Uses at most max_degree + 1 colors.
inline Coloring greedy_color(const Graph& g, std::span<const Vertex> order) {
    const std::size_t n = g.order();
    if (order.size() != n) throw std::invalid_argument("greedy_color: order is not a permutation");
    std::vector<bool> seen(n, false);
    for (Vertex v : order) {
        if (v >= n || seen[v]) throw std::invalid_argument("greedy_color: order is not a permutation");
        seen[v] = true;
    }

    constexpr Color uncolored = ~Color{0};
    Coloring out{std::vector<Color>(n, uncolored), 0};
    std::vector<bool> taken;
    for (Vertex v : order) {
        taken.assign(g.degree(v) + 1, false);
        g.neighbors(v).for_each([&](Vertex u) {
            const Color c = out.colors[u];
            if (c != uncolored && c < taken.size()) taken[c] = true;
        });
        Color c = 0;
        while (taken[c]) ++c;
        out.colors[v] = c;
        out.palette_size = std::max(out.palette_size, c + 1);
    }
    return out;
}

inline std::vector<Vertex> natural_order(std::size_t n) {
    std::vector<Vertex> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
    return order;
}

/// Smallest-last order: repeatedly remove a vertex of minimum remaining degree
/// (lowest index on ties) and return the removal sequence reversed. First-fit
/// along it uses at most degeneracy + 1 colors.
inline std::vector<Vertex> degeneracy_order(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<bool> removed(n, false);
    std::vector<Vertex> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = 0;
        std::size_t best_deg = SIZE_MAX;
        for (Vertex v = 0; v < n; ++v) {
            if (!removed[v] && deg[v] < best_deg) {
                best = v;
                best_deg = deg[v];
            }
        }
        removed[best] = true;
        order.push_back(best);
        g.neighbors(best).for_each([&](Vertex u) {
            if (!removed[u]) --deg[u];
        });
    }
    std::reverse(order.begin(), order.end());
    return order;
}

} // namespace starcolor

#endif // starcolor_coloring_hpp
