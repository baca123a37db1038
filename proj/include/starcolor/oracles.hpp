#ifndef starcolor_oracles_hpp
#define starcolor_oracles_hpp

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "starcolor/bigint.hpp"
#include "starcolor/coloring.hpp"
#include "starcolor/errors.hpp"
#include "starcolor/graph.hpp"
#include "starcolor/star_forest.hpp"

// Exact, exponential-time engines. All searches branch on vertices in
// ascending order so that ties resolve to the lexicographically smallest
// optimal vertex set, and repeated calls return identical results.

namespace starcolor {

namespace detail {

class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g) {}

    std::vector<Vertex> run() {
        if (g_.order() > 0) expand(g_.all());
        return best_;
    }

private:
    // Upper bounds for every suffix of `order`: first-fit coloring from the
    // back; after placing order[i] the number of classes bounds the clique
    // number of {order[i], order[i+1], ...}.
    std::vector<std::size_t> suffix_bounds(const std::vector<Vertex>& order) const {
        std::vector<std::size_t> bound(order.size());
        std::vector<VertexSet> classes;
        for (std::size_t i = order.size(); i-- > 0;) {
            const VertexSet& nb = g_.neighbors(order[i]);
            std::size_t c = 0;
            while (c < classes.size() && classes[c].intersects(nb)) ++c;
            if (c == classes.size()) classes.emplace_back(g_.order());
            classes[c].insert(order[i]);
            bound[i] = classes.size();
        }
        return bound;
    }

    void expand(VertexSet candidates) {
        const std::vector<Vertex> order = candidates.to_vector();
        const std::vector<std::size_t> bound = suffix_bounds(order);
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (current_.size() + bound[i] <= best_.size()) return;
            const Vertex u = order[i];
            candidates.erase(u);
            current_.push_back(u);
            VertexSet next = candidates & g_.neighbors(u);
            if (next.empty()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(std::move(next));
            }
            current_.pop_back();
        }
    }

    const Graph& g_;
    std::vector<Vertex> current_;
    std::vector<Vertex> best_;
};

} // namespace detail

/// Maximum clique, lexicographically smallest among those of maximum size.
/// Branch and bound over ascending vertex order, pruned by first-fit coloring
/// bounds; depth-first pre-order visits cliques in lexicographic order, so the
/// first maximum clique reached is the smallest one.
inline std::vector<Vertex> max_clique(const Graph& g) { return detail::CliqueSearch(g).run(); }

inline std::size_t clique_number(const Graph& g) { return max_clique(g).size(); }

inline std::vector<Vertex> max_stable_set(const Graph& g) { return max_clique(g.complement()); }

inline std::size_t stability_number(const Graph& g) { return max_stable_set(g).size(); }

inline constexpr std::size_t default_chromatic_cap = 20;

namespace detail {

class ChromaticSearch {
public:
    ChromaticSearch(const Graph& g, std::size_t lower, std::size_t upper)
        : g_(g), lower_(lower), best_(upper), colors_(g.order(), none) {}

    std::size_t run() {
        if (best_ > lower_) dfs(0, 0);
        return best_;
    }

private:
    static constexpr std::size_t none = SIZE_MAX;

    Vertex pick() const {
        Vertex best = 0;
        std::size_t best_sat = 0;
        std::size_t best_deg = 0;
        bool found = false;
        std::vector<bool> mark;
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (colors_[v] != none) continue;
            mark.assign(g_.order() + 1, false);
            std::size_t sat = 0;
            std::size_t deg = 0;
            g_.neighbors(v).for_each([&](Vertex u) {
                if (colors_[u] == none) {
                    ++deg;
                } else if (!mark[colors_[u]]) {
                    mark[colors_[u]] = true;
                    ++sat;
                }
            });
            if (!found || sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
                found = true;
            }
        }
        return best;
    }

    void dfs(std::size_t colored, std::size_t used) {
        if (done_ || used >= best_) return;
        if (colored == g_.order()) {
            best_ = used;
            if (best_ <= lower_) done_ = true;
            return;
        }
        const Vertex v = pick();
        for (std::size_t c = 0; c <= used && c + 1 < best_; ++c) {
            bool ok = true;
            g_.neighbors(v).for_each([&](Vertex u) {
                if (colors_[u] == c) ok = false;
            });
            if (!ok) continue;
            colors_[v] = c;
            dfs(colored + 1, std::max(used, c + 1));
            colors_[v] = none;
            if (done_) return;
        }
    }

    const Graph& g_;
    std::size_t lower_;
    std::size_t best_;
    std::vector<std::size_t> colors_;
    bool done_ = false;
};

} // namespace detail

/// Exact chromatic number by DSATUR-ordered branch and bound, bounded below by
/// the clique number and above by a first-fit coloring in degeneracy order.
/// Refuses graphs with more than `cap` vertices.
inline std::size_t chromatic_number_exact(const Graph& g, std::size_t cap = default_chromatic_cap) {
    if (g.order() > cap) {
        throw OracleScaleError("oracle scale: chromatic number requested for " + std::to_string(g.order()) +
                               " vertices, cap is " + std::to_string(cap));
    }
    if (g.order() == 0) return 0;
    const std::size_t lower = clique_number(g);
    const auto order = degeneracy_order(g);
    const std::size_t upper = static_cast<std::size_t>(greedy_color(g, order).palette_size);
    return detail::ChromaticSearch(g, lower, upper).run();
}

// ---------------------------------------------------------------------------
// Induced star forests

struct StarEmbedding {
    Vertex center = 0;
    std::vector<Vertex> leaves;

    friend bool operator==(const StarEmbedding&, const StarEmbedding&) = default;
};

/// One entry per pattern star, in descending order of leaf count.
using Embedding = std::vector<StarEmbedding>;

/// Checks that `e` is an induced copy of `h` in g: distinct vertices, centers
/// complete to their leaves, leaves pairwise nonadjacent, distinct stars
/// anticomplete, and star sizes matching h.
inline bool is_valid_embedding(const Graph& g, const StarForest& h, const Embedding& e) {
    std::vector<int> sizes;
    for (const auto& s : e) sizes.push_back(static_cast<int>(s.leaves.size()));
    std::sort(sizes.begin(), sizes.end());
    if (sizes != h.stars()) return false;

    std::vector<Vertex> all;
    std::vector<std::size_t> owner;
    for (std::size_t i = 0; i < e.size(); ++i) {
        all.push_back(e[i].center);
        owner.push_back(i);
        for (Vertex l : e[i].leaves) {
            all.push_back(l);
            owner.push_back(i);
        }
    }
    for (Vertex v : all) {
        if (v >= g.order()) return false;
    }
    for (std::size_t a = 0; a < all.size(); ++a) {
        for (std::size_t b = a + 1; b < all.size(); ++b) {
            if (all[a] == all[b]) return false;
            const bool adj = g.adjacent(all[a], all[b]);
            bool want = false;
            if (owner[a] == owner[b]) {
                const Vertex c = e[owner[a]].center;
                want = (all[a] == c || all[b] == c);
            }
            if (adj != want) return false;
        }
    }
    return true;
}

namespace detail {

class StarForestSearch {
public:
    StarForestSearch(const Graph& g, const StarForest& h) : g_(g), stars_(h.stars()) {
        std::sort(stars_.begin(), stars_.end(), std::greater<>());
        // Closed neighborhoods, used to block every vertex touching a placed one.
        closed_.reserve(g.order());
        for (Vertex v = 0; v < g.order(); ++v) {
            closed_.push_back(g.neighbors(v));
            closed_.back().insert(v);
        }
    }

    std::optional<Embedding> run() {
        if (place(0, VertexSet(g_.order()))) return embedding_;
        return std::nullopt;
    }

private:
    bool place(std::size_t index, const VertexSet& blocked) {
        if (index == stars_.size()) return true;
        const auto k = static_cast<std::size_t>(stars_[index]);
        // Stars of equal size are interchangeable; keep their centers increasing.
        const bool same_as_previous = index > 0 && stars_[index - 1] == stars_[index];
        const std::size_t first = same_as_previous ? embedding_.back().center + 1 : 0;

        const VertexSet free = blocked.complement();
        for (std::size_t c = first == 0 ? free.first() : free.next(first - 1); c != VertexSet::npos;
             c = free.next(c)) {
            const auto center = static_cast<Vertex>(c);
            VertexSet leaf_candidates = g_.neighbors(center) - blocked;
            if (leaf_candidates.size() < k) continue;
            embedding_.push_back({center, {}});
            VertexSet next_blocked = blocked | closed_[center];
            if (choose_leaves(index, k, leaf_candidates, next_blocked)) return true;
            embedding_.pop_back();
        }
        return false;
    }

    // Extends embedding_.back().leaves to k pairwise nonadjacent vertices drawn
    // from `candidates` in ascending order, then places the remaining stars.
    bool choose_leaves(std::size_t index, std::size_t k, VertexSet candidates, const VertexSet& blocked) {
        auto& leaves = embedding_.back().leaves;
        if (leaves.size() == k) return place(index + 1, blocked);
        const std::size_t need = k - leaves.size();
        while (!candidates.empty()) {
            if (candidates.size() < need) return false;
            const auto l = static_cast<Vertex>(candidates.first());
            candidates.erase(l);
            leaves.push_back(l);
            if (choose_leaves(index, k, candidates - g_.neighbors(l), blocked | closed_[l])) return true;
            leaves.pop_back();
        }
        return false;
    }

    const Graph& g_;
    std::vector<int> stars_;
    std::vector<VertexSet> closed_;
    Embedding embedding_;
};

} // namespace detail

/// Finds an induced copy of h. Stars are placed largest first; a center is
/// only tried when it has at least k neighbors outside the closed
/// neighborhoods of vertices already placed.
inline std::optional<Embedding> contains_induced_star_forest(const Graph& g, const StarForest& h) {
    if (h.vertex_count() > g.order()) return std::nullopt;
    return detail::StarForestSearch(g, h).run();
}

inline bool is_h_free(const Graph& g, const StarForest& h) {
    return !contains_induced_star_forest(g, h).has_value();
}

// ---------------------------------------------------------------------------
// Ramsey bound for graphs without a stable set of size k

/// omega^(k-1) + omega^(k-2) + ... + omega; zero for k = 1.
inline BigInt ramsey_bound(std::uint64_t omega, std::uint64_t k) {
    BigInt sum = 0;
    BigInt term = omega;
    for (std::uint64_t i = 1; i < k; ++i) {
        sum += term;
        term *= omega;
    }
    return sum;
}

struct RamseyCertificate {
    std::size_t omega = 0;
    std::size_t k = 0;
    BigInt bound;
    std::size_t vertex_count = 0;

    friend bool operator==(const RamseyCertificate&, const RamseyCertificate&) = default;
};

/// Either a stable set of exactly k vertices or a certificate that the graph
/// has at most ramsey_bound(omega, k) vertices.
using RamseyOutcome = std::variant<std::vector<Vertex>, RamseyCertificate>;

namespace detail {

inline std::optional<std::vector<Vertex>> ramsey_stable_set(const Graph& g, std::size_t k) {
    if (k == 0) return std::vector<Vertex>{};
    if (k == 1) {
        if (g.order() == 0) return std::nullopt;
        return std::vector<Vertex>{0};
    }
    // Every vertex lies in some W_x + x, where x ranges over a maximum clique
    // and W_x is the set of non-neighbours of x. A stable (k-1)-set inside one
    // W_x extends by x.
    for (Vertex x : max_clique(g)) {
        VertexSet w = g.neighbors(x).complement();
        w.erase(x);
        const Subgraph sub = induced_subgraph(g, w);
        if (auto inner = ramsey_stable_set(sub.graph, k - 1)) {
            std::vector<Vertex> out{x};
            for (Vertex v : *inner) out.push_back(sub.labels[v]);
            std::sort(out.begin(), out.end());
            return out;
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Searches the clique cover W_x + x recursively first. That search alone can
/// miss a stable set lying outside every W_x it visits (its failure only
/// bounds |V|), so a miss is confirmed against the exact stability number
/// before a certificate is issued.
inline RamseyOutcome ramsey_witness(const Graph& g, std::size_t k) {
    if (k == 0) throw std::invalid_argument("ramsey_witness: k must be at least 1");
    if (auto stable = detail::ramsey_stable_set(g, k)) return *stable;
    const std::vector<Vertex> alpha_set = max_stable_set(g);
    if (alpha_set.size() >= k) return std::vector<Vertex>(alpha_set.begin(), alpha_set.begin() + k);
    const std::size_t omega = clique_number(g);
    RamseyCertificate cert{omega, k, ramsey_bound(omega, k), g.order()};
    if (BigInt(cert.vertex_count) > cert.bound) {
        throw InvariantViolation("ramsey: " + std::to_string(cert.vertex_count) + " vertices exceed bound " +
                                     cert.bound.str(),
                                 "{}");
    }
    return cert;
}

} // namespace starcolor

#endif // starcolor_oracles_hpp
