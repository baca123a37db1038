#ifndef starcolor_graph_hpp
#define starcolor_graph_hpp

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace starcolor {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Subset of the vertex range [0, parent_size) of some graph, stored as a bit
/// row. Iteration is always in ascending vertex order.
class VertexSet {
public:
    using Bits = boost::dynamic_bitset<std::uint64_t>;
    static constexpr std::size_t npos = Bits::npos;

    VertexSet() = default;
    explicit VertexSet(std::size_t parent_size) : bits_(parent_size) {}

    VertexSet(std::size_t parent_size, std::initializer_list<Vertex> members)
        : bits_(parent_size) {
        for (Vertex v : members) insert(v);
    }

    VertexSet(std::size_t parent_size, std::span<const Vertex> members)
        : bits_(parent_size) {
        for (Vertex v : members) insert(v);
    }

    static VertexSet full(std::size_t parent_size) {
        VertexSet s(parent_size);
        s.bits_.set();
        return s;
    }

    std::size_t parent_size() const { return bits_.size(); }
    std::size_t size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }

    bool contains(Vertex v) const { return v < bits_.size() && bits_.test(v); }

    void insert(Vertex v) {
        check(v);
        bits_.set(v);
    }
    void erase(Vertex v) {
        check(v);
        bits_.reset(v);
    }

    std::size_t first() const { return bits_.find_first(); }
    std::size_t next(std::size_t v) const { return bits_.find_next(v); }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t v = bits_.find_first(); v != npos; v = bits_.find_next(v)) {
            f(static_cast<Vertex>(v));
        }
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    bool intersects(const VertexSet& other) const { return bits_.intersects(other.bits_); }
    bool is_subset_of(const VertexSet& other) const { return bits_.is_subset_of(other.bits_); }

    VertexSet& operator&=(const VertexSet& o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator|=(const VertexSet& o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator-=(const VertexSet& o) { bits_ -= o.bits_; return *this; }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s = *this;
        s.bits_.flip();
        return s;
    }

    std::size_t intersection_size(const VertexSet& o) const { return (bits_ & o.bits_).count(); }

    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }

    const Bits& bits() const { return bits_; }

private:
    void check(Vertex v) const {
        if (v >= bits_.size()) {
            throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " +
                                    std::to_string(bits_.size()) + ")");
        }
    }

    Bits bits_;
};

/// Undirected simple graph with dense adjacency rows. Immutable once built;
/// use GraphBuilder or build_graph to construct one.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

    std::size_t order() const { return rows_.size(); }

    std::size_t size() const {
        std::size_t twice = 0;
        for (const auto& r : rows_) twice += r.size();
        return twice / 2;
    }

    bool adjacent(Vertex u, Vertex v) const { return rows_.at(u).contains(v); }
    const VertexSet& neighbors(Vertex v) const { return rows_.at(v); }
    std::size_t degree(Vertex v) const { return rows_.at(v).size(); }

    std::size_t max_degree() const {
        std::size_t d = 0;
        for (const auto& r : rows_) d = std::max(d, r.size());
        return d;
    }

    VertexSet all() const { return VertexSet::full(order()); }

    /// Edges (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (Vertex u = 0; u < order(); ++u) {
            for (std::size_t v = rows_[u].next(u); v != VertexSet::npos; v = rows_[u].next(v)) {
                out.emplace_back(u, static_cast<Vertex>(v));
            }
        }
        return out;
    }

    Graph complement() const {
        Graph c(order());
        for (Vertex v = 0; v < order(); ++v) {
            c.rows_[v] = rows_[v].complement();
            c.rows_[v].erase(v);
        }
        return c;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

private:
    friend class GraphBuilder;
    std::vector<VertexSet> rows_;
};

/// Accumulates edges for a Graph of fixed order. Duplicate edges collapse;
/// self-loops and out-of-range endpoints throw std::invalid_argument.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n) : graph_(n) {}

    std::size_t order() const { return graph_.order(); }

    GraphBuilder& add_edge(Vertex u, Vertex v) {
        const std::size_t n = graph_.order();
        if (u >= n || v >= n) {
            throw std::invalid_argument("edge endpoint " + std::to_string(u >= n ? u : v) +
                                        " out of range for n = " + std::to_string(n));
        }
        if (u == v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        }
        graph_.rows_[u].insert(v);
        graph_.rows_[v].insert(u);
        return *this;
    }

    bool adjacent(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }

    Graph build() && { return std::move(graph_); }
    Graph build() const& { return graph_; }

private:
    Graph graph_;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
    GraphBuilder b(n);
    for (const auto& [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// G[S] together with the order-preserving map from its vertices back to the
/// parent's vertex indices.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> labels;
};

inline Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.parent_size() != g.order()) {
        throw std::invalid_argument("vertex set over " + std::to_string(s.parent_size()) +
                                    " vertices used with a graph of order " +
                                    std::to_string(g.order()));
    }
    Subgraph out;
    out.labels = s.to_vector();
    const std::size_t m = out.labels.size();
    std::vector<std::uint32_t> local(g.order(), 0);
    for (std::size_t i = 0; i < m; ++i) local[out.labels[i]] = static_cast<std::uint32_t>(i);

    GraphBuilder b(m);
    for (std::size_t i = 0; i < m; ++i) {
        const VertexSet row = g.neighbors(out.labels[i]) & s;
        for (std::size_t u = row.next(out.labels[i]); u != VertexSet::npos; u = row.next(u)) {
            b.add_edge(static_cast<Vertex>(i), local[u]);
        }
    }
    out.graph = std::move(b).build();
    return out;
}

/// Maps local vertex indices through a label map.
inline std::vector<Vertex> relabel(std::span<const Vertex> local, std::span<const Vertex> labels) {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(labels[v]);
    return out;
}

inline bool is_clique(const Graph& g, std::span<const Vertex> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

inline bool is_stable(const Graph& g, std::span<const Vertex> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j] || g.adjacent(vs[i], vs[j])) return false;
    return true;
}

} // namespace starcolor

#endif // starcolor_graph_hpp
