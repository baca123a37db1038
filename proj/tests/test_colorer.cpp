#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "brute_force.hpp"
#include "named_graphs.hpp"
#include "starcolor/colorer.hpp"
#include "starcolor/generators.hpp"
#include "starcolor/trace_check.hpp"

using namespace starcolor;

namespace {

/// Bipartite graph where a_i sees b_0..b_{d_i - 1}: neighbourhoods are nested,
/// so it has no induced 2K2.
Graph chain_graph(const std::vector<std::size_t>& degrees, std::size_t right) {
    const std::size_t left = degrees.size();
    GraphBuilder b(left + right);
    for (Vertex i = 0; i < left; ++i)
        for (Vertex j = 0; j < degrees[i]; ++j) b.add_edge(i, static_cast<Vertex>(left + j));
    return std::move(b).build();
}

ColorerConfig forced() {
    ColorerConfig cfg;
    cfg.degree_threshold_override = 1;
    return cfg;
}

void require_sound(const Graph& g, const ColoringResult& r, bool bounds) {
    REQUIRE(verify_coloring(g, r.coloring));
    const auto errors = check_trace(g, r.coloring, r.trace, {bounds});
    INFO((errors.empty() ? std::string() : errors.front()));
    REQUIRE(errors.empty());
    if (bounds) REQUIRE(verify_bound(g, r.coloring, r.certificate));
}

} // namespace

TEST_CASE("greedy_color", "[colorer]") {
    const Graph k3 = named::complete(3);
    CHECK(greedy_color(k3, std::vector<Vertex>{2, 0, 1}).palette_size == 3);
    CHECK(greedy_color(Graph(4), natural_order(4)).palette_size == 1);
    CHECK(greedy_color(Graph(0), natural_order(0)).palette_size == 0);
    // C5 in order 0..4: 0,1,0,1,2.
    const Coloring c5 = greedy_color(named::cycle(5), natural_order(5));
    CHECK(c5.colors == std::vector<Color>{0, 1, 0, 1, 2});
    CHECK(c5.palette_size == 3);
    CHECK_THROWS_AS(greedy_color(k3, std::vector<Vertex>{0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(greedy_color(k3, std::vector<Vertex>{0, 1}), std::invalid_argument);
}

TEST_CASE("greedy colorings are proper and within max degree + 1", "[colorer][property]") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = named::random(rng() % 30, 0.4, rng);
        std::vector<Vertex> order = natural_order(g.order());
        std::shuffle(order.begin(), order.end(), rng);
        const Coloring c = greedy_color(g, order);
        REQUIRE(verify_coloring(g, c));
        REQUIRE(c.palette_size <= g.max_degree() + 1);
        REQUIRE(verify_coloring(g, greedy_color(g, degeneracy_order(g))));
    }
}

TEST_CASE("verify_coloring", "[colorer]") {
    const Graph k2 = named::complete(2);
    CHECK(verify_coloring(k2, Coloring{{0, 1}, 2}));
    CHECK_FALSE(verify_coloring(k2, Coloring{{0, 0}, 1}));
    CHECK_FALSE(verify_coloring(k2, Coloring{{0}, 1}));
    CHECK_FALSE(verify_coloring(k2, Coloring{{0, 2}, 2}));
}

TEST_CASE("color_star_forest_free on known graphs", "[colorer]") {
    SECTION("C5 avoiding the claw: greedy leaf, 3 colors <= 8") {
        const Graph c5 = named::cycle(5);
        const auto r = color_star_forest_free(c5, StarForest({3}));
        CHECK(r.omega == 2);
        CHECK(r.certificate.final_c == 3);
        CHECK(r.coloring.colors_used() == 3);
        CHECK(r.trace.kind == TraceKind::base_star_leaf);
        CHECK(brute::chromatic_number(c5) == 3);
        require_sound(c5, r, true);
    }
    SECTION("K7 avoiding 2K2") {
        const Graph k7 = named::complete(7);
        const auto r = color_star_forest_free(k7, StarForest({1, 1}));
        CHECK(r.certificate.final_c == 7);
        CHECK(r.coloring.colors_used() == 7);
        CHECK(r.trace.kind == TraceKind::greedy_leaf);
        require_sound(k7, r, true);
    }
    SECTION("empty graph") {
        const auto r = color_star_forest_free(Graph(0), StarForest({1, 1}));
        CHECK(r.coloring.colors.empty());
        CHECK(r.coloring.palette_size == 0);
        // Every graph, even the null graph, contains the empty pattern.
        CHECK_THROWS_AS(color_star_forest_free(Graph(0), StarForest{}), NotHFree);
    }
    SECTION("edgeless graph uses one color") {
        const auto r = color_star_forest_free(Graph(6), StarForest({1}));
        CHECK(r.coloring.palette_size == 1);
    }
}

TEST_CASE("color_star_forest_free refuses graphs containing the pattern", "[colorer]") {
    try {
        color_star_forest_free(named::path(5), StarForest({1, 1}));
        FAIL("expected NotHFree");
    } catch (const NotHFree& e) {
        CHECK(is_valid_embedding(named::path(5), StarForest({1, 1}), e.embedding()));
    }
    CHECK_THROWS_AS(color_star_forest_free(Graph(1), StarForest{}), NotHFree);
    CHECK_THROWS_AS(color_star_forest_free(Graph(1), StarForest({0})), NotHFree);

    SECTION("with the check off the coloring is still proper") {
        ColorerConfig cfg;
        cfg.check_h_free = false;
        std::mt19937_64 rng(2);
        for (int trial = 0; trial < 30; ++trial) {
            const Graph g = named::random(8 + rng() % 20, 0.5, rng);
            for (const auto& h : {StarForest({1, 1}), StarForest({1}), StarForest{}, StarForest({0, 2})}) {
                const auto r = color_star_forest_free(g, h, cfg);
                CHECK_FALSE(r.bound_guaranteed);
                require_sound(g, r, false);
            }
        }
    }
}

TEST_CASE("forced decomposition on complete bipartite graphs", "[colorer][decompose]") {
    const Graph g = complete_multipartite({8, 8});
    const StarForest h({1, 1});
    REQUIRE(is_h_free(g, h));
    const auto r = color_star_forest_free(g, h, forced());
    REQUIRE(r.trace.kind == TraceKind::decompose);
    // v = 0, N = right side, n = 2^2 = 4 singleton cliques, t = 1.
    CHECK(r.trace.v == 0);
    CHECK(r.trace.clique_target == 4);
    CHECK(r.trace.cliques == std::vector<std::vector<Vertex>>{{8}, {9}, {10}, {11}});
    CHECK(r.trace.t == 1);
    CHECK(r.trace.x0 == std::vector<Vertex>{12, 13, 14, 15});
    // Left side minus v sees every Y, so A is empty and B holds it.
    CHECK(r.trace.blocks.size() == 4);
    for (const auto& blk : r.trace.blocks) CHECK(blk.a.empty());
    CHECK(r.trace.b == std::vector<Vertex>{1, 2, 3, 4, 5, 6, 7});
    CHECK(r.trace.center_palette.size == 5);
    require_sound(g, r, true);
}

TEST_CASE("forced decomposition on chain graphs", "[colorer][decompose][property]") {
    std::mt19937_64 rng(17);
    const StarForest h({1, 1});
    int decomposed = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t right = 8 + rng() % 8;
        std::vector<std::size_t> degrees(4 + rng() % 10);
        for (auto& d : degrees) d = rng() % (right + 1);
        const Graph g = chain_graph(degrees, right);
        REQUIRE(is_h_free(g, h));
        const auto r = color_star_forest_free(g, h, forced());
        if (trace_stats(r.trace).decompose > 0) ++decomposed;
        require_sound(g, r, true);
    }
    CHECK(decomposed > 20);
}

TEST_CASE("peeling a single vertex star (k = 0)", "[colorer][decompose]") {
    // K1 + K2 free graphs are exactly the complete multipartite ones.
    const StarForest h({0, 1});
    const Graph g = complete_multipartite({5, 5, 5});
    REQUIRE(is_h_free(g, h));
    const auto r = color_star_forest_free(g, h, forced());
    REQUIRE(r.trace.kind == TraceKind::decompose);
    // k = 0: Y is the empty set only, A_Y is everything outside N + v, B is empty.
    REQUIRE(r.trace.blocks.size() == 1);
    CHECK(r.trace.blocks[0].y.empty());
    CHECK(r.trace.blocks[0].a == std::vector<Vertex>{1, 2, 3, 4});
    CHECK(r.trace.b.empty());
    CHECK(r.trace.clique_target == 3);
    require_sound(g, r, true);
}

TEST_CASE("enumeration cap", "[colorer]") {
    ColorerConfig cfg = forced();
    cfg.enumeration_cap = 3;
    CHECK_THROWS_AS(color_star_forest_free(complete_multipartite({8, 8}), StarForest({1, 1}), cfg),
                    EnumerationCapExceeded);
    cfg.enumeration_cap = 4;
    CHECK_NOTHROW(color_star_forest_free(complete_multipartite({8, 8}), StarForest({1, 1}), cfg));
}

TEST_CASE("coloring runs are deterministic", "[colorer]") {
    const Graph g = complete_multipartite({9, 10});
    const auto a = color_star_forest_free(g, StarForest({1, 2}), forced());
    const auto b = color_star_forest_free(g, StarForest({1, 2}), forced());
    CHECK(a.coloring == b.coloring);
    CHECK(to_json(a.trace).dump() == to_json(b.trace).dump());
}

TEST_CASE("trace checker catches tampering", "[colorer][decompose]") {
    const Graph g = complete_multipartite({8, 8});
    auto r = color_star_forest_free(g, StarForest({1, 1}), forced());
    REQUIRE(check_trace(g, r.coloring, r.trace, {true}).empty());

    SECTION("swapped clique order") {
        std::swap(r.trace.cliques[0], r.trace.cliques[1]);
        r.trace.cliques[0].push_back(12);
        CHECK_FALSE(check_trace(g, r.coloring, r.trace).empty());
    }
    SECTION("B vertex moved into A") {
        r.trace.blocks[0].a.push_back(r.trace.b.back());
        r.trace.b.pop_back();
        CHECK_FALSE(check_trace(g, r.coloring, r.trace).empty());
    }
    SECTION("overlapping palettes") {
        r.trace.x0_palette.offset -= 1;
        CHECK_FALSE(check_trace(g, r.coloring, r.trace).empty());
    }
    SECTION("recolored vertex") {
        r.coloring.colors[8] = r.coloring.colors[9];
        CHECK_FALSE(check_trace(g, r.coloring, r.trace).empty());
    }
}

TEST_CASE("trace JSON schema", "[colorer][trace]") {
    const Graph g = complete_multipartite({8, 8});
    const auto r = color_star_forest_free(g, StarForest({1, 1}), forced());
    const auto j = to_json(r.trace);
    CHECK(j["kind"] == "decompose");
    CHECK(j["omega"] == 2);
    CHECK(j["n"] == 4);
    CHECK(j["t"] == 1);
    CHECK(j["palettes"]["center"] == nlohmann::ordered_json::array({0, 5}));
    CHECK(j["blocks"].size() == 4);
    CHECK(j["blocks"][0]["y"] == nlohmann::ordered_json::array({8}));
    CHECK(j["x0_child"]["kind"] == "greedy");
    CHECK(j["b_child"]["pattern"] == nlohmann::ordered_json::array({1, 1}));
}
