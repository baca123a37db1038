#ifndef starcolor_generators_hpp
#define starcolor_generators_hpp

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

#include "starcolor/errors.hpp"
#include "starcolor/graph.hpp"
#include "starcolor/io.hpp"
#include "starcolor/oracles.hpp"
#include "starcolor/star_forest.hpp"

// Deterministic graph families. Randomness comes only from std::mt19937_64,
// whose output sequence is fixed by the C++ standard, so a seed reproduces
// the same graph on every platform.

namespace starcolor {

/// Exact rational edge probability num/den.
struct Probability {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
};

/// G(n, p): pairs (i, j), i < j, in lexicographic order each consume one
/// 64-bit draw r and become edges iff r < floor(p * 2^64) (always, for p = 1).
inline Graph gnp(std::size_t n, Probability p, std::uint64_t seed) {
    if (p.den == 0 || p.num > p.den) throw std::invalid_argument("gnp: probability must lie in [0, 1]");
    const bool always = p.num == p.den;
    const auto threshold =
        static_cast<std::uint64_t>((boost::multiprecision::uint128_t(p.num) << 64) / p.den);
    std::mt19937_64 rng(seed);
    GraphBuilder b(n);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            const std::uint64_t r = rng();
            if (always || r < threshold) b.add_edge(i, j);
        }
    }
    return std::move(b).build();
}

/// Disjoint union of cliques of the given sizes.
inline Graph clique_union(const std::vector<std::size_t>& sizes) {
    std::size_t n = 0;
    for (auto s : sizes) n += s;
    GraphBuilder b(n);
    Vertex start = 0;
    for (auto s : sizes) {
        for (Vertex i = start; i < start + s; ++i)
            for (Vertex j = i + 1; j < start + s; ++j) b.add_edge(i, j);
        start += static_cast<Vertex>(s);
    }
    return std::move(b).build();
}

/// Complete multipartite graph with parts of the given sizes.
inline Graph complete_multipartite(const std::vector<std::size_t>& sizes) {
    std::size_t n = 0;
    std::vector<std::size_t> part;
    for (std::size_t p = 0; p < sizes.size(); ++p) {
        n += sizes[p];
        part.insert(part.end(), sizes[p], p);
    }
    GraphBuilder b(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (part[i] != part[j]) b.add_edge(i, j);
    return std::move(b).build();
}

/// Replaces vertex i of g by a clique of sizes[i] vertices; copies of
/// adjacent vertices are complete to each other.
inline Graph blowup(const Graph& g, const std::vector<std::size_t>& sizes) {
    if (sizes.size() != g.order()) throw std::invalid_argument("blowup: need one size per vertex");
    std::vector<Vertex> origin;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (sizes[v] < 1) throw std::invalid_argument("blowup: sizes must be at least 1");
        origin.insert(origin.end(), sizes[v], v);
    }
    GraphBuilder b(origin.size());
    for (Vertex i = 0; i < origin.size(); ++i)
        for (Vertex j = i + 1; j < origin.size(); ++j)
            if (origin[i] == origin[j] || g.adjacent(origin[i], origin[j])) b.add_edge(i, j);
    return std::move(b).build();
}

/// Mycielskian: vertices 0..n-1 copy g, n+i is a shadow of i adjacent to the
/// neighbours of i, and 2n is adjacent to every shadow.
inline Graph mycielski(const Graph& g) {
    const std::size_t n = g.order();
    GraphBuilder b(2 * n + 1);
    for (const auto& [u, v] : g.edges()) {
        b.add_edge(u, v);
        b.add_edge(static_cast<Vertex>(n + u), v);
        b.add_edge(u, static_cast<Vertex>(n + v));
    }
    for (Vertex i = 0; i < n; ++i) b.add_edge(static_cast<Vertex>(n + i), static_cast<Vertex>(2 * n));
    return std::move(b).build();
}

// ---------------------------------------------------------------------------
// GenSpec

enum class Family { gnp, clique_union, complete_multipartite, blowup, mycielski, rejection_h_free };

inline const char* to_string(Family f) {
    switch (f) {
    case Family::gnp: return "gnp";
    case Family::clique_union: return "clique_union";
    case Family::complete_multipartite: return "complete_multipartite";
    case Family::blowup: return "blowup";
    case Family::mycielski: return "mycielski";
    case Family::rejection_h_free: return "rejection_h_free";
    }
    return "?";
}

/// JSON form, by family:
///   {"family":"gnp","n":30,"p":[1,2],"seed":42}
///   {"family":"clique_union","sizes":[3,3]}
///   {"family":"complete_multipartite","sizes":[2,2,2]}
///   {"family":"blowup","base":<spec or {"graph6":"..."}>,"sizes":[...]}
///   {"family":"mycielski","base":<spec or {"graph6":"..."}>}
///   {"family":"rejection_h_free","base":<spec>,"pattern":"2xK2","max_tries":500,"seed":7}
struct GenSpec {
    Family family = Family::gnp;
    std::size_t n = 0;
    Probability p;
    std::vector<std::size_t> sizes;
    std::shared_ptr<GenSpec> base;
    std::optional<std::string> base_graph6;
    std::string pattern;
    std::uint64_t max_tries = 100;
    std::uint64_t seed = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace detail

/// The same spec with every gnp seed underneath it replaced by a value derived
/// from `seed` (splitmix64), so each rejection attempt draws a fresh graph.
inline GenSpec reseed(const GenSpec& spec, std::uint64_t seed) {
    GenSpec out = spec;
    out.seed = detail::splitmix64(seed);
    if (spec.base) out.base = std::make_shared<GenSpec>(reseed(*spec.base, detail::splitmix64(seed ^ 0x5bd1e995ULL)));
    return out;
}

inline std::optional<Graph> generate(const GenSpec& spec);

/// Draws from `base` with seeds derived from base.seed until the result is
/// h-free; absent after max_tries attempts. Attempt i uses reseed(base, base.seed + i).
inline std::optional<Graph> rejection_h_free(const GenSpec& base, const StarForest& h, std::uint64_t max_tries) {
    for (std::uint64_t i = 0; i < max_tries; ++i) {
        const auto g = generate(i == 0 ? base : reseed(base, base.seed + i));
        if (g && is_h_free(*g, h)) return g;
    }
    return std::nullopt;
}

inline std::optional<Graph> generate(const GenSpec& spec) {
    auto base_graph = [&]() -> Graph {
        if (spec.base_graph6) return read_graph6(*spec.base_graph6);
        if (!spec.base) throw std::invalid_argument(std::string(to_string(spec.family)) + ": missing base");
        auto g = generate(*spec.base);
        if (!g) throw std::invalid_argument(std::string(to_string(spec.family)) + ": base produced no graph");
        return *g;
    };
    switch (spec.family) {
    case Family::gnp: return gnp(spec.n, spec.p, spec.seed);
    case Family::clique_union: return clique_union(spec.sizes);
    case Family::complete_multipartite: return complete_multipartite(spec.sizes);
    case Family::blowup: return blowup(base_graph(), spec.sizes);
    case Family::mycielski: return mycielski(base_graph());
    case Family::rejection_h_free: {
        if (!spec.base) throw std::invalid_argument("rejection_h_free: missing base spec");
        GenSpec base = *spec.base;
        if (spec.seed) base = reseed(base, spec.seed);
        return rejection_h_free(base, parse_pattern(spec.pattern), spec.max_tries);
    }
    }
    return std::nullopt;
}

inline nlohmann::ordered_json to_json(const GenSpec& spec) {
    nlohmann::ordered_json j;
    j["family"] = to_string(spec.family);
    switch (spec.family) {
    case Family::gnp:
        j["n"] = spec.n;
        j["p"] = {spec.p.num, spec.p.den};
        j["seed"] = spec.seed;
        break;
    case Family::clique_union:
    case Family::complete_multipartite: j["sizes"] = spec.sizes; break;
    case Family::blowup:
    case Family::mycielski:
    case Family::rejection_h_free:
        if (spec.base_graph6) {
            j["base"] = {{"graph6", *spec.base_graph6}};
        } else if (spec.base) {
            j["base"] = to_json(*spec.base);
        }
        if (spec.family == Family::blowup) j["sizes"] = spec.sizes;
        if (spec.family == Family::rejection_h_free) {
            j["pattern"] = spec.pattern;
            j["max_tries"] = spec.max_tries;
            j["seed"] = spec.seed;
        }
        break;
    }
    return j;
}

/// Parses a GenSpec; malformed input throws ParseError (position 0, the
/// message names the offending field).
inline GenSpec genspec_from_json(const nlohmann::json& j) {
    auto fail = [](const std::string& what) -> void { throw ParseError("genspec: " + what, 0); };
    if (!j.is_object()) fail("expected an object");
    if (!j.contains("family") || !j["family"].is_string()) fail("missing \"family\"");
    GenSpec s;
    const std::string family = j["family"];
    auto get_u64 = [&](const char* key, bool required, std::uint64_t fallback) -> std::uint64_t {
        if (!j.contains(key)) {
            if (required) fail(std::string("missing \"") + key + "\"");
            return fallback;
        }
        if (!j[key].is_number_unsigned()) fail(std::string("\"") + key + "\" must be a nonnegative integer");
        return j[key].get<std::uint64_t>();
    };
    auto get_sizes = [&]() {
        if (!j.contains("sizes") || !j["sizes"].is_array()) fail("missing \"sizes\" array");
        std::vector<std::size_t> out;
        for (const auto& e : j["sizes"]) {
            if (!e.is_number_unsigned() || e.get<std::uint64_t>() < 1) fail("sizes must be positive integers");
            out.push_back(e.get<std::size_t>());
        }
        return out;
    };
    auto get_base = [&]() {
        if (!j.contains("base") || !j["base"].is_object()) fail("missing \"base\" object");
        const auto& b = j["base"];
        if (b.contains("graph6")) {
            if (!b["graph6"].is_string()) fail("base.graph6 must be a string");
            s.base_graph6 = b["graph6"].get<std::string>();
        } else {
            s.base = std::make_shared<GenSpec>(genspec_from_json(b));
        }
    };

    if (family == "gnp") {
        s.family = Family::gnp;
        s.n = get_u64("n", true, 0);
        if (s.n > 100000) fail("n too large");
        if (!j.contains("p")) fail("missing \"p\"");
        const auto& p = j["p"];
        if (p.is_array() && p.size() == 2 && p[0].is_number_unsigned() && p[1].is_number_unsigned()) {
            s.p = {p[0].get<std::uint64_t>(), p[1].get<std::uint64_t>()};
        } else if (p.is_string()) {
            const std::string text = p;
            const auto slash = text.find('/');
            try {
                s.p = {std::stoull(text.substr(0, slash)),
                       slash == std::string::npos ? 1 : std::stoull(text.substr(slash + 1))};
            } catch (const std::exception&) {
                fail("\"p\" must be \"num/den\"");
            }
        } else {
            fail("\"p\" must be [num, den] or \"num/den\"");
        }
        if (s.p.den == 0 || s.p.num > s.p.den) fail("\"p\" must lie in [0, 1]");
        s.seed = get_u64("seed", false, 0);
    } else if (family == "clique_union") {
        s.family = Family::clique_union;
        s.sizes = get_sizes();
    } else if (family == "complete_multipartite") {
        s.family = Family::complete_multipartite;
        s.sizes = get_sizes();
    } else if (family == "blowup") {
        s.family = Family::blowup;
        get_base();
        s.sizes = get_sizes();
    } else if (family == "mycielski") {
        s.family = Family::mycielski;
        get_base();
    } else if (family == "rejection_h_free") {
        s.family = Family::rejection_h_free;
        get_base();
        if (!s.base) fail("rejection_h_free needs a generator spec as base");
        if (!j.contains("pattern") || !j["pattern"].is_string()) fail("missing \"pattern\"");
        s.pattern = j["pattern"];
        parse_pattern(s.pattern);
        s.max_tries = get_u64("max_tries", false, 100);
        s.seed = get_u64("seed", false, 0);
    } else {
        fail("unknown family \"" + family + "\"");
    }
    return s;
}

inline GenSpec parse_genspec(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("genspec: ") + e.what(), e.byte);
    }
    return genspec_from_json(j);
}

} // namespace starcolor

#endif // starcolor_generators_hpp
