// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. argv[1] is the starcolor binary (used for the end-to-end
// determinism check).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "brute_force.hpp"
#include "named_graphs.hpp"
#include "starcolor/starcolor.hpp"
#include "starcolor/trace_check.hpp"

using namespace starcolor;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> problems;

    void fail(const std::string& what) {
        pass = false;
        if (problems.size() < 5) problems.push_back(what);
    }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

// ---------------------------------------------------------------------------
// 1. Every labeled graph on at most 6 vertices, k in {2, 3}.

Outcome ramsey_exhaustive() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    std::size_t graphs = 0;
    std::size_t certificates = 0;
    for (std::size_t n = 0; n <= 6; ++n) {
        std::vector<Edge> pairs;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            GraphBuilder b(n);
            for (std::size_t e = 0; e < pairs.size(); ++e)
                if (mask >> e & 1u) b.add_edge(pairs[e].first, pairs[e].second);
            const Graph g = std::move(b).build();
            ++graphs;
            const std::size_t alpha = brute::alpha(g);
            const std::size_t omega = brute::clique_number(g);
            for (std::size_t k : {2, 3}) {
                const std::string tag = "n=" + std::to_string(n) + " mask=" + std::to_string(mask) + " k=" +
                                        std::to_string(k);
                if (alpha < k && BigInt(n) > ramsey_bound(omega, k)) o.fail(tag + ": size exceeds the bound");
                RamseyOutcome out;
                try {
                    out = ramsey_witness(g, k);
                } catch (const std::exception& e) {
                    o.fail(tag + ": " + e.what());
                    continue;
                }
                if (const auto* s = std::get_if<std::vector<Vertex>>(&out)) {
                    bool distinct = true;
                    for (std::size_t i = 0; i + 1 < s->size(); ++i) distinct &= (*s)[i] < (*s)[i + 1];
                    bool in_range = true;
                    for (Vertex v : *s) in_range &= v < n;
                    if (s->size() != k || !distinct || !in_range || !is_stable(g, *s))
                        o.fail(tag + ": invalid stable set");
                } else {
                    ++certificates;
                    const auto& c = std::get<RamseyCertificate>(out);
                    if (alpha >= k) o.fail(tag + ": certificate although a stable set exists");
                    if (c.vertex_count != n || c.omega != omega || c.k != k || c.bound != ramsey_bound(omega, k) ||
                        BigInt(n) > c.bound)
                        o.fail(tag + ": inconsistent certificate");
                }
            }
        }
    }
    const double secs = seconds_since(start);
    if (secs >= 120) o.fail("runtime " + std::to_string(secs) + " s exceeds 2 minutes");
    std::ostringstream d;
    d << graphs << " graphs x 2 values of k, " << certificates << " certificates, " << std::fixed
      << std::setprecision(1) << secs << " s";
    o.detail = d.str();
    return o;
}

// ---------------------------------------------------------------------------
// Instance families.

Graph chain_graph(std::mt19937_64& rng, std::size_t left, std::size_t right) {
    GraphBuilder b(left + right);
    for (Vertex i = 0; i < left; ++i) {
        const std::size_t d = rng() % (right + 1);
        for (Vertex j = 0; j < d; ++j) b.add_edge(i, static_cast<Vertex>(left + j));
    }
    return std::move(b).build();
}

/// Clique on the first `q` vertices, the rest stable, random edges between.
Graph split_graph(std::mt19937_64& rng, std::size_t q, std::size_t s, double p) {
    std::bernoulli_distribution coin(p);
    GraphBuilder b(q + s);
    for (Vertex i = 0; i < q; ++i) {
        for (Vertex j = i + 1; j < q; ++j) b.add_edge(i, j);
        for (Vertex j = 0; j < s; ++j)
            if (coin(rng)) b.add_edge(i, static_cast<Vertex>(q + j));
    }
    return std::move(b).build();
}

std::vector<std::size_t> random_sizes(std::mt19937_64& rng, std::size_t total, std::size_t max_part) {
    std::vector<std::size_t> out;
    while (total > 0) {
        const std::size_t s = std::min<std::size_t>(total, 1 + rng() % max_part);
        out.push_back(s);
        total -= s;
    }
    return out;
}

/// Candidate graphs on at most 30 vertices, mixing random and structured
/// families; the caller keeps the H-free ones.
Graph candidate(std::mt19937_64& rng, std::size_t round) {
    const std::size_t n = 4 + rng() % 27;
    switch (round % 8) {
    case 0:
    case 1: {
        const std::uint64_t num = 1 + rng() % 19;
        return gnp(n, {num, 20}, rng());
    }
    case 2: return clique_union(random_sizes(rng, n, 1 + rng() % 8));
    case 3: return complete_multipartite(random_sizes(rng, n, 1 + rng() % 8));
    case 4: return split_graph(rng, 1 + rng() % 10, rng() % 20, 0.2 + 0.6 * (rng() % 10) / 10.0);
    case 5: return chain_graph(rng, 2 + rng() % 14, 2 + rng() % 14);
    case 6: return gnp(n, {1 + rng() % 19, 20}, rng()).complement();
    default: {
        const Graph base = named::cycle(5);
        std::vector<std::size_t> sizes(5);
        for (auto& s : sizes) s = 1 + rng() % 5;
        return blowup(base, sizes);
    }
    }
}

const std::vector<std::pair<std::string, StarForest>>& bound_patterns() {
    static const std::vector<std::pair<std::string, StarForest>> p{{"K1,2", StarForest({2})},
                                                                   {"K1,3", StarForest({3})},
                                                                   {"2K2", StarForest({1, 1})},
                                                                   {"K1,2+K2", StarForest({1, 2})}};
    return p;
}

// ---------------------------------------------------------------------------
// 2. End-to-end bound on at least 300 H-free instances per pattern.

Outcome end_to_end_bound() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream d;
    std::uint64_t seed = 1000;
    for (const auto& [name, h] : bound_patterns()) {
        std::mt19937_64 rng(seed++);
        std::size_t found = 0;
        std::size_t max_n = 0;
        std::size_t max_omega = 0;
        for (std::size_t round = 0; found < 300 && round < 200000; ++round) {
            const Graph g = candidate(rng, round);
            if (!is_h_free(g, h)) continue;
            ++found;
            max_n = std::max(max_n, g.order());
            try {
                const auto r = color_star_forest_free(g, h);
                if (!r.bound_guaranteed) o.fail(name + ": check was skipped");
                if (!verify_coloring(g, r.coloring)) o.fail(name + ": improper coloring on " + write_graph6(g));
                if (!verify_bound(g, r.coloring, r.certificate)) o.fail(name + ": bound exceeded on " + write_graph6(g));
                max_omega = std::max(max_omega, r.omega);
            } catch (const std::exception& e) {
                o.fail(name + ": " + e.what() + " on " + write_graph6(g));
            }
        }
        if (found < 300) o.fail(name + ": only " + std::to_string(found) + " instances");
        d << name << " " << found << " (n<=" << max_n << ", omega<=" << max_omega << "); ";
    }
    const double secs = seconds_since(start);
    if (secs >= 600) o.fail("runtime exceeds 10 minutes");
    d << std::fixed << std::setprecision(1) << secs << " s";
    o.detail = d.str();
    return o;
}

// ---------------------------------------------------------------------------
// 3. Forced decomposition.

Outcome forced_decomposition() {
    Outcome o;
    std::mt19937_64 rng(77);
    ColorerConfig cfg;
    cfg.degree_threshold_override = 1;
    std::size_t runs = 0;
    std::size_t decomposing = 0;
    std::size_t nodes = 0;
    std::size_t max_depth = 0;

    auto attempt = [&](const Graph& g, const StarForest& h) {
        if (!is_h_free(g, h)) return;
        ++runs;
        try {
            const auto r = color_star_forest_free(g, h, cfg);
            const auto stats = trace_stats(r.trace);
            if (stats.decompose > 0) ++decomposing;
            nodes += stats.decompose;
            max_depth = std::max(max_depth, stats.depth);
            if (!verify_coloring(g, r.coloring)) o.fail("improper coloring on " + write_graph6(g));
            for (const auto& v : check_trace(g, r.coloring, r.trace, {true}))
                o.fail(h.to_string() + " on " + write_graph6(g) + ": " + v);
        } catch (const std::exception& e) {
            o.fail(h.to_string() + " on " + write_graph6(g) + ": " + e.what());
        }
    };

    for (int i = 0; i < 40; ++i) {
        const std::size_t a = 8 + rng() % 8;
        const std::size_t b = 8 + rng() % 8;
        attempt(complete_multipartite({a, b}), StarForest({1, 1}));
        attempt(complete_multipartite({a, b}), StarForest({1, 2}));
    }
    for (int i = 0; i < 40; ++i) attempt(chain_graph(rng, 4 + rng() % 12, 8 + rng() % 10), StarForest({1, 1}));
    for (int i = 0; i < 30; ++i) {
        std::vector<std::size_t> parts(3);
        for (auto& p : parts) p = 4 + rng() % 5;
        attempt(complete_multipartite(parts), StarForest({0, 1}));
        attempt(complete_multipartite(parts), StarForest({0, 0, 1}));
    }
    for (int i = 0; i < 10; ++i) {
        // Two disjoint complete bipartite graphs: 3K2-free, and the blocks
        // left after peeling one edge decompose again.
        const std::size_t a = 8 + rng() % 3;
        const Graph left = complete_multipartite({a, a});
        GraphBuilder b(4 * a);
        for (const auto& [u, v] : left.edges()) {
            b.add_edge(u, v);
            b.add_edge(static_cast<Vertex>(u + 2 * a), static_cast<Vertex>(v + 2 * a));
        }
        attempt(std::move(b).build(), StarForest({1, 1, 1}));
    }

    if (decomposing < 100) o.fail("only " + std::to_string(decomposing) + " runs decomposed");
    o.detail = std::to_string(runs) + " runs, " + std::to_string(decomposing) + " decomposed, " +
               std::to_string(nodes) + " decompose nodes, max depth " + std::to_string(max_depth);
    return o;
}

// ---------------------------------------------------------------------------
// 4. Oracle equivalence.

StarForest random_pattern(std::mt19937_64& rng) {
    const int total = 1 + static_cast<int>(rng() % 5);
    std::vector<int> stars;
    int left = total;
    while (left > 0) {
        const int size = 1 + static_cast<int>(rng() % left);
        stars.push_back(size - 1);
        left -= size;
    }
    return StarForest(stars);
}

Outcome oracle_equivalence() {
    Outcome o;
    std::mt19937_64 rng(4242);
    std::size_t contained = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Graph g = named::random(rng() % 10, 0.1 + 0.8 * (rng() % 100) / 100.0, rng);
        const StarForest h = random_pattern(rng);
        const auto e = contains_induced_star_forest(g, h);
        if (e.has_value() != brute::contains_induced(g, h))
            o.fail("containment disagrees: " + write_graph6(g) + " " + h.to_string());
        if (e) {
            ++contained;
            if (!is_valid_embedding(g, h, *e)) o.fail("invalid embedding: " + write_graph6(g) + " " + h.to_string());
        }
    }
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = named::random(1 + rng() % 10, 0.1 + 0.8 * (rng() % 100) / 100.0, rng);
        if (chromatic_number_exact(g) != brute::chromatic_number(g)) o.fail("chi disagrees: " + write_graph6(g));
    }
    o.detail = "1000 containment pairs (" + std::to_string(contained) + " contained), 200 chromatic numbers";
    return o;
}

// ---------------------------------------------------------------------------
// 5. Exponent certificates.

Outcome exponent_certificates() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    std::size_t levels = 0;
    std::ostringstream d;
    for (const auto& [name, h] : bound_patterns()) {
        const auto cert = compute_exponent(h);
        d << name << " c=" << cert.final_c << "; ";
        for (const auto& lvl : cert.levels) {
            if (lvl.kind != ExponentLevel::Kind::peel) continue;
            ++levels;
            if (!verify_exponent_inequality(lvl.k, lvl.c_prev, lvl.c, 1'000'000))
                o.fail(name + ": inequality fails at k=" + std::to_string(lvl.k));
            if (!verify_accounting_inequality(lvl.k, lvl.c_prev, lvl.c, 1'000'000))
                o.fail(name + ": palette budget fails at k=" + std::to_string(lvl.k));
        }
    }
    if (compute_exponent(StarForest({1, 1})).final_c != 7) o.fail("2K2 does not give c = 7");
    const double secs = seconds_since(start);
    if (secs >= 60) o.fail("runtime exceeds 1 minute");
    d << levels << " peel levels to x = 10^6, " << std::fixed << std::setprecision(1) << secs << " s";
    o.detail = d.str();
    return o;
}

// ---------------------------------------------------------------------------
// 6. Known values.

Outcome known_values() {
    Outcome o;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) o.fail(what);
    };
    const Graph c5 = named::cycle(5);
    expect(clique_number(c5) == 2 && brute::clique_number(c5) == 2, "omega(C5) != 2");
    expect(chromatic_number_exact(c5) == 3 && brute::chromatic_number(c5) == 3, "chi(C5) != 3");
    expect(is_h_free(c5, StarForest({3})) && !brute::contains_induced(c5, StarForest({3})), "C5 contains a claw");
    const auto r = color_star_forest_free(c5, StarForest({3}));
    expect(verify_coloring(c5, r.coloring) && r.coloring.colors_used() <= 8, "C5 colored with more than 8 colors");

    const Graph groetzsch = mycielski(c5);
    expect(groetzsch.order() == 11 && groetzsch.size() == 20, "Groetzsch graph has the wrong size");
    expect(clique_number(groetzsch) == 2 && brute::clique_number(groetzsch) == 2, "omega(Groetzsch) != 2");
    expect(chromatic_number_exact(groetzsch) == 4 && brute::chromatic_number(groetzsch) == 4, "chi(Groetzsch) != 4");

    const Graph petersen = named::petersen();
    expect(clique_number(petersen) == 2 && brute::clique_number(petersen) == 2, "omega(Petersen) != 2");
    expect(stability_number(petersen) == 4 && brute::alpha(petersen) == 4, "alpha(Petersen) != 4");
    expect(chromatic_number_exact(petersen) == 3 && brute::chromatic_number(petersen) == 3, "chi(Petersen) != 3");
    o.detail = "C5 (" + std::to_string(r.coloring.colors_used()) + " colors), Groetzsch, Petersen";
    return o;
}

// ---------------------------------------------------------------------------
// 7. Determinism, in-process and through the binary.

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::string library_run() {
    std::string out;
    GenSpec spec = parse_genspec(
        R"({"family":"rejection_h_free","base":{"family":"gnp","n":22,"p":[3,4]},"pattern":"2xK2","max_tries":5000,"seed":11})");
    const auto g = generate(spec);
    if (!g) return "no graph";
    out += write_graph6(*g) + "\n";
    const auto r = color_star_forest_free(*g, StarForest({1, 1}));
    for (Color c : r.coloring.colors) out += std::to_string(c) + " ";
    out += to_json(r.trace).dump();
    ColorerConfig cfg;
    cfg.degree_threshold_override = 1;
    const Graph k = complete_multipartite({9, 11});
    out += to_json(color_star_forest_free(k, StarForest({1, 2}), cfg).trace).dump();
    return out;
}

Outcome determinism(const std::string& binary) {
    Outcome o;
    if (library_run() != library_run()) o.fail("library pipeline differs between runs");
    if (binary.empty()) {
        o.fail("no starcolor binary given");
        return o;
    }

    const fs::path dir = fs::temp_directory_path() / ("starcolor_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir / "corpus");
    {
        std::ofstream(dir / "spec.json")
            << R"({"family":"rejection_h_free","base":{"family":"gnp","n":20,"p":[4,5]},"pattern":"2xK2","max_tries":5000,"seed":3})";
        std::ofstream(dir / "specs.json")
            << R"([{"family":"gnp","n":15,"p":[9,10],"seed":1},{"family":"clique_union","sizes":[4,4,4]},)"
            << R"({"family":"complete_multipartite","sizes":[8,9]}])";
        std::ofstream(dir / "corpus" / "a.g6") << write_graph6(complete_multipartite({8, 10})) << "\n"
                                               << write_graph6(mycielski(named::cycle(5))) << "\n";
        std::ofstream(dir / "corpus" / "b.col") << write_dimacs_col(named::petersen());
    }
    // Each pass runs in its own directory with the same relative paths, so
    // the outputs (which name their trace file) must match byte for byte.
    const std::string bin = "'" + fs::absolute(binary).string() + "'";
    const std::vector<std::string> cmds{
        bin + " gen ../spec.json > gen.g6",
        bin + " color gen.g6 2xK2 --trace trace.json --coloring col.txt > report.json",
        bin + " color ../corpus/b.col K1,2+K2 --threshold-override 1 --trace ftrace.json --coloring fcol.txt > freport.json",
        bin + " color ../corpus/a.g6 2xK2 --no-check > multi.txt 2>&1; true",
        bin + " bench ../corpus 2xK2 --out bench.csv",
        bin + " bench ../specs.json 2xK2 --seed 5 --out sbench.csv",
        bin + " oracle ramsey 3 gen.g6 > ramsey.txt",
        bin + " verify gen.g6 col.txt --pattern 2xK2 > verify.txt",
    };
    std::size_t commands = 0;
    for (const char* pass : {"run1", "run2"}) {
        fs::create_directories(dir / pass);
        for (const auto& c : cmds) {
            ++commands;
            const std::string full = "cd '" + (dir / pass).string() + "' && " + c;
            const int status = std::system(full.c_str());
            if (status != 0) o.fail("command failed (" + std::to_string(status) + "): " + c);
        }
    }
    std::size_t compared = 0;
    for (const auto& entry : fs::directory_iterator(dir / "run1")) {
        const auto other = dir / "run2" / entry.path().filename();
        ++compared;
        const std::string name = entry.path().filename().string();
        if (!fs::exists(other) || read_file(entry.path()) != read_file(other)) o.fail(name + " differs");
        if (fs::file_size(entry.path()) == 0) o.fail(name + " is empty");
    }
    if (compared < 10) o.fail("only " + std::to_string(compared) + " outputs produced");
    fs::remove_all(dir);
    o.detail = std::to_string(commands) + " CLI invocations, " + std::to_string(compared) +
               " outputs byte-identical; library pipeline repeated";
    return o;
}

} // namespace

int main(int argc, char** argv) {
    const std::string binary = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 ramsey bound, all graphs on <= 6 vertices", ramsey_exhaustive},
        {"2 end-to-end color bound", end_to_end_bound},
        {"3 forced decomposition invariants", forced_decomposition},
        {"4 oracle equivalence", oracle_equivalence},
        {"5 exponent certificates", exponent_certificates},
        {"6 known values", known_values},
        {"7 determinism", [&] { return determinism(binary); }},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << ": " << o.detail << '\n';
        for (const auto& p : o.problems) std::cout << "        " << p << '\n';
        std::cout.flush();
        if (!o.pass) ++failures;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
