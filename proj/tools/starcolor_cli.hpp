#ifndef starcolor_cli_hpp
#define starcolor_cli_hpp

// Command implementations for the `starcolor` tool. Kept in a header so the
// test suite can drive them in-process.
//
// Exit codes: 0 ok, 1 verification failed / no graph, 2 bad input,
// 3 input contains the pattern, 4 internal invariant broken, 5 scale cap hit.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "starcolor/starcolor.hpp"

namespace starcolor::cli {

enum exit_code : int { ok = 0, failed = 1, bad_input = 2, not_h_free = 3, invariant = 4, scale = 5 };

/// Unreadable file or unknown format.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

inline void dump(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

enum class Format { g6, dimacs };

inline Format sniff(const std::string& path, const std::string& flag) {
    if (flag == "g6" || flag == "graph6") return Format::g6;
    if (flag == "dimacs" || flag == "col") return Format::dimacs;
    if (!flag.empty()) throw InputError("unknown format " + flag);
    const auto ext = std::filesystem::path(path).extension().string();
    return (ext == ".col" || ext == ".dimacs") ? Format::dimacs : Format::g6;
}

/// All graphs in a file: one per line for graph6, exactly one for DIMACS.
inline std::vector<Graph> read_graphs(const std::string& path, const std::string& format, std::ostream& err) {
    const std::string text = slurp(path);
    if (sniff(path, format) == Format::g6) return read_graph6_lines(text);
    std::vector<std::string> warnings;
    Graph g = read_dimacs_col(text, &warnings);
    for (const auto& w : warnings) err << "warning: " << path << ": " << w << '\n';
    return {std::move(g)};
}

inline Graph read_one(const std::string& path, const std::string& format, std::ostream& err) {
    auto gs = read_graphs(path, format, err);
    if (gs.size() != 1) throw InputError(path + ": expected one graph, found " + std::to_string(gs.size()));
    return std::move(gs.front());
}

/// FNV-1a of the canonical graph6 string: a stable, platform-independent id.
inline std::string digest(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : write_graph6(g)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

inline nlohmann::ordered_json bigint_json(const BigInt& v) {
    if (v <= BigInt(std::numeric_limits<std::uint64_t>::max())) return static_cast<std::uint64_t>(v);
    return v.str();
}

inline std::string ratio(std::size_t used, const BigInt& bound) {
    if (bound == 0) return used == 0 ? "0" : "inf";
    // Six decimals, exact rounding down.
    const BigInt scaled = BigInt(used) * 1000000 / bound;
    const std::string digits = scaled.str();
    const std::string padded = std::string(digits.size() < 7 ? 7 - digits.size() : 0, '0') + digits;
    return padded.substr(0, padded.size() - 6) + "." + padded.substr(padded.size() - 6);
}

inline nlohmann::ordered_json embedding_json(const Embedding& e) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& s : e) out.push_back({{"center", s.center}, {"leaves", s.leaves}});
    return out;
}

inline std::string embedding_text(const Embedding& e) {
    std::string out;
    for (const auto& s : e) {
        if (!out.empty()) out += ' ';
        out += std::to_string(s.center) + "[";
        for (std::size_t i = 0; i < s.leaves.size(); ++i) out += (i ? "," : "") + std::to_string(s.leaves[i]);
        out += "]";
    }
    return out;
}

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------

struct ColorOptions {
    std::string graph;
    std::string pattern;
    std::string format;
    std::optional<bool> check;
    std::string trace_path;
    std::string coloring_path;
    std::optional<std::uint64_t> threshold_override;
    std::uint64_t enum_cap = 1'000'000;
    bool chi = false;
    std::size_t chi_cap = default_chromatic_cap;
    bool timing = false;
};

inline int cmd_color(const ColorOptions& o, std::ostream& out, std::ostream& err) {
    const Graph g = read_one(o.graph, o.format, err);
    const StarForest h = parse_pattern(o.pattern);
    ColorerConfig cfg;
    cfg.check_h_free = o.check;
    cfg.degree_threshold_override = o.threshold_override;
    cfg.enumeration_cap = o.enum_cap;

    const auto start = std::chrono::steady_clock::now();
    ColoringResult r;
    try {
        r = color_star_forest_free(g, h, cfg);
    } catch (const NotHFree& e) {
        nlohmann::ordered_json j;
        j["status"] = "NotHFree";
        j["pattern"] = h.to_string();
        j["embedding"] = embedding_json(e.embedding());
        out << j.dump(2) << '\n';
        err << "input contains " << h.to_string() << ": " << embedding_text(e.embedding()) << '\n';
        return not_h_free;
    }
    const double ms = elapsed_ms(start);

    const BigInt bound = color_bound(r.omega, r.certificate.final_c);
    const std::size_t used = r.coloring.colors_used();
    const TraceStats stats = trace_stats(r.trace);

    nlohmann::ordered_json j;
    j["status"] = "ok";
    j["input"] = digest(g);
    j["n"] = g.order();
    j["m"] = g.size();
    j["pattern"] = h.to_string();
    j["omega"] = r.omega;
    j["c"] = r.certificate.final_c;
    j["bound"] = bigint_json(bound);
    j["colors_used"] = used;
    j["palette_size"] = r.coloring.palette_size;
    j["ratio"] = ratio(used, bound);
    j["bound_guaranteed"] = r.bound_guaranteed;
    j["chi"] = nullptr;
    if (o.chi) j["chi"] = chromatic_number_exact(g, o.chi_cap);
    j["nodes"] = {{"greedy", stats.greedy},
                  {"base_star", stats.base_star},
                  {"decompose", stats.decompose},
                  {"depth", stats.depth}};
    j["trace"] = o.trace_path.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(o.trace_path);
    if (o.timing) j["time_ms"] = ms;

    if (!o.coloring_path.empty()) {
        std::string text;
        for (Vertex v = 0; v < g.order(); ++v) text += std::to_string(v) + '\t' + std::to_string(r.coloring.colors[v]) + '\n';
        dump(o.coloring_path, text);
    }
    if (!o.trace_path.empty()) {
        nlohmann::ordered_json t;
        t["input"] = digest(g);
        t["pattern"] = h.to_string();
        t["exponent"] = nlohmann::ordered_json::array();
        for (const auto& lvl : r.certificate.levels) {
            t["exponent"].push_back({{"kind", lvl.kind == ExponentLevel::Kind::base ? "base" : "peel"},
                                     {"k", lvl.k},
                                     {"c_prev", lvl.c_prev},
                                     {"c", lvl.c}});
        }
        t["root"] = to_json(r.trace);
        dump(o.trace_path, t.dump(1) + '\n');
    }
    out << j.dump(2) << '\n';
    return ok;
}

/// Reads vertex<TAB>color lines (any whitespace; '#' comments).
inline Coloring read_coloring(const std::string& text, std::size_t n) {
    Coloring col{std::vector<Color>(n, 0), 0};
    std::vector<bool> seen(n, false);
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::uint64_t v = 0;
        std::uint64_t c = 0;
        std::string extra;
        if (!(ls >> v >> c) || (ls >> extra)) throw ParseError("coloring: expected \"vertex color\"", lineno);
        if (v >= n) throw ParseError("coloring: vertex " + std::to_string(v) + " out of range", lineno);
        if (seen[v]) throw ParseError("coloring: vertex " + std::to_string(v) + " colored twice", lineno);
        seen[v] = true;
        col.colors[v] = c;
        col.palette_size = std::max<Color>(col.palette_size, c + 1);
    }
    for (std::size_t v = 0; v < n; ++v)
        if (!seen[v]) throw ParseError("coloring: vertex " + std::to_string(v) + " has no color", lineno);
    return col;
}

inline int cmd_verify(const std::string& graph, const std::string& coloring, const std::string& pattern,
                      const std::string& format, std::ostream& out, std::ostream& err) {
    const Graph g = read_one(graph, format, err);
    const Coloring col = read_coloring(slurp(coloring), g.order());
    if (!verify_coloring(g, col)) {
        for (const auto& [u, v] : g.edges()) {
            if (col.colors[u] == col.colors[v]) {
                out << "improper: edge " << u << ' ' << v << " has color " << col.colors[u] << '\n';
                break;
            }
        }
        return failed;
    }
    out << "proper, " << col.colors_used() << " colors\n";
    if (pattern.empty()) return ok;
    const StarForest h = parse_pattern(pattern);
    const auto cert = compute_exponent(h);
    const BigInt bound = color_bound(clique_number(g), cert.final_c);
    const bool within = verify_bound(g, col, cert);
    out << (within ? "within" : "exceeds") << " bound " << bound.str() << " (c = " << cert.final_c << ")\n";
    return within ? ok : failed;
}

inline int cmd_oracle(const std::string& which, const std::string& arg, const std::string& graph,
                      const std::string& format, std::size_t cap, std::ostream& out, std::ostream& err) {
    const Graph g = read_one(graph, format, err);
    if (which == "omega") {
        out << clique_number(g) << '\n';
    } else if (which == "alpha") {
        out << stability_number(g) << '\n';
    } else if (which == "chi") {
        out << chromatic_number_exact(g, cap) << '\n';
    } else if (which == "hfree") {
        const StarForest h = parse_pattern(arg);
        if (auto e = contains_induced_star_forest(g, h)) {
            out << "contains " << embedding_text(*e) << '\n';
        } else {
            out << "free\n";
        }
    } else if (which == "ramsey") {
        std::size_t pos = 0;
        unsigned long k = 0;
        try {
            k = std::stoul(arg, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != arg.size() || k == 0) throw ParseError("ramsey: k must be a positive integer", 0);
        const auto outcome = ramsey_witness(g, k);
        if (const auto* s = std::get_if<std::vector<Vertex>>(&outcome)) {
            out << "stable";
            for (Vertex v : *s) out << ' ' << v;
            out << '\n';
        } else {
            const auto& c = std::get<RamseyCertificate>(outcome);
            out << "certificate " << c.vertex_count << " ≤ " << c.bound.str() << '\n';
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// bench

struct BenchInstance {
    std::string name;
    std::optional<Graph> graph;
    std::string error;
};

inline std::uint64_t apply_seed(GenSpec& spec, std::optional<std::uint64_t> seed) {
    if (seed) spec.seed = *seed;
    return spec.seed;
}

/// Instances from a directory (graph6 / DIMACS files, sorted by name, one row
/// per graph6 line), a graph6 or DIMACS file, or a JSON array of GenSpecs.
inline std::vector<BenchInstance> load_corpus(const std::string& path, const std::string& format,
                                              std::optional<std::uint64_t> seed, std::ostream& err) {
    namespace fs = std::filesystem;
    std::vector<BenchInstance> out;
    auto add_file = [&](const fs::path& p, const std::string& label) {
        try {
            const auto gs = read_graphs(p.string(), format, err);
            if (gs.size() == 1) {
                out.push_back({label, gs.front(), {}});
            } else {
                for (std::size_t i = 0; i < gs.size(); ++i) out.push_back({label + ":" + std::to_string(i + 1), gs[i], {}});
            }
        } catch (const std::exception& e) {
            out.push_back({label, std::nullopt, std::string("ParseError: ") + e.what()});
        }
    };
    if (fs::is_directory(path)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(path)) {
            const auto ext = entry.path().extension().string();
            if (entry.is_regular_file() && (ext == ".g6" || ext == ".graph6" || ext == ".col" || ext == ".dimacs"))
                files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& f : files) add_file(f, f.filename().string());
        return out;
    }
    if (fs::path(path).extension() == ".json") {
        const auto j = nlohmann::json::parse(slurp(path), nullptr, false);
        if (j.is_discarded() || !j.is_array()) throw ParseError("bench: expected a JSON array of generator specs", 0);
        for (std::size_t i = 0; i < j.size(); ++i) {
            const std::string label = "spec" + std::to_string(i + 1);
            try {
                GenSpec spec = genspec_from_json(j[i]);
                if (seed) spec = reseed(spec, *seed + i);
                auto g = generate(spec);
                if (g) {
                    out.push_back({label, std::move(*g), {}});
                } else {
                    out.push_back({label, std::nullopt, "NoGraph"});
                }
            } catch (const std::exception& e) {
                out.push_back({label, std::nullopt, std::string("ParseError: ") + e.what()});
            }
        }
        return out;
    }
    add_file(path, std::filesystem::path(path).filename().string());
    return out;
}

inline std::string csv_field(std::string s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch == '\n' ? ' ' : ch;
    }
    return q + "\"";
}

struct BenchOptions {
    std::string corpus;
    std::string pattern;
    std::string out_path;
    std::string format;
    std::optional<bool> check;
    std::optional<std::uint64_t> threshold_override;
    std::uint64_t enum_cap = 1'000'000;
    std::size_t chi_cap = default_chromatic_cap;
    std::optional<std::uint64_t> seed;
    bool timing = false;
};

inline const char* bench_header() {
    return "# starcolor-bench v1\ninstance,n,m,omega,chi_exact,colors_used,bound,ratio,time_ms,status\n";
}

inline std::string bench_row(const BenchInstance& inst, const StarForest& h, const BenchOptions& o) {
    std::vector<std::string> f(10);
    f[0] = csv_field(inst.name);
    const Graph& g = *inst.graph;
    f[1] = std::to_string(g.order());
    f[2] = std::to_string(g.size());
    ColorerConfig cfg;
    cfg.check_h_free = o.check;
    cfg.degree_threshold_override = o.threshold_override;
    cfg.enumeration_cap = o.enum_cap;
    const auto start = std::chrono::steady_clock::now();
    try {
        const auto r = color_star_forest_free(g, h, cfg);
        const double ms = elapsed_ms(start);
        const BigInt bound = color_bound(r.omega, r.certificate.final_c);
        f[3] = std::to_string(r.omega);
        if (g.order() <= o.chi_cap) f[4] = std::to_string(chromatic_number_exact(g, o.chi_cap));
        f[5] = std::to_string(r.coloring.colors_used());
        f[6] = bound.str();
        f[7] = ratio(r.coloring.colors_used(), bound);
        if (o.timing) {
            std::ostringstream os;
            os << std::fixed << std::setprecision(3) << ms;
            f[8] = os.str();
        }
        f[9] = "ok";
    } catch (const NotHFree&) {
        f[9] = "NotHFree";
    } catch (const InvariantViolation& e) {
        f[9] = csv_field(std::string("InvariantViolation: ") + e.what());
    } catch (const EnumerationCapExceeded&) {
        f[9] = "EnumerationCapExceeded";
    } catch (const OracleScaleError&) {
        f[9] = "OracleScaleError";
    }
    std::string row;
    for (std::size_t i = 0; i < f.size(); ++i) row += (i ? "," : "") + f[i];
    return row + '\n';
}

inline int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
    const StarForest h = parse_pattern(o.pattern);
    const auto corpus = o.corpus.empty() ? std::vector<BenchInstance>{} : load_corpus(o.corpus, o.format, o.seed, err);
    std::string csv = bench_header();
    for (const auto& inst : corpus) {
        if (inst.graph) {
            csv += bench_row(inst, h, o);
        } else {
            csv += csv_field(inst.name) + ",,,,,,,,," + csv_field(inst.error) + '\n';
        }
    }
    if (o.out_path.empty() || o.out_path == "-") {
        out << csv;
    } else {
        dump(o.out_path, csv);
    }
    return ok;
}

inline int cmd_gen(const std::string& spec_arg, std::optional<std::uint64_t> seed, std::ostream& out,
                   std::ostream& err) {
    const std::string text = (!spec_arg.empty() && spec_arg.front() == '{') ? spec_arg : slurp(spec_arg);
    GenSpec spec = parse_genspec(text);
    apply_seed(spec, seed);
    const auto g = generate(spec);
    if (!g) {
        err << "no graph: " << spec.max_tries << " attempts all contained " << spec.pattern << '\n';
        return failed;
    }
    out << write_graph6(*g) << '\n';
    return ok;
}

// ---------------------------------------------------------------------------

/// Parses argv and dispatches; never throws.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Color graphs that exclude an induced star forest, with exact oracles."};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format;
    app.add_option("--format", format, "Input format: g6 or dimacs (default: by extension)")
        ->check(CLI::IsMember({"g6", "graph6", "dimacs", "col"}));

    bool check_on = false;
    bool check_off = false;
    std::optional<std::uint64_t> threshold;
    std::uint64_t enum_cap = 1'000'000;
    std::size_t cap = default_chromatic_cap;
    std::optional<std::uint64_t> seed;
    bool timing = false;

    auto add_color_flags = [&](CLI::App* sub) {
        auto* on = sub->add_flag("--check", check_on, "Verify the input is H-free first (default up to 60 vertices)");
        sub->add_flag("--no-check", check_off, "Skip the H-free check")->excludes(on);
        sub->add_option("--threshold-override", threshold, "Split vertices of degree >= T (forces decomposition)");
        sub->add_option("--enum-cap", enum_cap, "Maximum stable subsets enumerated per node");
        sub->add_option("--cap", cap, "Vertex cap for the exact chromatic number");
        sub->add_flag("--timing", timing, "Report wall time (output is then not reproducible)");
    };

    ColorOptions co;
    auto* color = app.add_subcommand("color", "Color a graph and print a JSON report");
    color->add_option("graph", co.graph, "Graph file (graph6 or DIMACS; - for stdin)")->required();
    color->add_option("pattern", co.pattern, "Excluded star forest, e.g. star:3+star:1 or K1,3+2xK2")->required();
    color->add_option("--trace", co.trace_path, "Write the decomposition trace JSON here");
    color->add_option("--coloring", co.coloring_path, "Write vertex<TAB>color lines here");
    color->add_flag("--chi", co.chi, "Also compute the exact chromatic number");
    add_color_flags(color);

    std::string v_graph, v_coloring, v_pattern;
    auto* verify = app.add_subcommand("verify", "Check a coloring file against a graph");
    verify->add_option("graph", v_graph)->required();
    verify->add_option("coloring", v_coloring)->required();
    verify->add_option("--pattern", v_pattern, "Also check the color bound for this pattern");

    std::string o_graph, o_arg;
    auto* oracle = app.add_subcommand("oracle", "Exact values: omega, alpha, chi, hfree, ramsey");
    oracle->require_subcommand(1);
    oracle->fallthrough();
    oracle->add_option("--cap", cap, "Vertex cap for chi");
    for (const char* name : {"omega", "alpha", "chi"}) oracle->add_subcommand(name)->add_option("graph", o_graph)->required();
    auto* hfree = oracle->add_subcommand("hfree", "Search for an induced copy of a pattern");
    hfree->add_option("pattern", o_arg)->required();
    hfree->add_option("graph", o_graph)->required();
    auto* ramsey = oracle->add_subcommand("ramsey", "Stable k-set or the size certificate");
    ramsey->add_option("k", o_arg)->required();
    ramsey->add_option("graph", o_graph)->required();

    BenchOptions bo;
    auto* bench = app.add_subcommand("bench", "Color every instance of a corpus and write CSV");
    bench->add_option("corpus", bo.corpus, "Directory, graph file, or JSON array of generator specs");
    bench->add_option("pattern", bo.pattern)->required();
    bench->add_option("--out", bo.out_path, "CSV path (default stdout)");
    bench->add_option("--seed", seed, "Reseed generator specs");
    add_color_flags(bench);

    std::string g_spec;
    auto* gen = app.add_subcommand("gen", "Generate a graph from a JSON spec, print graph6");
    gen->add_option("spec", g_spec, "Spec file, - for stdin, or inline JSON")->required();
    gen->add_option("--seed", seed, "Override the spec seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return bad_input;
    }

    const std::optional<bool> check = check_on ? std::optional<bool>(true)
                                               : check_off ? std::optional<bool>(false) : std::nullopt;
    try {
        if (*color) {
            co.format = format;
            co.check = check;
            co.threshold_override = threshold;
            co.enum_cap = enum_cap;
            co.chi_cap = cap;
            co.timing = timing;
            return cmd_color(co, out, err);
        }
        if (*verify) return cmd_verify(v_graph, v_coloring, v_pattern, format, out, err);
        if (*oracle) {
            for (const char* name : {"omega", "alpha", "chi", "hfree", "ramsey"}) {
                if (*oracle->get_subcommand(name)) return cmd_oracle(name, o_arg, o_graph, format, cap, out, err);
            }
        }
        if (*bench) {
            bo.format = format;
            bo.check = check;
            bo.threshold_override = threshold;
            bo.enum_cap = enum_cap;
            bo.chi_cap = cap;
            bo.seed = seed;
            bo.timing = timing;
            return cmd_bench(bo, out, err);
        }
        if (*gen) return cmd_gen(g_spec, seed, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return bad_input;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const InvariantViolation& e) {
        err << "invariant violated: " << e.what() << '\n' << e.node_json() << '\n';
        return invariant;
    } catch (const EnumerationCapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return scale;
    } catch (const OracleScaleError& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return scale;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return failed;
    }
    return failed;
}

} // namespace starcolor::cli

#endif // starcolor_cli_hpp
