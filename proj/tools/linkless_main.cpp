// linkless: command-line front end for the minor engine and the
// linkedness checks. Exit codes: 0 success (NIL for il-check), 10 IL from
// il-check, 1 a check failed, 2 malformed input or usage.

#include "linkless/graph_io.hpp"
#include "linkless/harness.hpp"
#include "linkless/iso.hpp"
#include "linkless/linkedness.hpp"
#include "linkless/minor.hpp"
#include "linkless/petersen.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace linkless;

namespace {

constexpr int exit_il = 10;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

auto read_file(const std::string & path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw Error(ErrorKind::Parse, "cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// A graph argument is an edge-list file if such a file exists, otherwise
/// a graph6 string.
auto load_graph(const std::string & arg) -> Graph
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec))
        return from_edge_list(read_file(arg));
    return from_graph6(arg);
}

void print_model(const MinorModel & m)
{
    std::cout << to_certificate(m);
}

auto cmd_il_check(const std::string & input) -> int
{
    auto g = load_graph(input);
    auto cert = is_il(g);
    if (cert.verdict == Verdict::IL) {
        std::cout << "IL (witness: " << cert.witness_name << ")\n";
        print_model(*cert.witness);
        return exit_il;
    }
    std::cout << "NIL (exhausted:";
    for (const auto & name : cert.exhausted)
        std::cout << ' ' << name;
    std::cout << ")\n";
    return 0;
}

auto cmd_planar(const std::string & input) -> int
{
    auto result = is_planar(load_graph(input));
    if (result.planar) {
        std::cout << "planar\n";
        return 0;
    }
    std::cout << "nonplanar (witness: " << result.witness_name << ")\n";
    print_model(*result.witness);
    return 0;
}

auto cmd_minor(const std::string & host, const std::string & pattern) -> int
{
    auto model = find_minor(load_graph(host), load_graph(pattern));
    if (! model) {
        std::cout << "no minor\n";
        return 0;
    }
    std::cout << "minor\n";
    print_model(*model);
    return 0;
}

auto cmd_verify_cert(const std::string & path) -> int
{
    auto model = from_certificate(read_file(path));
    if (! validate_model(model)) {
        std::cout << "invalid\n";
        return exit_failed;
    }
    auto replayed = replay_model(model);
    std::cout << "valid (replay: " << to_graph6(replayed) << ")\n";
    return 0;
}

auto cmd_pair(const std::string & input) -> int
{
    auto verdict = pair_verdict(load_graph(input));
    switch (verdict.il_side) {
    case IlSide::G: std::cout << "G IL"; break;
    case IlSide::CG: std::cout << "cG IL"; break;
    case IlSide::BOTH: std::cout << "G and cG IL"; break;
    case IlSide::NEITHER: std::cout << "neither IL"; break;
    }
    std::cout << " via " << to_string(verdict.fired_rule) << '\n';
    for (const auto * cert : {&verdict.g_certificate, &verdict.cg_certificate}) {
        if (*cert && (*cert)->verdict == Verdict::IL) {
            std::cout << (cert == &verdict.g_certificate ? "G" : "cG") << " witness: " << (*cert)->witness_name << '\n';
            print_model(*(*cert)->witness);
        }
    }
    return 0;
}

class Sections {
public:
    void check(const std::string & name, bool ok, const std::string & detail)
    {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << ": " << detail << std::endl;
        _all &= ok;
    }

    template <typename F>
    void run(const std::string & name, F && body)
    {
        try {
            body();
        }
        catch (const std::exception & e) {
            check(name, false, e.what());
        }
    }

    auto all() const -> bool { return _all; }

private:
    bool _all = true;
};

auto cmd_verify_paper(int trials, std::uint64_t seed, int threads, const std::string & log_path) -> int
{
    Sections s;

    s.run("quadratic residues", [&] {
        auto qr = quadratic_residues(13);
        s.check("quadratic residues", qr == std::vector<int>{1, 3, 4, 9, 10, 12}, "{x^2 mod 13} = {1,3,4,9,10,12}");
    });

    s.run("paley13", [&] {
        auto p = build_paley13();
        auto srg = srg_params(p);
        bool regular = min_degree(p) == 6 && max_degree(p) == 6;
        s.check("paley13 edges", edge_count(p) == 39 && regular, std::to_string(edge_count(p)) + " edges, 6-regular");
        s.check("paley13 srg", srg == SrgParams{13, 6, 2, 3}, "parameters (13,6,2,3)");
        s.check("paley13 self-complementary", are_isomorphic(p, complement(p)), "isomorphic to its complement");
        auto cert = is_il(p);
        s.check("paley13 IL", cert.verdict == Verdict::IL && validate_model(*cert.witness), std::string("witness ") + cert.witness_name);
        auto k7 = find_k7_contraction(p);
        bool replay_ok = k7.resulting == Graph::complete(7) && validate_model(k7.model);
        std::string edges;
        for (auto e : k7.contraction_edges)
            edges += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
        s.check("paley13 K7 contraction", replay_ok && k7.contraction_edges.size() == 6, "contract" + edges);
    });

    s.run("petersen family", [&] {
        const auto & family = petersen_family();
        bool ok = family.size() == 7;
        std::string names;
        for (const auto & m : family) {
            ok &= edge_count(m.graph) == 15;
            names += " " + m.name;
        }
        s.check("petersen family", ok, std::to_string(family.size()) + " members:" + names);
    });

    s.run("ten-vertex pair", [&] {
        auto core = search_coplanar_core_8();
        auto pair = build_figure1_pair(core);
        s.check("ten-vertex pair", pair.g_certificate.verdict == Verdict::NIL && pair.cg_certificate.verdict == Verdict::NIL,
                "core " + to_graph6(core) + ", G " + to_graph6(pair.g) + " and cG both NIL");
    });

    s.run("case k=6", [&] {
        auto report = verify_case_k6_structure(build_paley13());
        int cycles = 0;
        for (const auto & v : report.vertices)
            cycles += v.shape == NeighbourhoodShape::SixCycle;
        s.check("case k=6 structure", report.consistent, std::to_string(cycles) + "/13 neighbourhoods are 6-cycles, 6/9/18 edge split everywhere");
    });

    s.run("theorem sampling", [&] {
        auto start = std::chrono::steady_clock::now();
        auto report = sample_theorem_13(trials, seed, threads);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream detail;
        detail << report.passed << "/" << report.trials << " pairs have an IL side (seed " << seed << ", " << secs << "s;";
        for (auto [rule, count] : report.rule_counts)
            detail << ' ' << to_string(rule) << '=' << count;
        detail << ')';
        if (! log_path.empty()) {
            std::ofstream log(log_path);
            for (const auto & r : report.records)
                log << to_log_line(r) << '\n';
        }
        s.check("theorem sampling", report.passed == report.trials, detail.str());
    });

    return s.all() ? 0 : exit_failed;
}

auto cmd_hunt(int n, long budget, std::uint64_t seed) -> int
{
    auto result = hunt_bicomplementary_nil(n, budget, seed);
    for (const auto & g : result.found)
        std::cout << to_graph6(g) << '\n';
    std::cout << "n=" << n << " iterations=" << result.iterations << " found=" << result.found.size();
    if (result.inconclusive)
        std::cout << " (inconclusive: nothing found, which proves nothing)";
    std::cout << '\n';
    return 0;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Minor-based intrinsic linkedness toolkit"};
    app.require_subcommand(1);

    std::function<int()> action;
    std::string g1, g2, path;
    int u = 0, v = 0;

    auto * il = app.add_subcommand("il-check", "decide intrinsic linkedness (exit 0 NIL, 10 IL)");
    il->add_option("graph", g1, "graph6 string or edge-list file")->required();
    il->callback([&] { action = [&] { return cmd_il_check(g1); }; });

    auto * planar = app.add_subcommand("planar", "planarity with a Kuratowski minor witness");
    planar->add_option("graph", g1, "graph6 string or edge-list file")->required();
    planar->callback([&] { action = [&] { return cmd_planar(g1); }; });

    auto * comp = app.add_subcommand("complement", "print the complement as graph6");
    comp->add_option("graph", g1, "graph6 string or edge-list file")->required();
    comp->callback([&] { action = [&] { std::cout << to_graph6(complement(load_graph(g1))) << '\n'; return 0; }; });

    auto * contract = app.add_subcommand("contract", "contract edge u-v and print graph6");
    contract->add_option("graph", g1, "graph6 string or edge-list file")->required();
    contract->add_option("u", u)->required();
    contract->add_option("v", v)->required();
    contract->callback([&] {
        action = [&] {
            auto g = load_graph(g1);
            if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v)
                throw Error(ErrorKind::OutOfRange, "edge endpoints out of range");
            std::cout << to_graph6(contract_edge(g, Edge::of(u, v))) << '\n';
            return 0;
        };
    });

    auto * minor = app.add_subcommand("minor", "search for a pattern minor in a host");
    minor->add_option("host", g1, "graph6 string or edge-list file")->required();
    minor->add_option("pattern", g2, "graph6 string or edge-list file")->required();
    minor->callback([&] { action = [&] { return cmd_minor(g1, g2); }; });

    auto * family = app.add_subcommand("family", "list the Petersen family");
    family->callback([&] {
        action = [&] {
            for (const auto & m : petersen_family())
                std::cout << m.name << ' ' << to_graph6(m.graph) << '\n';
            return 0;
        };
    });

    auto * verify = app.add_subcommand("verify-cert", "validate and replay a minor certificate file");
    verify->add_option("file", path)->required();
    verify->callback([&] { action = [&] { return cmd_verify_cert(path); }; });

    auto * pair = app.add_subcommand("pair", "decide which of G and its complement is IL");
    pair->add_option("graph", g1, "graph6 string or edge-list file")->required();
    pair->callback([&] { action = [&] { return cmd_pair(g1); }; });

    int trials = 1000;
    std::uint64_t seed = default_theorem_seed;
    int threads = 0;
    std::string log_path;
    auto * paper = app.add_subcommand("verify-paper", "replay every construction and sample the 13-vertex theorem");
    paper->add_option("--trials", trials)->check(CLI::PositiveNumber);
    paper->add_option("--seed", seed);
    paper->add_option("--threads", threads)->check(CLI::NonNegativeNumber);
    paper->add_option("--log", log_path, "write one record per trial");
    paper->callback([&] { action = [&] { return cmd_verify_paper(trials, seed, threads, log_path); }; });

    int n = 0;
    long budget = default_hunt_budget;
    std::uint64_t hunt_seed = default_hunt_seed;
    auto * hunt = app.add_subcommand("hunt", "search for graphs with both sides NIL");
    hunt->add_option("n", n)->required()->check(CLI::Range(10, 12));
    hunt->add_option("--budget", budget)->check(CLI::NonNegativeNumber);
    hunt->add_option("--seed", hunt_seed);
    hunt->callback([&] { action = [&] { return cmd_hunt(n, budget, hunt_seed); }; });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::Success & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        return action();
    }
    catch (const ParseError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const Error & e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return e.kind() == ErrorKind::OutOfRange || e.kind() == ErrorKind::NotAnEdge || e.kind() == ErrorKind::CapacityExceeded
                   ? exit_usage
                   : exit_failed;
    }
}
