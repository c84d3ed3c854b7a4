#include "cli_runner.hpp"
#include "linkless/graph_io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace linkless;
using support::run_cli;

namespace {

auto temp_path(const std::string & name) -> std::string
{
    return std::string(LINKLESS_TMP_DIR) + "/" + name;
}

auto first_line(const std::string & s) -> std::string
{
    return s.substr(0, s.find('\n'));
}

} // namespace

TEST_CASE("il-check exit codes")
{
    auto k6 = run_cli("il-check 'E~~w'");
    CHECK(k6.code == 10);
    CHECK(first_line(k6.out) == "IL (witness: K6)");
    auto k5 = run_cli("il-check 'D~{'");
    CHECK(k5.code == 0);
    CHECK(first_line(k5.out).rfind("NIL", 0) == 0);
}

TEST_CASE("pair on the empty 13-vertex graph")
{
    auto r = run_cli("pair '" + to_graph6(Graph(13)) + "'");
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "cG IL via edge-bound");
}

TEST_CASE("complement and contract print graph6")
{
    auto c = run_cli("complement 'E~~w'");
    CHECK(c.code == 0);
    CHECK(c.out == "E???\n");
    auto k = run_cli("contract 'Bw' 0 2");
    CHECK(k.code == 0);
    CHECK(k.out == "A_\n");
    CHECK(run_cli("contract 'Bw' 0 7").code == 2);
}

TEST_CASE("planar and minor")
{
    auto p = run_cli("planar 'C~'");
    CHECK(p.code == 0);
    CHECK(p.out == "planar\n");
    auto np = run_cli("planar 'D~{'");
    CHECK(first_line(np.out) == "nonplanar (witness: K5)");
    auto m = run_cli("minor 'E~~w' 'D~{'");
    CHECK(m.code == 0);
    CHECK(first_line(m.out) == "minor");
    CHECK(first_line(run_cli("minor 'D~{' 'E~~w'").out) == "no minor");
}

TEST_CASE("family listing")
{
    auto r = run_cli("family");
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "K6 E~~w");
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);
}

TEST_CASE("certificate round trip through files")
{
    auto r = run_cli("il-check 'E~~w'");
    auto cert = r.out.substr(r.out.find('\n') + 1);
    auto good = temp_path("k6.cert");
    std::ofstream(good) << cert;
    auto ok = run_cli("verify-cert '" + good + "'");
    CHECK(ok.code == 0);
    CHECK(first_line(ok.out).rfind("valid", 0) == 0);

    // Two branch sets share vertex 0.
    auto bad = temp_path("bad.cert");
    std::ofstream(bad) << "A_\nBw\n0\n0 1\n";
    auto invalid = run_cli("verify-cert '" + bad + "'");
    CHECK(invalid.code == 1);
    CHECK(first_line(invalid.out) == "invalid");

    auto junk = temp_path("junk.cert");
    std::ofstream(junk) << "not a certificate\n";
    CHECK(run_cli("verify-cert '" + junk + "'").code == 2);

    CHECK(run_cli("verify-cert '" + support::data_file("paley_k7.cert") + "'").code == 0);
}

TEST_CASE("edge-list file input")
{
    auto path = temp_path("k6.edges");
    std::ofstream(path) << to_edge_list(Graph::complete(6));
    CHECK(run_cli("il-check '" + path + "'").code == 10);
    CHECK(run_cli("il-check '" + support::data_file("paley13.g6") + "'").code == 2);
}

TEST_CASE("graph6 printed by the CLI parses back")
{
    for (const char * g : {"E~~w", "Bw", "LlthgsL`mEkLkL", "Gsfu@g"}) {
        auto r = run_cli(std::string("complement '") + g + "'");
        REQUIRE(r.code == 0);
        auto text = first_line(r.out);
        CHECK(complement(from_graph6(text)) == from_graph6(g));
    }
}

TEST_CASE("malformed input exits 2 with a byte offset")
{
    auto truncated = run_cli("il-check 'E~'");
    CHECK(truncated.code == 2);
    CHECK(truncated.out.find("got 2") != std::string::npos);
    auto bad_byte = run_cli("il-check 'E~ w'");
    CHECK(bad_byte.code == 2);
    CHECK(bad_byte.out.find("byte 2") != std::string::npos);
    CHECK(std::count(bad_byte.out.begin(), bad_byte.out.end(), '\n') == 1);
    CHECK(run_cli("il-check 'E~~w?'").code == 2);
    CHECK(run_cli("il-check").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("verify-paper --bogus").code == 2);
    CHECK(run_cli("hunt 9").code == 2);
    CHECK(run_cli("il-check '" + to_graph6(Graph::complete(15)) + "'").code == 2);
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("hunt reports")
{
    auto r = run_cli("hunt 10 --budget 300 --seed 10");
    CHECK(r.code == 0);
    CHECK(r.out.find("n=10 iterations=300") != std::string::npos);
    auto empty = run_cli("hunt 12 --budget 0");
    CHECK(empty.code == 0);
    CHECK(empty.out.find("inconclusive") != std::string::npos);
}

TEST_CASE("verify-paper")
{
    auto log = temp_path("trials.log");
    auto r = run_cli("verify-paper --trials 50 --seed 7 --log '" + log + "'");
    CHECK(r.code == 0);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    auto text = support::slurp(log);
    CHECK(std::count(text.begin(), text.end(), '\n') == 50);
}
