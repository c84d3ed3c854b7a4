#ifndef LINKLESS_TESTS_SUPPORT_HPP
#define LINKLESS_TESTS_SUPPORT_HPP

#include "linkless/graph.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace support {

// Edge-probability graphs so small samples cover sparse and dense cases.
inline auto random_graph(int n, double p, std::mt19937_64 & rng) -> linkless::Graph
{
    std::bernoulli_distribution coin(p);
    std::vector<linkless::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.push_back({u, v});
    return linkless::Graph::from_edges(n, edges);
}

inline auto random_perm(int n, std::mt19937_64 & rng) -> std::vector<int>
{
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

inline auto slurp(const std::string & path) -> std::string
{
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline auto data_file(const std::string & name) -> std::string
{
    return std::string(LINKLESS_DATA_DIR) + "/" + name;
}

} // namespace support

#endif
