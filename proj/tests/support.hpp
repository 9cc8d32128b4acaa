#ifndef laminar_tests_support_hpp
#define laminar_tests_support_hpp

// Test-only brute force. Nothing here calls the library's BFS or searches,
// so these helpers stay independent of the code they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "laminar/generators.hpp"
#include "laminar/graph.hpp"

namespace laminar::testing {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (Vertex u = 0; u < n; ++u) {
        d[u][u] = 0;
        for (Vertex v : g.neighbors(u)) {
            d[u][v] = 1;
        }
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

inline int fw_diameter(const std::vector<std::vector<int>>& d) {
    int diam = 0;
    for (const auto& row : d)
        for (int x : row) diam = std::max(diam, x);
    return diam;
}

// Every simple path with `length` edges, each orientation once
// (front < back), found by plain DFS over simple paths.
inline std::vector<std::vector<Vertex>> simple_paths_of_length(const Graph& g, int length) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    std::vector<char> on(g.vertex_count(), 0);
    std::function<void(Vertex)> dfs = [&](Vertex v) {
        stack.push_back(v);
        on[v] = 1;
        if (static_cast<int>(stack.size()) - 1 == length) {
            if (length == 0 || stack.front() < stack.back()) out.push_back(stack);
        } else {
            for (Vertex w : g.neighbors(v))
                if (!on[w]) dfs(w);
        }
        on[v] = 0;
        stack.pop_back();
    };
    for (Vertex v = 0; v < g.vertex_count(); ++v) dfs(v);
    return out;
}

// Diametral paths by the definition: simple, length diam, and shortest.
inline std::vector<std::vector<Vertex>> brute_diametral_paths(const Graph& g) {
    auto d = floyd_warshall(g);
    int diam = fw_diameter(d);
    std::vector<std::vector<Vertex>> out;
    for (auto& p : simple_paths_of_length(g, diam))
        if (d[p.front()][p.back()] == diam) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

inline int brute_radius_of_path(const std::vector<std::vector<int>>& d,
                                const std::vector<Vertex>& path) {
    int worst = 0;
    for (std::size_t y = 0; y < d.size(); ++y) {
        int best = kInf;
        for (Vertex v : path) best = std::min(best, d[y][v]);
        worst = std::max(worst, best);
    }
    return worst;
}

// Seeded connected G(n, p) by rejection on consecutive seeds.
inline Graph connected_gnp(std::size_t n, double p, std::uint64_t& seed) {
    while (true) {
        Graph g = gnp(n, p, seed++);
        auto d = floyd_warshall(g);
        if (fw_diameter(d) < kInf) return g;
    }
}

inline Vertex v_of(const Graph& g, const char* label) { return g.at(label); }

inline std::vector<Vertex> ids(const Graph& g, std::initializer_list<const char*> labels) {
    std::vector<Vertex> out;
    for (auto* l : labels) out.push_back(g.at(l));
    return out;
}

}

#endif /* laminar_tests_support_hpp */
