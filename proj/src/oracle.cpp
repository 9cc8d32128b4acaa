#include "laminar/oracle.hpp"

#include <algorithm>
#include <string>

#include "laminar/error.hpp"

namespace laminar {

namespace {

// Multi-source BFS kept local to this file so the oracle does not share
// code paths with the layered searches it is checking.
std::vector<int> multi_source_distances(const Graph& g, std::span<const Vertex> sources,
                                        std::span<const char> blocked = {}) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<Vertex> queue;
    queue.reserve(g.vertex_count());
    for (Vertex s : sources) {
        if (dist[s] < 0 && (blocked.empty() || !blocked[s])) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] < 0 && (blocked.empty() || !blocked[w])) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<int> single_source(const Graph& g, Vertex s) {
    return multi_source_distances(g, std::span<const Vertex>(&s, 1));
}

struct AllPairs {
    std::vector<std::vector<int>> dist;
    int diameter = 0;
    bool connected = true;
};

AllPairs all_pairs(const Graph& g) {
    AllPairs ap;
    ap.dist.reserve(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        ap.dist.push_back(single_source(g, v));
        for (int d : ap.dist.back()) {
            if (d < 0) {
                ap.connected = false;
            }
            ap.diameter = std::max(ap.diameter, d);
        }
    }
    return ap;
}

void guard(const Graph& g, const OracleLimits& limits) {
    if (g.vertex_count() > limits.max_vertices) {
        throw SizeGuardError("oracle refuses graphs with more than " +
                             std::to_string(limits.max_vertices) + " vertices (got " +
                             std::to_string(g.vertex_count()) + ")");
    }
    if (g.empty()) {
        throw PreconditionError("graph has no vertices");
    }
}

// Every a -> b route that descends one level of dist_from_a at each step.
void enumerate_routes(const Graph& g, const std::vector<int>& dist_from_a, Vertex cur,
                      std::vector<Vertex>& stack, std::vector<Path>& out,
                      const OracleLimits& limits) {
    stack.push_back(cur);
    if (dist_from_a[cur] == 0) {
        if (out.size() >= limits.max_paths) {
            throw SizeGuardError("diametral path enumeration exceeded " +
                                 std::to_string(limits.max_paths) + " paths");
        }
        out.emplace_back(std::vector<Vertex>(stack.rbegin(), stack.rend()));
    } else {
        for (Vertex w : g.neighbors(cur)) {
            if (dist_from_a[w] == dist_from_a[cur] - 1) {
                enumerate_routes(g, dist_from_a, w, stack, out, limits);
            }
        }
    }
    stack.pop_back();
}

RecognitionOutcome outcome(bool verdict, int k) {
    RecognitionOutcome out;
    out.verdict = verdict;
    out.k = k;
    return out;
}

}

DiametralPathSet enumerate_diametral_paths(const Graph& g, const OracleLimits& limits) {
    guard(g, limits);
    AllPairs ap = all_pairs(g);
    if (!ap.connected) {
        throw PreconditionError("graph is not connected");
    }
    DiametralPathSet set;
    set.diameter = ap.diameter;
    if (ap.diameter == 0) {
        set.paths.emplace_back(std::vector<Vertex>{0});
        return set;
    }
    std::vector<Vertex> stack;
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        for (Vertex b = a + 1; b < g.vertex_count(); ++b) {
            if (ap.dist[a][b] == ap.diameter) {
                enumerate_routes(g, ap.dist[a], b, stack, set.paths, limits);
            }
        }
    }
    return set;
}

int domination_radius(const Graph& g, const Path& path) {
    auto dist = multi_source_distances(g, path.vertices());
    int radius = 0;
    for (int d : dist) {
        if (d < 0) {
            return -1;
        }
        radius = std::max(radius, d);
    }
    return radius;
}

RecognitionOutcome is_k_laminar_bf(const Graph& g, int k, const OracleLimits& limits) {
    if (k < 0) {
        throw PreconditionError("k must be non-negative");
    }
    auto set = enumerate_diametral_paths(g, limits);
    for (const auto& p : set.paths) {
        if (domination_radius(g, p) <= k) {
            auto out = outcome(true, k);
            out.witness = p;
            return out;
        }
    }
    return outcome(false, k);
}

RecognitionOutcome is_strongly_k_laminar_bf(const Graph& g, int k, const OracleLimits& limits) {
    if (k < 0) {
        throw PreconditionError("k must be non-negative");
    }
    auto set = enumerate_diametral_paths(g, limits);
    for (const auto& p : set.paths) {
        auto dist = multi_source_distances(g, p.vertices());
        auto far = std::max_element(dist.begin(), dist.end());
        if (*far > k) {
            auto out = outcome(false, k);
            out.counterexample = Counterexample{static_cast<Vertex>(far - dist.begin()), p};
            return out;
        }
    }
    auto out = outcome(true, k);
    out.witness = set.paths.front();
    return out;
}

OracleSummary summarize(const Graph& g, const OracleLimits& limits) {
    auto set = enumerate_diametral_paths(g, limits);
    OracleSummary s;
    s.diameter = set.diameter;
    s.path_count = set.paths.size();
    s.laminar_index = set.diameter;
    s.strongly_index = 0;
    for (const auto& p : set.paths) {
        int r = domination_radius(g, p);
        s.laminar_index = std::min(s.laminar_index, r);
        s.strongly_index = std::max(s.strongly_index, r);
    }
    return s;
}

int laminar_index_bf(const Graph& g, const OracleLimits& limits) {
    return summarize(g, limits).laminar_index;
}

int strongly_laminar_index_bf(const Graph& g, const OracleLimits& limits) {
    return summarize(g, limits).strongly_index;
}

bool is_k_dominating_diametral_path(const Graph& g, const Path& path, int k) {
    if (!is_path_of(g, path)) {
        return false;
    }
    AllPairs ap = all_pairs(g);
    if (!ap.connected) {
        return false;
    }
    if (static_cast<int>(path.length()) != ap.diameter) {
        return false;
    }
    if (ap.dist[path.front()][path.back()] != static_cast<int>(path.length())) {
        return false;
    }
    int r = domination_radius(g, path);
    return r >= 0 && r <= k;
}

bool is_valid_counterexample(const Graph& g, const Counterexample& cex, int k) {
    const Path& path = cex.path;
    if (!is_path_of(g, path) || cex.center >= g.vertex_count()) {
        return false;
    }
    AllPairs ap = all_pairs(g);
    if (!ap.connected || static_cast<int>(path.length()) != ap.diameter ||
        ap.dist[path.front()][path.back()] != ap.diameter) {
        return false;
    }
    const auto& from_center = ap.dist[cex.center];
    return std::all_of(path.vertices().begin(), path.vertices().end(),
                       [&](Vertex v) { return from_center[v] > k; });
}

}
