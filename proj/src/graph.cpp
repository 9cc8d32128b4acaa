#include "laminar/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "laminar/error.hpp"

namespace laminar {

Graph::Graph(std::vector<std::string> labels,
             std::span<const std::pair<Vertex, Vertex>> edges)
    : labels_(std::move(labels)) {
    const std::size_t n = labels_.size();
    index_.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
        if (!index_.emplace(labels_[v], v).second) {
            throw InputError("duplicate vertex label '" + labels_[v] + "'");
        }
    }

    std::vector<std::pair<Vertex, Vertex>> arcs;
    arcs.reserve(2 * edges.size());
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw InputError("edge endpoint out of range");
        }
        if (u == v) {
            throw InputError("self-loop at vertex '" + labels_[u] + "'");
        }
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    offsets_.assign(n + 1, 0);
    for (auto [u, v] : arcs) {
        ++offsets_[u + 1];
    }
    for (std::size_t i = 0; i < n; ++i) {
        offsets_[i + 1] += offsets_[i];
    }
    adjacency_.reserve(arcs.size());
    for (auto [u, v] : arcs) {
        adjacency_.push_back(v);
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<Vertex> Graph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Vertex Graph::at(std::string_view label) const {
    if (auto v = find(label)) {
        return *v;
    }
    throw std::out_of_range("no vertex labelled '" + std::string(label) + "'");
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> result;
    result.reserve(edge_count());
    for (Vertex u = 0; u < vertex_count(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) {
                result.emplace_back(u, v);
            }
        }
    }
    return result;
}

Graph build_graph(std::span<const LabelEdge> edges, std::span<const std::string> isolated) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, Vertex> ids;
    auto intern = [&](const std::string& label) {
        if (label.empty()) {
            throw InputError("empty vertex label");
        }
        auto [it, inserted] = ids.emplace(label, static_cast<Vertex>(labels.size()));
        if (inserted) {
            labels.push_back(label);
        }
        return it->second;
    };

    std::vector<std::pair<Vertex, Vertex>> id_edges;
    id_edges.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a == b) {
            throw InputError("self-loop at vertex '" + a + "'");
        }
        Vertex u = intern(a);
        Vertex v = intern(b);
        id_edges.emplace_back(u, v);
    }
    for (const auto& label : isolated) {
        intern(label);
    }
    return Graph(std::move(labels), id_edges);
}

Graph build_graph(std::initializer_list<LabelEdge> edges) {
    return build_graph(std::span<const LabelEdge>(edges.begin(), edges.size()));
}

bool Path::contains(Vertex v) const {
    return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::vector<std::string> Path::labels(const Graph& g) const {
    std::vector<std::string> result;
    result.reserve(vertices_.size());
    for (Vertex v : vertices_) {
        result.push_back(g.label(v));
    }
    return result;
}

bool is_path_of(const Graph& g, const Path& p) {
    const auto& vs = p.vertices();
    if (vs.empty()) {
        return false;
    }
    std::vector<char> seen(g.vertex_count(), 0);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] >= g.vertex_count() || seen[vs[i]]) {
            return false;
        }
        seen[vs[i]] = 1;
        if (i > 0 && !g.adjacent(vs[i - 1], vs[i])) {
            return false;
        }
    }
    return true;
}

std::vector<int> distances_from(const Graph& g, Vertex source, std::span<const char> blocked) {
    std::vector<int> dist(g.vertex_count(), -1);
    auto is_blocked = [&](Vertex v) { return !blocked.empty() && blocked[v]; };
    if (is_blocked(source)) {
        return dist;
    }
    std::vector<Vertex> queue;
    queue.reserve(g.vertex_count());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex v : g.neighbors(u)) {
            if (dist[v] < 0 && !is_blocked(v)) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

std::optional<Path> shortest_path(const Graph& g, Vertex source, Vertex target,
                                  std::span<const char> blocked) {
    auto dist = distances_from(g, target, blocked);
    if (dist[source] < 0) {
        return std::nullopt;
    }
    // walk downhill from the source toward the target
    std::vector<Vertex> vs{source};
    Vertex cur = source;
    while (cur != target) {
        for (Vertex w : g.neighbors(cur)) {
            if (dist[w] == dist[cur] - 1) {
                cur = w;
                break;
            }
        }
        vs.push_back(cur);
    }
    return Path(std::move(vs));
}

bool is_connected(const Graph& g) {
    if (g.empty()) {
        return true;
    }
    auto dist = distances_from(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::optional<int> distance(const Graph& g, Vertex x, Vertex y) {
    auto dist = distances_from(g, x);
    if (dist[y] < 0) {
        return std::nullopt;
    }
    return dist[y];
}

int eccentricity(const Graph& g, Vertex x) {
    auto dist = distances_from(g, x);
    int ecc = 0;
    for (int d : dist) {
        if (d < 0) {
            throw PreconditionError("eccentricity is undefined on a disconnected graph");
        }
        ecc = std::max(ecc, d);
    }
    return ecc;
}

EccentricityProfile eccentricity_profile(const Graph& g) {
    if (g.empty()) {
        throw PreconditionError("eccentricities need at least one vertex");
    }
    EccentricityProfile profile;
    profile.eccentricity.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        profile.eccentricity[v] = eccentricity(g, v);
    }
    profile.diameter = *std::max_element(profile.eccentricity.begin(), profile.eccentricity.end());
    profile.radius = *std::min_element(profile.eccentricity.begin(), profile.eccentricity.end());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (profile.eccentricity[v] == profile.diameter) {
            profile.max_ecc.push_back(v);
        }
    }
    return profile;
}

int diameter(const Graph& g) { return eccentricity_profile(g).diameter; }

int radius(const Graph& g) { return eccentricity_profile(g).radius; }

std::vector<Vertex> max_ecc_set(const Graph& g) { return eccentricity_profile(g).max_ecc; }

std::vector<Vertex> closed_k_neighborhood(const Graph& g, Vertex x, int k) {
    std::vector<Vertex> ball;
    if (k < 0) {
        return ball;
    }
    std::vector<int> dist(g.vertex_count(), -1);
    dist[x] = 0;
    ball.push_back(x);
    for (std::size_t head = 0; head < ball.size(); ++head) {
        Vertex u = ball[head];
        if (dist[u] == k) {
            continue;
        }
        for (Vertex v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                ball.push_back(v);
            }
        }
    }
    std::sort(ball.begin(), ball.end());
    return ball;
}

std::vector<Vertex> k_sphere(const Graph& g, Vertex x, int k) {
    auto dist = distances_from(g, x);
    std::vector<Vertex> sphere;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (dist[v] == k) {
            sphere.push_back(v);
        }
    }
    return sphere;
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
    const Vertex none = static_cast<Vertex>(-1);
    std::vector<Vertex> new_id(g.vertex_count(), 0);
    for (Vertex v : removed) {
        new_id[v] = none;
    }
    std::vector<std::string> labels;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (new_id[v] != none) {
            new_id[v] = static_cast<Vertex>(labels.size());
            labels.push_back(g.label(v));
        }
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [u, v] : g.edges()) {
        if (new_id[u] != none && new_id[v] != none) {
            edges.emplace_back(new_id[u], new_id[v]);
        }
    }
    return Graph(std::move(labels), edges);
}

}
