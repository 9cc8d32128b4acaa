#ifndef laminar_graph_hpp
#define laminar_graph_hpp

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace laminar {

using Vertex = std::uint32_t;

/*
 * Immutable undirected simple graph in compressed adjacency form.
 *
 * Vertices are dense ids 0..n-1; each adjacency list is sorted ascending
 * and free of duplicates and self-loops. String labels are only kept for
 * I/O, the algorithms work on ids.
 */
class Graph {
public:
    Graph() = default;

    // Build from id pairs. Reversed and repeated pairs collapse to one edge,
    // a self-loop throws InputError.
    Graph(std::vector<std::string> labels,
          std::span<const std::pair<Vertex, Vertex>> edges);

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t edge_count() const { return adjacency_.size() / 2; }
    bool empty() const { return labels_.empty(); }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    bool adjacent(Vertex u, Vertex v) const;

    const std::string& label(Vertex v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<Vertex> find(std::string_view label) const;
    // Like find() but throws std::out_of_range on unknown labels.
    Vertex at(std::string_view label) const;

    // Every edge once, as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

private:
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> adjacency_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Vertex> index_;
};

using LabelEdge = std::pair<std::string, std::string>;

// Vertex ids follow the order in which labels first appear; `isolated`
// labels not mentioned by any edge are appended after them.
Graph build_graph(std::span<const LabelEdge> edges,
                  std::span<const std::string> isolated = {});
Graph build_graph(std::initializer_list<LabelEdge> edges);

/*
 * A simple path given by its vertex sequence. Construction does not look
 * at a graph; use is_path_of() to check it against one.
 */
class Path {
public:
    Path() = default;
    explicit Path(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}

    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::size_t length() const { return vertices_.empty() ? 0 : vertices_.size() - 1; }
    std::size_t size() const { return vertices_.size(); }
    Vertex front() const { return vertices_.front(); }
    Vertex back() const { return vertices_.back(); }
    bool contains(Vertex v) const;

    std::vector<std::string> labels(const Graph& g) const;

    friend bool operator==(const Path&, const Path&) = default;

private:
    std::vector<Vertex> vertices_;
};

// Non-empty, consecutive vertices adjacent, no repeats.
bool is_path_of(const Graph& g, const Path& p);

bool is_connected(const Graph& g);

// Shortest-path length, nullopt when y is not reachable from x.
std::optional<int> distance(const Graph& g, Vertex x, Vertex y);

// Plain BFS distances from `source`, -1 for unreachable vertices. Vertices
// with blocked[v] != 0 are treated as deleted; an empty span blocks nothing.
std::vector<int> distances_from(const Graph& g, Vertex source,
                                std::span<const char> blocked = {});

// A shortest source-target path avoiding blocked vertices, if any.
std::optional<Path> shortest_path(const Graph& g, Vertex source, Vertex target,
                                  std::span<const char> blocked = {});

// Throws PreconditionError on disconnected graphs.
int eccentricity(const Graph& g, Vertex x);

struct EccentricityProfile {
    std::vector<int> eccentricity;
    int diameter = 0;
    int radius = 0;
    std::vector<Vertex> max_ecc;  // ascending ids
};

// n BFS passes. Throws PreconditionError for empty or disconnected graphs.
EccentricityProfile eccentricity_profile(const Graph& g);
int diameter(const Graph& g);
int radius(const Graph& g);
std::vector<Vertex> max_ecc_set(const Graph& g);

// {y : d(x, y) <= k}, ascending ids.
std::vector<Vertex> closed_k_neighborhood(const Graph& g, Vertex x, int k);
// {y : d(x, y) == k}, ascending ids.
std::vector<Vertex> k_sphere(const Graph& g, Vertex x, int k);

// Induced subgraph on the survivors. Survivor ids are renumbered densely
// in their original order; labels carry over.
Graph delete_vertices(const Graph& g, std::span<const Vertex> removed);

}

#endif /* laminar_graph_hpp */
