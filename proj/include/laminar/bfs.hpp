#ifndef laminar_bfs_hpp
#define laminar_bfs_hpp

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "laminar/graph.hpp"

namespace laminar {

/*
 * Single-source BFS layering.
 *
 * Besides levels and layers L_0..L_ecc, every reached vertex v at level h
 * gets its neighborhood re-sorted by BFS visit order, which groups it into
 * three contiguous runs: neighbors on level h-1, on level h, on level h+1.
 * Layers are also in visit order, so every set handed out here is sorted
 * by visit rank.
 */
class BfsLayers {
public:
    BfsLayers(const Graph& g, Vertex source);

    Vertex source() const { return source_; }
    std::size_t vertex_count() const { return level_.size(); }

    bool reached(Vertex v) const { return level_[v] >= 0; }
    std::optional<int> level(Vertex v) const;
    // -1 when unreachable.
    int raw_level(Vertex v) const { return level_[v]; }
    const std::vector<int>& levels() const { return level_; }

    // Largest level, i.e. eccentricity of the source within its component.
    int depth() const { return static_cast<int>(layer_offsets_.size()) - 2; }
    std::size_t layer_count() const { return layer_offsets_.size() - 1; }
    std::span<const Vertex> layer(int i) const {
        return {order_.data() + layer_offsets_[i], order_.data() + layer_offsets_[i + 1]};
    }
    std::size_t layer_size(int i) const { return layer_offsets_[i + 1] - layer_offsets_[i]; }

    // Visit order tau, and the rank of a vertex in it.
    std::span<const Vertex> order() const { return order_; }
    std::size_t rank(Vertex v) const { return rank_[v]; }

    // Neighbors of v in visit order; empty for unreached v.
    std::span<const Vertex> ranked_neighbors(Vertex v) const {
        return slice(start_[v], end_[v]);
    }
    std::span<const Vertex> lower(Vertex v) const { return slice(start_[v], mid_lo_[v]); }
    std::span<const Vertex> same(Vertex v) const { return slice(mid_lo_[v], mid_hi_[v]); }
    std::span<const Vertex> upper(Vertex v) const { return slice(mid_hi_[v], end_[v]); }

    // Positions into the flat ranked adjacency array, so callers can attach
    // data to directed edges: position p in v's run names the edge v -> ranked_[p].
    std::size_t lower_begin(Vertex v) const { return start_[v]; }
    std::size_t upper_begin(Vertex v) const { return mid_hi_[v]; }
    std::size_t adjacency_size() const { return ranked_.size(); }
    Vertex neighbor_at(std::size_t position) const { return ranked_[position]; }

private:
    std::span<const Vertex> slice(std::size_t b, std::size_t e) const {
        return {ranked_.data() + b, ranked_.data() + e};
    }

    Vertex source_;
    std::vector<int> level_;
    std::vector<Vertex> order_;
    std::vector<std::size_t> rank_;
    std::vector<std::size_t> layer_offsets_;
    std::vector<Vertex> ranked_;
    std::vector<std::size_t> start_, mid_lo_, mid_hi_, end_;
};

inline BfsLayers bfs(const Graph& g, Vertex s) { return BfsLayers(g, s); }

}

#endif /* laminar_bfs_hpp */
