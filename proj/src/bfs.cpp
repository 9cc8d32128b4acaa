#include "laminar/bfs.hpp"

namespace laminar {

BfsLayers::BfsLayers(const Graph& g, Vertex source)
    : source_(source), level_(g.vertex_count(), -1), rank_(g.vertex_count(), 0) {
    const std::size_t n = g.vertex_count();
    order_.reserve(n);
    level_[source] = 0;
    order_.push_back(source);
    layer_offsets_.push_back(0);
    for (std::size_t head = 0; head < order_.size(); ++head) {
        Vertex u = order_[head];
        if (level_[u] == static_cast<int>(layer_offsets_.size()) - 1) {
            // first vertex of a new level
            layer_offsets_.push_back(head);
        }
        rank_[u] = head;
        for (Vertex v : g.neighbors(u)) {
            if (level_[v] < 0) {
                level_[v] = level_[u] + 1;
                order_.push_back(v);
            }
        }
    }
    // layer_offsets_ holds the start of each layer; close the last one.
    layer_offsets_.erase(layer_offsets_.begin());
    layer_offsets_.push_back(order_.size());

    // Re-sort neighborhoods by visit rank: walking u in visit order and
    // appending u to each neighbor's run yields sorted runs in linear time.
    start_.assign(n, 0);
    std::size_t total = 0;
    for (Vertex v = 0; v < n; ++v) {
        start_[v] = total;
        if (level_[v] >= 0) {
            total += g.degree(v);
        }
    }
    end_ = start_;
    ranked_.resize(total);
    for (Vertex u : order_) {
        for (Vertex v : g.neighbors(u)) {
            ranked_[end_[v]++] = u;
        }
    }

    mid_lo_.resize(n);
    mid_hi_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        std::size_t p = start_[v];
        while (p < end_[v] && level_[ranked_[p]] < level_[v]) {
            ++p;
        }
        mid_lo_[v] = p;
        while (p < end_[v] && level_[ranked_[p]] == level_[v]) {
            ++p;
        }
        mid_hi_[v] = p;
    }
}

std::optional<int> BfsLayers::level(Vertex v) const {
    if (level_[v] < 0) {
        return std::nullopt;
    }
    return level_[v];
}

}
