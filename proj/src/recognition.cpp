#include "laminar/recognition.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_set>

#include "laminar/bfs.hpp"
#include "laminar/error.hpp"

namespace laminar {

namespace {

constexpr std::size_t kNoEdge = std::numeric_limits<std::size_t>::max();

// Counts |X_1 u X_2 u ...| with generation stamps instead of clearing.
class CoverCounter {
public:
    explicit CoverCounter(std::size_t n) : stamp_(n, 0) {}

    void reset() {
        if (++generation_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            generation_ = 1;
        }
        count_ = 0;
    }
    void add(Vertex v) {
        if (stamp_[v] != generation_) {
            stamp_[v] = generation_;
            ++count_;
        }
    }
    void add(std::span<const Vertex> vs) {
        for (Vertex v : vs) {
            add(v);
        }
    }
    std::size_t missing(std::span<const Vertex> vs) const {
        std::size_t extra = 0;
        for (Vertex v : vs) {
            extra += stamp_[v] != generation_;
        }
        return extra;
    }
    std::size_t count() const { return count_; }

private:
    std::vector<std::uint32_t> stamp_;
    std::uint32_t generation_ = 0;
    std::size_t count_ = 0;
};

void require_source(const BfsLayers& layers, std::size_t n, int diameter) {
    if (layers.order().size() != n) {
        throw PreconditionError("graph is not connected");
    }
    if (layers.depth() != diameter) {
        throw PreconditionError("source has eccentricity " + std::to_string(layers.depth()) +
                                ", not the diameter " + std::to_string(diameter));
    }
}

void require_max_ecc(const EccentricityProfile& profile, Vertex s) {
    if (profile.eccentricity[s] != profile.diameter) {
        throw PreconditionError("source is not of maximum eccentricity");
    }
}

// Some shortest path of length diam(g), from the first MaxEcc vertex.
Path any_diametral_path(const Graph& g, const EccentricityProfile& profile) {
    Vertex a = profile.max_ecc.front();
    auto dist = distances_from(g, a);
    Vertex b = static_cast<Vertex>(std::max_element(dist.begin(), dist.end()) - dist.begin());
    return *shortest_path(g, a, b);
}

RecognitionOutcome yes(int k, Path witness) {
    RecognitionOutcome out;
    out.verdict = true;
    out.k = k;
    out.witness = std::move(witness);
    return out;
}

RecognitionOutcome no(int k) {
    RecognitionOutcome out;
    out.k = k;
    return out;
}

/*
 * Dominating-Diameter state. feasible_[p] marks the directed edge
 * neighbor_at(p) -> w where p lies in w's lower run; pred_[p] is the
 * lower-run position of the FEASIBLE edge that first justified it.
 */
class DominatingSearch {
public:
    DominatingSearch(const Graph& g, Vertex s, int diameter, SearchOptions options)
        : g_(g), layers_(g, s), diameter_(diameter), options_(options),
          feasible_(layers_.adjacency_size(), 0), pred_(layers_.adjacency_size(), kNoEdge),
          mirror_(layers_.adjacency_size(), kNoEdge), cover_(g.vertex_count()) {
        require_source(layers_, g.vertex_count(), diameter);
        // mirror_[q] for q in v's upper run: position of v in the lower run
        // of the neighbor. Lower runs are sorted by rank, so visiting v in
        // rank order fills them front to back.
        std::vector<std::size_t> cursor(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            cursor[v] = layers_.lower_begin(v);
        }
        for (Vertex v : layers_.order()) {
            std::size_t q = layers_.upper_begin(v);
            for (Vertex w : layers_.upper(v)) {
                mirror_[q++] = cursor[w]++;
            }
        }
    }

    std::optional<Path> run() {
        const Vertex s = layers_.source();
        if (diameter_ == 0) {
            return Path({s});
        }
        std::vector<char> queued(g_.vertex_count(), 0);
        std::vector<Vertex> queue;
        queue.reserve(g_.vertex_count());
        for (Vertex w : layers_.upper(s)) {
            feasible_[layers_.lower_begin(w)] = 1;
            queued[w] = 1;
            queue.push_back(w);
        }

        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex v = queue[head];
            const int h = layers_.raw_level(v);
            const std::size_t layer_size = layers_.layer_size(h);
            const std::size_t lo = layers_.lower_begin(v);
            const auto lower = layers_.lower(v);
            for (std::size_t i = 0; i < lower.size(); ++i) {
                const std::size_t in_edge = lo + i;
                if (!feasible_[in_edge]) {
                    continue;
                }
                const Vertex u = lower[i];
                if (options_.check_invariants) {
                    check_prefix(v, in_edge);
                }
                // A(v) = N_h(u) u N_h(v); v itself is in N_h(u)
                cover_.reset();
                cover_.add(layers_.upper(u));
                cover_.add(layers_.same(v));
                if (h == diameter_) {
                    if (cover_.count() == layer_size) {
                        return unwind(v, in_edge);
                    }
                    continue;
                }
                std::size_t q = layers_.upper_begin(v);
                for (Vertex w : layers_.upper(v)) {
                    const std::size_t edge = mirror_[q++];
                    if (cover_.count() + cover_.missing(layers_.lower(w)) != layer_size) {
                        continue;
                    }
                    if (!feasible_[edge]) {
                        feasible_[edge] = 1;
                        pred_[edge] = in_edge;
                    }
                    if (!queued[w]) {
                        queued[w] = 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        return std::nullopt;
    }

private:
    Path unwind(Vertex v, std::size_t in_edge) const {
        std::vector<Vertex> vs{v};
        for (std::size_t e = in_edge; e != kNoEdge; e = pred_[e]) {
            vs.push_back(layers_.neighbor_at(e));
        }
        std::reverse(vs.begin(), vs.end());
        return Path(std::move(vs));
    }

    // The reconstructed prefix s..u,v dominates layers 0..level(v)-1.
    void check_prefix(Vertex v, std::size_t in_edge) const {
        Path prefix = unwind(v, in_edge);
        const int h = layers_.raw_level(v);
        if (static_cast<int>(prefix.length()) != h) {
            throw ContractViolation("FEASIBLE prefix has the wrong length");
        }
        for (int i = 0; i < h; ++i) {
            for (Vertex y : layers_.layer(i)) {
                bool dominated = false;
                for (Vertex z : prefix.vertices()) {
                    if (z == y || g_.adjacent(z, y)) {
                        dominated = true;
                        break;
                    }
                }
                if (!dominated) {
                    throw ContractViolation("FEASIBLE prefix misses a vertex of layer " +
                                            std::to_string(i));
                }
            }
        }
    }

    const Graph& g_;
    BfsLayers layers_;
    int diameter_;
    SearchOptions options_;
    std::vector<char> feasible_;
    std::vector<std::size_t> pred_;
    std::vector<std::size_t> mirror_;
    CoverCounter cover_;
};

struct SuffixHash {
    std::size_t operator()(const std::vector<Vertex>& vs) const {
        std::uint64_t h = 1469598103934665603ull;
        for (Vertex v : vs) {
            h = (h ^ v) * 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

/*
 * k-Dominating-Diameter state space. Every node is one vertex of a path
 * prefix with a parent link; only nodes whose 2k-vertex suffix is new get
 * enqueued, and the full path is recovered through the parent links.
 */
class KDominatingSearch {
public:
    KDominatingSearch(const Graph& g, Vertex s, int k, int diameter)
        : g_(g), layers_(g, s), k_(k), diameter_(diameter),
          ball_offsets_(g.vertex_count()), ball_vertices_(g.vertex_count()),
          ball_seen_(g.vertex_count(), -1), cover_(g.vertex_count()) {
        require_source(layers_, g.vertex_count(), diameter);
    }

    std::optional<Path> run() {
        seed(layers_.source(), -1, 0);
        const std::size_t window = 2 * static_cast<std::size_t>(k_);
        std::vector<Vertex> suffix, extended;
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const std::int32_t node = queue_[head];
            load_suffix(node, window, suffix);
            const Vertex v = suffix.back();
            const int p = layers_.raw_level(v);

            if (p == diameter_) {
                bool all = true;
                for (int i = std::max(p - k_ + 1, k_ + 1); i <= p && all; ++i) {
                    all = covers(i, suffix);
                }
                if (all) {
                    return unwind(node);
                }
                continue;
            }

            const int q = p + 1 - k_;
            for (Vertex x : layers_.upper(v)) {
                extended.assign(suffix.begin(), suffix.end());
                extended.push_back(x);
                if (q > k_ && !covers(q, extended)) {
                    continue;
                }
                if (extended.size() > window) {
                    extended.erase(extended.begin());
                }
                if (seen_.insert(extended).second) {
                    nodes_.push_back({x, node});
                    queue_.push_back(static_cast<std::int32_t>(nodes_.size() - 1));
                }
            }
        }
        return std::nullopt;
    }

private:
    struct Node {
        Vertex vertex;
        std::int32_t parent;
    };

    // All level-monotone paths of length k from s; layers 0..k lie within
    // distance k of s and need no check.
    void seed(Vertex v, std::int32_t parent, int depth) {
        nodes_.push_back({v, parent});
        const auto self = static_cast<std::int32_t>(nodes_.size() - 1);
        if (depth == k_) {
            std::vector<Vertex> path;
            load_suffix(self, 2 * static_cast<std::size_t>(k_), path);
            seen_.insert(path);
            queue_.push_back(self);
            return;
        }
        for (Vertex w : layers_.upper(v)) {
            seed(w, self, depth + 1);
        }
    }

    void load_suffix(std::int32_t node, std::size_t window, std::vector<Vertex>& out) const {
        out.clear();
        for (std::int32_t n = node; n >= 0 && out.size() < window; n = nodes_[n].parent) {
            out.push_back(nodes_[n].vertex);
        }
        std::reverse(out.begin(), out.end());
    }

    Path unwind(std::int32_t node) const {
        std::vector<Vertex> vs;
        for (std::int32_t n = node; n >= 0; n = nodes_[n].parent) {
            vs.push_back(nodes_[n].vertex);
        }
        std::reverse(vs.begin(), vs.end());
        return Path(std::move(vs));
    }

    // Layer i is covered by the k-balls of the window's vertices.
    bool covers(int i, std::span<const Vertex> window) {
        cover_.reset();
        for (Vertex u : window) {
            cover_.add(slice(u, i));
        }
        return cover_.count() == layers_.layer_size(i);
    }

    // N^k[u] intersected with layer i.
    std::span<const Vertex> slice(Vertex u, int i) {
        const int lu = layers_.raw_level(u);
        if (i < lu - k_ || i > lu + k_) {
            return {};
        }
        if (ball_offsets_[u].empty()) {
            build_ball(u);
        }
        const auto& offs = ball_offsets_[u];
        const std::size_t bin = static_cast<std::size_t>(i - (lu - k_));
        return {ball_vertices_[u].data() + offs[bin], ball_vertices_[u].data() + offs[bin + 1]};
    }

    // Truncated BFS from u, bucketed by BFS level of the source.
    void build_ball(Vertex u) {
        std::vector<Vertex> ball{u};
        std::vector<int> dist_in_ball{0};
        ball_seen_[u] = static_cast<std::int64_t>(u);
        for (std::size_t head = 0; head < ball.size(); ++head) {
            if (dist_in_ball[head] == k_) {
                continue;
            }
            for (Vertex w : g_.neighbors(ball[head])) {
                if (ball_seen_[w] != static_cast<std::int64_t>(u)) {
                    ball_seen_[w] = static_cast<std::int64_t>(u);
                    ball.push_back(w);
                    dist_in_ball.push_back(dist_in_ball[head] + 1);
                }
            }
        }
        const int base = layers_.raw_level(u) - k_;
        const std::size_t bins = 2 * static_cast<std::size_t>(k_) + 1;
        std::vector<std::size_t> offs(bins + 1, 0);
        for (Vertex w : ball) {
            ++offs[static_cast<std::size_t>(layers_.raw_level(w) - base) + 1];
        }
        for (std::size_t b = 0; b < bins; ++b) {
            offs[b + 1] += offs[b];
        }
        std::vector<std::size_t> fill(offs.begin(), offs.end() - 1);
        std::vector<Vertex> sorted(ball.size());
        for (Vertex w : ball) {
            sorted[fill[static_cast<std::size_t>(layers_.raw_level(w) - base)]++] = w;
        }
        ball_offsets_[u] = std::move(offs);
        ball_vertices_[u] = std::move(sorted);
    }

    const Graph& g_;
    BfsLayers layers_;
    int k_;
    int diameter_;
    std::vector<std::vector<std::size_t>> ball_offsets_;
    std::vector<std::vector<Vertex>> ball_vertices_;
    std::vector<std::int64_t> ball_seen_;
    CoverCounter cover_;
    std::vector<Node> nodes_;
    std::vector<std::int32_t> queue_;
    std::unordered_set<std::vector<Vertex>, SuffixHash> seen_;
};

std::vector<std::int32_t> components_avoiding(const Graph& g, std::span<const char> blocked) {
    std::vector<std::int32_t> comp(g.vertex_count(), -1);
    std::int32_t next = 0;
    std::vector<Vertex> stack;
    for (Vertex r = 0; r < g.vertex_count(); ++r) {
        if (blocked[r] || comp[r] >= 0) {
            continue;
        }
        comp[r] = next;
        stack.push_back(r);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u)) {
                if (!blocked[w] && comp[w] < 0) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

std::vector<char> closed_neighborhood_mask(const Graph& g, Vertex x) {
    std::vector<char> mask(g.vertex_count(), 0);
    mask[x] = 1;
    for (Vertex w : g.neighbors(x)) {
        mask[w] = 1;
    }
    return mask;
}

}

std::optional<Path> dominating_diameter_from(const Graph& g, Vertex s) {
    auto profile = eccentricity_profile(g);
    require_max_ecc(profile, s);
    return dominating_diameter_from(g, s, profile.diameter);
}

std::optional<Path> dominating_diameter_from(const Graph& g, Vertex s, int diameter,
                                             SearchOptions options) {
    return DominatingSearch(g, s, diameter, options).run();
}

RecognitionOutcome is_1_laminar(const Graph& g) {
    auto profile = eccentricity_profile(g);
    for (Vertex s : profile.max_ecc) {
        if (auto path = dominating_diameter_from(g, s, profile.diameter)) {
            return yes(1, std::move(*path));
        }
    }
    return no(1);
}

std::optional<Path> k_dominating_diameter_from(const Graph& g, Vertex s, int k) {
    auto profile = eccentricity_profile(g);
    require_max_ecc(profile, s);
    return k_dominating_diameter_from(g, s, k, profile.diameter);
}

std::optional<Path> k_dominating_diameter_from(const Graph& g, Vertex s, int k, int diameter) {
    if (k < 2 || k >= diameter) {
        throw PreconditionError("k-dominating search needs 2 <= k < diameter, got k = " +
                                std::to_string(k));
    }
    return KDominatingSearch(g, s, k, diameter).run();
}

RecognitionOutcome is_k_laminar(const Graph& g, int k) {
    if (k < 0) {
        throw PreconditionError("k must be non-negative");
    }
    auto profile = eccentricity_profile(g);
    const int diam = profile.diameter;
    if (k >= diam) {
        return yes(k, any_diametral_path(g, profile));
    }
    if (k == 0) {
        // a shortest path through all n vertices leaves no room for chords
        if (diam + 1 == static_cast<int>(g.vertex_count())) {
            return yes(0, any_diametral_path(g, profile));
        }
        return no(0);
    }
    if (k == 1) {
        return is_1_laminar(g);
    }
    for (Vertex s : profile.max_ecc) {
        if (auto path = k_dominating_diameter_from(g, s, k, diam)) {
            return yes(k, std::move(*path));
        }
    }
    return no(k);
}

RecognitionOutcome is_strongly_k_laminar(const Graph& g, int k) {
    if (k < 0) {
        throw PreconditionError("k must be non-negative");
    }
    auto profile = eccentricity_profile(g);
    const int diam = profile.diameter;
    if (diam == 0 || k >= diam) {
        return yes(k, any_diametral_path(g, profile));
    }

    std::vector<std::vector<int>> from_extremal;
    from_extremal.reserve(profile.max_ecc.size());
    for (Vertex a : profile.max_ecc) {
        from_extremal.push_back(distances_from(g, a));
    }

    std::vector<char> blocked(g.vertex_count());
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        std::fill(blocked.begin(), blocked.end(), 0);
        for (Vertex y : closed_k_neighborhood(g, x, k)) {
            blocked[y] = 1;
        }
        for (std::size_t i = 0; i < profile.max_ecc.size(); ++i) {
            const Vertex a = profile.max_ecc[i];
            if (blocked[a]) {
                continue;
            }
            auto reduced = distances_from(g, a, blocked);
            for (Vertex b = 0; b < g.vertex_count(); ++b) {
                if (reduced[b] == diam && from_extremal[i][b] == diam) {
                    RecognitionOutcome out = no(k);
                    out.counterexample = Counterexample{x, *shortest_path(g, a, b, blocked)};
                    return out;
                }
            }
        }
    }
    return yes(k, any_diametral_path(g, profile));
}

int strongly_laminar_index(const Graph& g) {
    int lo = 0;
    int hi = diameter(g);
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (is_strongly_k_laminar(g, mid).verdict) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

std::optional<int> laminar_index_small(const Graph& g, int k_max) {
    if (!is_connected(g)) {
        throw PreconditionError("graph is not connected");
    }
    for (int k = 0; k <= k_max; ++k) {
        if (is_k_laminar(g, k).verdict) {
            return k;
        }
    }
    return std::nullopt;
}

bool is_asteroidal_triple(const Graph& g, Vertex x, Vertex y, Vertex z) {
    if (x == y || y == z || x == z) {
        return false;
    }
    auto joined_avoiding = [&](Vertex a, Vertex b, Vertex third) {
        auto mask = closed_neighborhood_mask(g, third);
        return distances_from(g, a, mask)[b] >= 0;
    };
    return joined_avoiding(y, z, x) && joined_avoiding(x, z, y) && joined_avoiding(x, y, z);
}

std::optional<Triple> find_asteroidal_triple(const Graph& g) {
    const std::size_t n = g.vertex_count();
    // comp[x][y]: component of y in g minus N[x], -1 inside N[x]
    std::vector<std::vector<std::int32_t>> comp(n);
    for (Vertex x = 0; x < n; ++x) {
        comp[x] = components_avoiding(g, closed_neighborhood_mask(g, x));
    }
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
            if (comp[x][y] < 0 || comp[y][x] < 0) {
                continue;
            }
            for (Vertex z = y + 1; z < n; ++z) {
                if (comp[x][z] == comp[x][y] && comp[y][z] == comp[y][x] &&
                    comp[z][x] >= 0 && comp[z][x] == comp[z][y]) {
                    return Triple{x, y, z};
                }
            }
        }
    }
    return std::nullopt;
}

}
