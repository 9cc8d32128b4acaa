#ifndef laminar_recognition_hpp
#define laminar_recognition_hpp

#include <array>
#include <optional>

#include "laminar/graph.hpp"

namespace laminar {

struct Counterexample {
    Vertex center;  // x
    Path path;      // diametral path avoiding N^k[x]
};

struct RecognitionOutcome {
    bool verdict = false;
    int k = 0;
    // k-dominating diametral path; present on every yes.
    std::optional<Path> witness;
    // Present on a no from the strongly test.
    std::optional<Counterexample> counterexample;

    explicit operator bool() const { return verdict; }
};

struct SearchOptions {
#ifdef LAMINAR_CHECK_INVARIANTS
    bool check_invariants = true;
#else
    bool check_invariants = false;
#endif
};

/*
 * Modified BFS from s looking for a dominating diametral path that starts
 * at s. States are directed edges between consecutive layers; an edge v->w
 * becomes FEASIBLE when some FEASIBLE edge u->v makes N[u], N[v], N[w]
 * cover layer level(v). O(nm) per source.
 *
 * The two-argument form computes the diameter (n BFS passes). The
 * three-argument form trusts `diameter` and only checks ecc(s) == diameter.
 * Throws PreconditionError when s is not of maximum eccentricity or the
 * graph is disconnected.
 */
std::optional<Path> dominating_diameter_from(const Graph& g, Vertex s);
std::optional<Path> dominating_diameter_from(const Graph& g, Vertex s, int diameter,
                                             SearchOptions options = {});

RecognitionOutcome is_1_laminar(const Graph& g);

/*
 * Sliding-window search for a k-dominating diametral path from s, k >= 2.
 * A state is the last 2k vertices of a level-monotone path from s; when the
 * path grows to level p + 1 the layer p + 1 - k can no longer gain
 * dominators, so it is checked then. Requires 2 <= k < diameter.
 */
std::optional<Path> k_dominating_diameter_from(const Graph& g, Vertex s, int k);
std::optional<Path> k_dominating_diameter_from(const Graph& g, Vertex s, int k, int diameter);

// Some diametral path k-dominates g. Throws PreconditionError for k < 0
// or disconnected graphs.
RecognitionOutcome is_k_laminar(const Graph& g, int k);

// Every diametral path k-dominates g. On no, the counterexample names a
// vertex x and a diametral path inside g minus N^k[x].
RecognitionOutcome is_strongly_k_laminar(const Graph& g, int k);

// Smallest k with is_strongly_k_laminar, by binary search on [0, diameter].
int strongly_laminar_index(const Graph& g);

// Smallest k <= k_max with is_k_laminar, scanning upwards; nullopt if none.
std::optional<int> laminar_index_small(const Graph& g, int k_max);

using Triple = std::array<Vertex, 3>;

// Each pair joined by a path avoiding the closed neighborhood of the third.
bool is_asteroidal_triple(const Graph& g, Vertex x, Vertex y, Vertex z);

// Lexicographically first asteroidal triple (x < y < z), if any.
std::optional<Triple> find_asteroidal_triple(const Graph& g);

}

#endif /* laminar_recognition_hpp */
