#ifndef laminar_oracle_hpp
#define laminar_oracle_hpp

#include <cstddef>
#include <vector>

#include "laminar/graph.hpp"
#include "laminar/recognition.hpp"

namespace laminar {

/*
 * Exponential reference implementations. Everything here goes through the
 * explicit list of diametral paths and its own BFS, never through the
 * layered searches in recognition.cpp.
 */

struct OracleLimits {
    std::size_t max_vertices = 24;
    std::size_t max_paths = 1'000'000;
};

struct DiametralPathSet {
    int diameter = 0;
    // One orientation per path: front() < back() by id.
    std::vector<Path> paths;
};

// Throws SizeGuardError above the vertex limit or when the path count
// passes the cap, PreconditionError on disconnected graphs.
DiametralPathSet enumerate_diametral_paths(const Graph& g, const OracleLimits& limits = {});

// max over vertices y of d(y, path); -1 if some vertex cannot reach it.
int domination_radius(const Graph& g, const Path& path);

RecognitionOutcome is_k_laminar_bf(const Graph& g, int k, const OracleLimits& limits = {});
RecognitionOutcome is_strongly_k_laminar_bf(const Graph& g, int k,
                                            const OracleLimits& limits = {});

// min and max of domination_radius over all diametral paths.
int laminar_index_bf(const Graph& g, const OracleLimits& limits = {});
int strongly_laminar_index_bf(const Graph& g, const OracleLimits& limits = {});

// Same answers as the four functions above from one enumeration.
struct OracleSummary {
    int diameter = 0;
    std::size_t path_count = 0;
    int laminar_index = 0;
    int strongly_index = 0;
    bool k_laminar(int k) const { return k >= laminar_index; }
    bool strongly_k_laminar(int k) const { return k >= strongly_index; }
};
OracleSummary summarize(const Graph& g, const OracleLimits& limits = {});

// Independent witness checks: simple path, shortest between its endpoints,
// length diam(g), every vertex within k of it.
bool is_k_dominating_diametral_path(const Graph& g, const Path& path, int k);
// Diametral shortest path that contains no vertex of N^k[center].
bool is_valid_counterexample(const Graph& g, const Counterexample& cex, int k);

}

#endif /* laminar_oracle_hpp */
