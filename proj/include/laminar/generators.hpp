#ifndef laminar_generators_hpp
#define laminar_generators_hpp

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "laminar/graph.hpp"

namespace laminar {

// Small named example graphs separating the classes; labels a, b, c, ...
Graph fixture_g1();
Graph fixture_g2();
Graph fixture_g3();
Graph fixture_g4();
Graph fixture_g5();
// fixture_g1() with d removed.
Graph fixture_g1_minus_d();

// Labels are the decimal ids 0..n-1 unless noted.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
// i ~ j iff 0 < |i - j| <= power.
Graph path_power(std::size_t n, std::size_t power);
// Center "c", legs labelled "l<leg>_<step>" with step 1 next to the center.
Graph spider(std::size_t legs, std::size_t leg_length);
// Erdos-Renyi G(n, p). The coin flips are derived from raw mt19937_64
// output, so the graph for a given seed is the same on every platform.
Graph gnp(std::size_t n, double p, std::uint64_t seed);

// Named generator: g1..g5, g1-d, path:N, cycle:N, complete:N,
// pathpower:N:R, spider:LEGS:LEN, gnp:N:P:SEED (or gnp:N:P with
// `default_seed`). Throws InputError on unknown or malformed names.
Graph generate(std::string_view name, std::uint64_t default_seed = 0);

}

#endif /* laminar_generators_hpp */
