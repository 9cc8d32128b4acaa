#include "laminar/generators.hpp"

#include <charconv>
#include <random>
#include <string>
#include <vector>

#include "laminar/error.hpp"

namespace laminar {

namespace {

std::vector<std::string> numbered(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
    }
    return labels;
}

using IdEdges = std::vector<std::pair<Vertex, Vertex>>;

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t b = 0;
    while (true) {
        auto e = s.find(sep, b);
        parts.push_back(s.substr(b, e == std::string_view::npos ? e : e - b));
        if (e == std::string_view::npos) {
            return parts;
        }
        b = e + 1;
    }
}

template <class T>
T parse_number(std::string_view s, std::string_view name) {
    T value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw InputError("malformed generator parameter '" + std::string(s) + "' in '" +
                         std::string(name) + "'");
    }
    return value;
}

double parse_probability(std::string_view s, std::string_view name) {
    // from_chars for double is missing on older libstdc++
    std::string text(s);
    std::size_t used = 0;
    double p = 0;
    try {
        p = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty() || p < 0.0 || p > 1.0) {
        throw InputError("malformed probability '" + text + "' in '" + std::string(name) + "'");
    }
    return p;
}

}

Graph fixture_g1() {
    return build_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"c", "e"}, {"e", "f"},
                        {"f", "d"}, {"c", "g"}, {"g", "h"}, {"h", "d"}});
}

Graph fixture_g1_minus_d() {
    Graph g = fixture_g1();
    Vertex d = g.at("d");
    return delete_vertices(g, std::span<const Vertex>(&d, 1));
}

Graph fixture_g2() {
    return build_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"},
                        {"c", "f"}, {"f", "e"}, {"g", "f"}, {"f", "d"}});
}

Graph fixture_g3() {
    return build_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"},
                        {"f", "g"}, {"g", "h"}, {"h", "i"}, {"i", "j"},
                        {"a", "f"}, {"e", "j"}, {"a", "g"}, {"g", "c"},
                        {"g", "b"}, {"b", "h"}, {"i", "e"}, {"d", "j"}});
}

Graph fixture_g4() {
    return build_graph({{"a", "b"}, {"b", "e"}, {"e", "g"}, {"b", "f"},
                        {"f", "c"}, {"c", "d"}, {"e", "c"}});
}

Graph fixture_g5() {
    return build_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "f"},
                        {"f", "g"}, {"g", "h"}, {"h", "a"},
                        {"o", "n"}, {"n", "m"}, {"m", "i"}, {"i", "j"}, {"j", "k"}, {"k", "l"},
                        {"a", "i"}, {"i", "b"}, {"h", "i"}, {"i", "c"},
                        {"g", "i"}, {"i", "d"}, {"f", "i"}, {"i", "e"}});
}

Graph path_graph(std::size_t n) {
    IdEdges edges;
    for (Vertex i = 1; i < n; ++i) {
        edges.emplace_back(i - 1, i);
    }
    return Graph(numbered(n), edges);
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) {
        throw InputError("a cycle needs at least 3 vertices");
    }
    IdEdges edges;
    for (Vertex i = 0; i < n; ++i) {
        edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    }
    return Graph(numbered(n), edges);
}

Graph complete_graph(std::size_t n) {
    IdEdges edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return Graph(numbered(n), edges);
}

Graph path_power(std::size_t n, std::size_t power) {
    IdEdges edges;
    edges.reserve(n * power);
    for (Vertex i = 0; i < n; ++i) {
        for (std::size_t d = 1; d <= power && i + d < n; ++d) {
            edges.emplace_back(i, static_cast<Vertex>(i + d));
        }
    }
    return Graph(numbered(n), edges);
}

Graph spider(std::size_t legs, std::size_t leg_length) {
    std::vector<std::string> labels{"c"};
    IdEdges edges;
    for (std::size_t leg = 1; leg <= legs; ++leg) {
        Vertex prev = 0;
        for (std::size_t step = 1; step <= leg_length; ++step) {
            Vertex v = static_cast<Vertex>(labels.size());
            labels.push_back("l" + std::to_string(leg) + "_" + std::to_string(step));
            edges.emplace_back(prev, v);
            prev = v;
        }
    }
    return Graph(std::move(labels), edges);
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    IdEdges edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            // 53 random bits -> uniform double in [0, 1)
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < p) {
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph(numbered(n), edges);
}

Graph generate(std::string_view name, std::uint64_t default_seed) {
    if (name == "g1") return fixture_g1();
    if (name == "g2") return fixture_g2();
    if (name == "g3") return fixture_g3();
    if (name == "g4") return fixture_g4();
    if (name == "g5") return fixture_g5();
    if (name == "g1-d") return fixture_g1_minus_d();

    auto parts = split(name, ':');
    const auto& kind = parts[0];
    auto count = [&](std::size_t i) { return parse_number<std::size_t>(parts[i], name); };
    if (kind == "path" && parts.size() == 2) return path_graph(count(1));
    if (kind == "cycle" && parts.size() == 2) return cycle_graph(count(1));
    if (kind == "complete" && parts.size() == 2) return complete_graph(count(1));
    if (kind == "pathpower" && parts.size() == 3) return path_power(count(1), count(2));
    if (kind == "spider" && parts.size() == 3) return spider(count(1), count(2));
    if (kind == "gnp" && (parts.size() == 3 || parts.size() == 4)) {
        std::uint64_t seed = parts.size() == 4 ? parse_number<std::uint64_t>(parts[3], name)
                                               : default_seed;
        return gnp(count(1), parse_probability(parts[2], name), seed);
    }
    throw InputError("unknown generator '" + std::string(name) + "'");
}

}
