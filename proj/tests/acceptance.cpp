// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails. All corpora are seeded.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "laminar/cnf.hpp"
#include "laminar/generators.hpp"
#include "laminar/graph.hpp"
#include "laminar/oracle.hpp"
#include "laminar/recognition.hpp"
#include "laminar/reduction.hpp"

using namespace laminar;
using Clock = std::chrono::steady_clock;

namespace {

// Tolerances and corpus sizes.
constexpr double kFixtureSeconds = 1.0;
constexpr std::size_t kRandomGraphs = 2000;
constexpr std::size_t kMaxRandomN = 12;
constexpr double kEquivalenceSeconds = 300.0;
constexpr std::size_t kMinSat = 50;
constexpr std::size_t kMinUnsat = 20;
constexpr std::size_t kTargetSat = 400;
constexpr std::size_t kTargetUnsat = 200;
constexpr double kReductionSeconds = 600.0;
constexpr double kGrowthFactor = 3.0;
constexpr double kBenchSeconds = 120.0;

double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& title, const std::string& detail) {
    std::printf("[%s] criterion %d: %s -- %s\n", ok ? "PASS" : "FAIL", id, title.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

// Every witness produced anywhere below goes through here.
struct WitnessLedger {
    std::size_t checked = 0;
    std::size_t bad = 0;
    void check(const Graph& g, const RecognitionOutcome& r) {
        if (!r.verdict) return;
        ++checked;
        if (!r.witness || !is_k_dominating_diametral_path(g, *r.witness, r.k)) ++bad;
    }
    void check(const Graph& g, const Path& p, int k) {
        ++checked;
        if (!is_k_dominating_diametral_path(g, p, k)) ++bad;
    }
};

WitnessLedger witnesses;

std::vector<std::string> labels_of(const Graph& g, const Path& p) { return p.labels(g); }

bool at(const Graph& g, const char* x, const char* y, const char* z) {
    return is_asteroidal_triple(g, g.at(x), g.at(y), g.at(z));
}

void criterion_fixtures() {
    std::vector<std::string> failed;
    double worst = 0;
    auto timed = [&](const std::string& name, const std::function<bool()>& body) {
        auto t = Clock::now();
        bool ok = body();
        double s = seconds_since(t);
        worst = std::max(worst, s);
        if (!ok || s >= kFixtureSeconds) failed.push_back(name);
    };

    timed("G1 1-laminar", [] {
        Graph g = fixture_g1();
        auto r = is_k_laminar(g, 1);
        witnesses.check(g, r);
        return r.verdict && r.witness && is_k_dominating_diametral_path(g, *r.witness, 1);
    });
    timed("G1-d not 1-laminar, 2-laminar", [] {
        Graph g = fixture_g1_minus_d();
        auto r1 = is_k_laminar(g, 1);
        auto r2 = is_k_laminar(g, 2);
        witnesses.check(g, r2);
        return !r1.verdict && r2.verdict;
    });
    timed("G2 1-laminar, AT-free, strongly-1 fails on [a,b,c,d,e]", [] {
        Graph g = fixture_g2();
        auto r = is_k_laminar(g, 1);
        witnesses.check(g, r);
        auto s = is_strongly_k_laminar(g, 1);
        bool cex = !s.verdict && s.counterexample &&
                   is_valid_counterexample(g, *s.counterexample, 1) &&
                   labels_of(g, s.counterexample->path) ==
                       std::vector<std::string>{"a", "b", "c", "d", "e"};
        return r.verdict && !find_asteroidal_triple(g) && cex;
    });
    timed("G3 strongly 1-laminar with an AT", [] {
        Graph g = fixture_g3();
        auto s = is_strongly_k_laminar(g, 1);
        witnesses.check(g, s);
        return s.verdict && find_asteroidal_triple(g).has_value();
    });
    timed("(a,f,h) AT of G1, (g,i,d) AT of G3", [] {
        return at(fixture_g1(), "a", "f", "h") && at(fixture_g3(), "g", "i", "d");
    });

    std::string detail = "5 fixture checks, slowest " + std::to_string(worst * 1e3) + " ms";
    for (const auto& f : failed) detail += "; failed: " + f;
    report(1, failed.empty(), "fixture classifications", detail);
}

struct RandomCorpus {
    std::vector<Graph> graphs;
    std::vector<std::uint64_t> seeds;
};

RandomCorpus random_corpus() {
    RandomCorpus c;
    const double ps[] = {0.2, 0.35, 0.5};
    std::uint64_t seed = 20240601;
    for (std::size_t i = 0; c.graphs.size() < kRandomGraphs; ++i) {
        const std::size_t n = 4 + i % (kMaxRandomN - 3);
        const double p = ps[(i / (kMaxRandomN - 3)) % 3];
        while (true) {
            Graph g = gnp(n, p, seed++);
            if (is_connected(g)) {
                c.graphs.push_back(std::move(g));
                c.seeds.push_back(seed - 1);
                break;
            }
        }
    }
    return c;
}

void criterion_oracle(const RandomCorpus& corpus) {
    auto t = Clock::now();
    std::size_t disagreements = 0, queries = 0, bad_cex = 0;
    std::string first;
    for (std::size_t i = 0; i < corpus.graphs.size(); ++i) {
        const Graph& g = corpus.graphs[i];
        for (int k = 0; k <= 3; ++k) {
            auto fast = is_k_laminar(g, k);
            auto slow = is_k_laminar_bf(g, k);
            auto sfast = is_strongly_k_laminar(g, k);
            auto sslow = is_strongly_k_laminar_bf(g, k);
            witnesses.check(g, fast);
            witnesses.check(g, slow);
            witnesses.check(g, sfast);
            witnesses.check(g, sslow);
            if (!sfast.verdict &&
                !(sfast.counterexample && is_valid_counterexample(g, *sfast.counterexample, k))) {
                ++bad_cex;
            }
            queries += 2;
            for (bool same : {fast.verdict == slow.verdict, sfast.verdict == sslow.verdict}) {
                if (!same) {
                    ++disagreements;
                    if (first.empty()) {
                        first = "; first at seed " + std::to_string(corpus.seeds[i]) +
                                " k=" + std::to_string(k);
                    }
                }
            }
        }
    }
    double s = seconds_since(t);
    report(2, disagreements == 0 && bad_cex == 0 && s < kEquivalenceSeconds,
           "fast recognizers agree with the oracle",
           std::to_string(corpus.graphs.size()) + " graphs, " + std::to_string(queries) +
               " queries, " + std::to_string(disagreements) + " disagreements, " +
               std::to_string(bad_cex) + " invalid counterexamples, " + std::to_string(s) +
               " s" + first);
}

void criterion_containments(const RandomCorpus& corpus) {
    std::size_t violations = 0, at_free = 0;
    for (const Graph& g : corpus.graphs) {
        const int diam = diameter(g);
        if (!find_asteroidal_triple(g)) {
            ++at_free;
            auto r = is_1_laminar(g);
            witnesses.check(g, r);
            if (!r.verdict) ++violations;
        }
        bool prev = false;
        for (int k = 0; k <= diam; ++k) {
            auto plain = is_k_laminar(g, k);
            bool strong = is_strongly_k_laminar(g, k).verdict;
            witnesses.check(g, plain);
            if (strong && !plain.verdict) ++violations;
            if (prev && !plain.verdict) ++violations;
            prev = plain.verdict;
        }
        auto full = is_k_laminar(g, diam);
        witnesses.check(g, full);
        if (!full.verdict) ++violations;
        if (laminar_index_bf(g) > diam) ++violations;
        if (strongly_laminar_index(g) > diam) ++violations;
    }
    report(3, violations == 0, "class containments",
           std::to_string(corpus.graphs.size()) + " graphs (" + std::to_string(at_free) +
               " AT-free), " + std::to_string(violations) + " violations");
}

// Formulas where every real variable occurs 2 or 3 times, clauses of 1-3
// distinct variables. Unit clauses are what make unsatisfiable instances
// possible at all.
std::optional<CnfFormula> random_formula(std::mt19937_64& rng, int n) {
    std::vector<Literal> occ;
    for (int v = 1; v <= n; ++v) {
        int times = 2 + static_cast<int>(rng() % 2);
        for (int t = 0; t < times; ++t) occ.push_back(rng() % 2 ? v : -v);
    }
    std::shuffle(occ.begin(), occ.end(), rng);
    CnfFormula f;
    f.variable_count = n;
    std::size_t i = 0;
    while (i < occ.size()) {
        std::size_t len = 1 + rng() % 3;
        len = std::min(len, occ.size() - i);
        Clause c(occ.begin() + i, occ.begin() + i + len);
        i += len;
        std::set<int> vars;
        for (Literal l : c) vars.insert(std::abs(l));
        if (vars.size() != c.size()) return std::nullopt;
        f.clauses.push_back(c);
    }
    return f;
}

struct ReductionRun {
    std::vector<ReductionInstance> instances;
};

void criterion_reduction(ReductionRun& run) {
    auto t = Clock::now();
    std::mt19937_64 rng(777);
    std::set<std::string> seen;
    std::size_t sat = 0, unsat = 0, disagreements = 0, bad_assignment = 0;
    std::size_t by_padded[7] = {};
    // n = 3, 4 pad to 4; n = 5, 6 pad to 6.
    const int ns[] = {4, 3, 6, 5};
    std::size_t attempt = 0;
    while ((sat < kTargetSat || unsat < kTargetUnsat) && attempt < 200000) {
        const int n = ns[attempt++ % 4];
        auto f = random_formula(rng, n);
        if (!f) continue;
        std::string key = f->to_dimacs();
        if (!seen.insert(key).second) continue;
        bool is_sat = brute_force_sat(*f).has_value();
        if (is_sat && sat >= kTargetSat) continue;
        if (!is_sat && unsat >= kTargetUnsat) continue;

        ReductionInstance r = build_reduction(*f);
        EquivalenceReport rep = verify_equivalence(r);
        (is_sat ? sat : unsat)++;
        ++by_padded[r.padded_variable_count];
        if (rep.satisfiable != rep.laminar || rep.laminar_fast != rep.laminar) ++disagreements;
        if (rep.laminar) {
            if (!rep.witness || !rep.assignment || !satisfies(r.formula, *rep.assignment)) {
                ++bad_assignment;
            }
            if (rep.witness) witnesses.check(r.graph, *rep.witness, r.k_target);
        }
        run.instances.push_back(std::move(r));
    }
    double s = seconds_since(t);
    bool ok = disagreements == 0 && bad_assignment == 0 && sat >= kMinSat &&
              unsat >= kMinUnsat && s < kReductionSeconds;
    report(4, ok, "satisfiable iff (N/2+1)-laminar",
           std::to_string(sat) + " satisfiable + " + std::to_string(unsat) +
               " unsatisfiable formulas (" + std::to_string(by_padded[4]) + " at N=4, " +
               std::to_string(by_padded[6]) + " at N=6), " + std::to_string(disagreements) +
               " disagreements, " + std::to_string(bad_assignment) + " bad read-offs, " +
               std::to_string(s) + " s");
}

void criterion_structure(const ReductionRun& run) {
    std::size_t bad_structure = 0, bad_hub = 0, bound_checked = 0, bound_failed = 0;
    std::set<int> diameters;
    for (const auto& r : run.instances) {
        auto s = validate_structure(r);
        if (!s.ok()) ++bad_structure;
        auto cert = certified_diameter(r);
        diameters.insert(cert.diameter);
        if (!cert.hubs_strictly_inside || !cert.achieved_by_spine_ends) ++bad_hub;
        // The bound is a statement about the hardness regime without padding.
        if (s.in_hardness_regime && r.variable_count == r.padded_variable_count) {
            ++bound_checked;
            if (!s.k_bound_holds) ++bound_failed;
        }
    }
    std::string ds;
    for (int d : diameters) ds += (ds.empty() ? "" : ",") + std::to_string(d);
    report(5, bad_structure == 0 && bad_hub == 0 && bound_failed == 0 && bound_checked > 0,
           "reduction structure",
           std::to_string(run.instances.size()) + " instances, " +
               std::to_string(bad_structure) + " structure problems, " +
               std::to_string(bad_hub) + " hub eccentricity violations, 4k^2 bound checked on " +
               std::to_string(bound_checked) + " with " + std::to_string(bound_failed) +
               " failures; certified diameters {" + ds + "}");
}

void criterion_complexity() {
    auto t = Clock::now();
    const std::size_t sizes[] = {1000, 10000, 100000};
    const std::size_t power = 3;
    std::vector<double> xs, ys, per_nm;
    bool found_all = true;
    for (std::size_t n : sizes) {
        Graph g = path_power(n, power);
        const int diam = static_cast<int>((n - 1 + power - 1) / power);
        // Enough repetitions for a measurable interval; keep the best run.
        const int reps = n <= 1000 ? 200 : (n <= 10000 ? 20 : 3);
        // Time the algorithm itself, not the debug-build invariant checker.
        SearchOptions opts;
        opts.check_invariants = false;
        double best = 1e30;
        for (int rep = 0; rep < 5; ++rep) {
            auto t0 = Clock::now();
            for (int i = 0; i < reps; ++i) {
                auto p = dominating_diameter_from(g, 0, diam, opts);
                if (!p) found_all = false;
            }
            best = std::min(best, seconds_since(t0) / reps);
        }
        const double nm = static_cast<double>(n) * static_cast<double>(g.edge_count());
        xs.push_back(std::log(nm));
        ys.push_back(std::log(best));
        per_nm.push_back(best / nm);
    }
    // least-squares slope of log t against log(nm)
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= xs.size();
    my /= xs.size();
    double num = 0, den = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    const double slope = num / den;
    // Proportional to n*m within a factor 3 over a 10^4 span of n*m.
    const double slope_limit = 1.0 + std::log(kGrowthFactor) / (xs.back() - xs.front());
    bool ratios_ok = true;
    for (std::size_t i = 1; i < per_nm.size(); ++i) {
        if (per_nm[i] > kGrowthFactor * per_nm[0]) ratios_ok = false;
    }
    double s = seconds_since(t);
    char detail[256];
    std::snprintf(detail, sizeof detail,
                  "t/(nm) = %.3g, %.3g, %.3g s; log-log slope %.3f (limit %.3f); %.1f s",
                  per_nm[0], per_nm[1], per_nm[2], slope, slope_limit, s);
    report(6, found_all && ratios_ok && slope <= slope_limit && s < kBenchSeconds,
           "1-laminar search runtime within O(nm)", detail);
}

}

int main() {
    criterion_fixtures();
    RandomCorpus corpus = random_corpus();
    criterion_oracle(corpus);
    criterion_containments(corpus);
    ReductionRun run;
    criterion_reduction(run);
    criterion_structure(run);
    criterion_complexity();
    report(7, witnesses.bad == 0 && witnesses.checked > 0, "witness soundness",
           std::to_string(witnesses.checked) + " witnesses re-validated, " +
               std::to_string(witnesses.bad) + " invalid");
    return failures == 0 ? 0 : 1;
}
