// End-to-end acceptance battery. Exact integer comparisons throughout; no
// tolerances anywhere. Each criterion prints a single PASS/FAIL line.
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "sphc/io.hpp"

using namespace sphc;

namespace {

HomologyEngine g_engine;
SphericalAnalyzer g_analyzer(g_engine);

SimplicialComplex eight_vertex_example() {
    Graph g(8);
    for (auto [u, v] : {std::pair{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
                        {1, 6}, {5, 7}, {7, 8}})
        g.add_edge(u, v);
    return independence_complex(g);
}

SimplicialComplex pendant_square() {
    Graph g(6);
    for (auto [u, v] : {std::pair{1, 2}, {2, 3}, {3, 4}, {4, 1}, {3, 5}, {1, 6}})
        g.add_edge(u, v);
    return independence_complex(g);
}

// Shared randomized corpus: independence complexes of ternary graphs and of
// simplicial forests, plus a few deliberately non-spherical members.
struct Corpus {
    std::vector<SimplicialComplex> spherical;  // ternary + forest members
    std::vector<SimplicialComplex> other;      // non-spherical members
};

SimplicialComplex random_forest_complex(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> facet_count(1, 5);
    std::uniform_int_distribution<int> facet_size(1, 4);
    std::uniform_int_distribution<int> vertex(0, 7);
    while (true) {
        std::vector<VertexSet> facets;
        int q = facet_count(rng);
        for (int i = 0; i < q; ++i) {
            VertexSet f;
            int sz = facet_size(rng);
            while (f.size() < sz) f.insert(vertex(rng));
            facets.push_back(f);
        }
        SimplicialComplex delta = SimplicialComplex::from_facets(facets);
        if (delta.facets().size() > 8) continue;
        if (is_simplicial_forest(delta).is_forest)
            return independence_complex_of_complex(delta);
    }
}

const Corpus& corpus() {
    static const Corpus c = [] {
        Corpus out;
        std::mt19937_64 rng(20260824);
        // 200 ternary graphs, sizes weighted toward the cheap range.
        for (int t = 0; t < 200; ++t) {
            int n = 4 + static_cast<int>(rng() % 6);  // 4..9
            if (t % 20 == 0) n = 10 + static_cast<int>(rng() % 3);  // 10..12
            out.spherical.push_back(independence_complex(random_ternary(n, 0.3, rng())));
        }
        for (int t = 0; t < 50; ++t) out.spherical.push_back(random_forest_complex(rng));
        out.other.push_back(independence_complex(gen_cycle_complement(6)));
        out.other.push_back(independence_complex(gen_cycle(6)));
        out.other.push_back(independence_complex(gen_cycle(9)));
        return out;
    }();
    return c;
}

bool path_lemma() {
    for (int n = 1; n <= 14; ++n) {
        Classification cls = g_engine.classify_complex(independence_complex(gen_path(n)));
        if (n % 3 == 0) {
            if (!cls.is_sphere() || cls.sphere_dim != n / 3 - 1) return false;
        } else if (n % 3 == 1) {
            if (cls.tag != Classification::Tag::Trivial) return false;
        } else {
            if (!cls.is_sphere() || cls.sphere_dim != n / 3) return false;
        }
    }
    return true;
}

bool eight_vertex_case() {
    SimplicialComplex ind = eight_vertex_example();
    if (g_analyzer.d_value(ind, {}, {}) != DValue::of_dim(2)) return false;
    if (g_analyzer.d_value(ind, {1}, {}) != DValue::of_dim(1)) return false;
    if (!g_analyzer.d_value(ind, {}, {1}).star) return false;
    if (g_analyzer.build_maximal_filtration(ind).dep != 3) return false;
    BettiTable t = multigraded_betti(ind, g_engine);
    return depth_alg(t, t.n) == 3;
}

bool pendant_square_case() {
    SimplicialComplex ind = pendant_square();
    FiltrationRecord rec = g_analyzer.build_maximal_filtration(ind);
    if (rec.dep != 2) return false;
    if (!ind.sub_state(rec.link_set, rec.delete_set).is_empty_face_complex()) return false;
    BettiTable t = multigraded_betti(ind, g_engine);
    return regularity(t) == 2 && depth_alg(t, t.n) == 2;
}

bool hexagon_rejection() {
    SphericalVerdict v =
        g_analyzer.is_spherical(independence_complex(gen_cycle_complement(6)));
    return !v.is_spherical && v.witness && v.witness->profile.at(0) >= 2;
}

bool unicyclic_sweep() {
    for (int n : {4, 5, 7, 8}) {
        for (int m = 1; m <= 6; ++m) {
            if (n + m > 13) continue;
            std::optional<UnicyclicInvariants> expect = unicyclic_expected(n, m);
            if (!expect) continue;
            SimplicialComplex ind = independence_complex(gen_unicyclic(n, m));
            Classification cls = g_engine.classify_complex(ind);
            if (!cls.is_sphere() || cls.sphere_dim != expect->sphere_dim) return false;
            if (g_analyzer.depth(ind) != expect->depth) return false;
            BettiTable t = multigraded_betti(ind, g_engine);
            if (regularity(t) != depth_alg(t, t.n)) return false;
            if (depth_alg(t, t.n) != expect->depth) return false;
        }
    }
    return true;
}

bool property_suite() {
    std::mt19937_64 rng(99);
    for (const SimplicialComplex& delta : corpus().spherical) {
        if (!g_analyzer.is_spherical(delta).is_spherical) return false;
        for (int v : delta.support()) g_analyzer.verify_link_del_trichotomy(delta, v);

        std::vector<int> verts = delta.universe().to_vector();
        std::uniform_int_distribution<int> lot(0, 2);
        if (!verts.empty()) {
            std::uniform_int_distribution<std::size_t> pick(0, verts.size() - 1);
            for (int t = 0; t < 100; ++t) {
                VertexSet xs, ys;
                for (int u : verts) {
                    int l = lot(rng);
                    if (l == 0) xs.insert(u);
                    if (l == 1) ys.insert(u);
                }
                int v = verts[pick(rng)];
                xs.erase(v);
                ys.erase(v);
                g_analyzer.verify_triple(delta, xs, ys, v);
            }
        }

        bool acyclic = g_engine.classify_complex(delta).is_acyclic();
        if (!acyclic) g_analyzer.verify_dimension_bounds(delta);

        SignPosetStats base = g_analyzer.sign_of(delta);
        for (long long f : base.level_counts)
            if ((f - base.level_counts.back()) % 2 != 0) return false;
        std::vector<int> order = delta.support().to_vector();
        for (int t = 0; t < 5; ++t) {
            std::shuffle(order.begin(), order.end(), rng);
            if (g_analyzer.sign_of(delta, order).sign != base.sign) return false;
        }
        if ((base.sign == 1) != acyclic) return false;

        int dep = g_analyzer.depth(delta);
        int pd = g_analyzer.projective_dimension(delta);
        if (dep + pd != delta.universe().size()) return false;

        Classification cls = g_engine.classify_complex(delta);
        if (cls.is_sphere() &&
            g_analyzer.leray_number(delta) != cls.sphere_dim + 1)
            return false;
    }
    return true;
}

bool dual_route_betti() {
    for (const SimplicialComplex& delta : corpus().spherical) {
        if (delta.universe().size() > 10 || delta.is_void()) continue;
        BettiTable hochster = multigraded_betti(delta, g_engine);
        if (!(hochster == betti_via_spherical(delta, g_analyzer))) return false;
        if (!(hochster == oracle::exhaustive_betti(delta))) return false;
        for (auto& [key, value] : hochster.entries)
            if (value != 1) return false;
    }
    return true;
}

bool cross_identities() {
    std::vector<const SimplicialComplex*> all;
    for (const SimplicialComplex& c : corpus().spherical)
        if (c.universe().size() <= 10) all.push_back(&c);
    for (const SimplicialComplex& c : corpus().other) all.push_back(&c);

    for (const SimplicialComplex* pc : all) {
        const SimplicialComplex& delta = *pc;
        if (delta.is_void()) continue;

        BettiTable t = multigraded_betti(delta, g_engine);
        if (g_analyzer.leray_number(delta) != regularity(t)) return false;

        int n = delta.universe().size();
        HomologyProfile self = g_engine.reduced_betti(delta);
        HomologyProfile dual = g_engine.reduced_betti(delta.alexander_dual());
        for (int i = -1; i <= n + 1; ++i)
            if (self.at(n - i - 2) != dual.at(i - 1)) return false;

        for (int v : delta.support())
            if (!oracle::mv_identity_check(delta, v).pass()) return false;

        if (!HomologyProfile::same_dims(self, oracle::homology_oracle(delta).rational))
            return false;
    }
    return true;
}

bool determinism(const char* cli_path) {
    namespace fs = std::filesystem;
    fs::path input = fs::temp_directory_path() / "acceptance_verify_input.cplx";
    {
        std::ofstream out(input);
        out << io::write_cplx(independence_complex(gen_unicyclic(4, 3)));
    }
    auto run = [&](std::string& captured) {
        std::string cmd = std::string(cli_path) + " verify --seed 12345 " +
                          input.string() + " 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        if (!pipe) return false;
        char buf[4096];
        std::size_t got;
        while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) captured.append(buf, got);
        return pclose(pipe) == 0;
    };
    std::string first, second;
    if (!run(first) || !run(second)) return false;
    return !first.empty() && first == second;
}

}  // namespace

int main(int argc, char** argv) {
    struct Criterion {
        const char* name;
        bool ok;
    };
    std::vector<Criterion> results;
    auto record = [&](const char* name, bool ok) {
        results.push_back({name, ok});
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n" << std::flush;
    };

    auto guarded = [](auto&& fn) {
        try {
            return fn();
        } catch (const std::exception& e) {
            std::cerr << "  exception: " << e.what() << "\n";
            return false;
        }
    };

    record("1 path-graph homology battery n=1..14", guarded(path_lemma));
    record("2 eight-vertex example: d-triple, dep, depth_alg", guarded(eight_vertex_case));
    record("3 pendant square: filtration and reg = depth = 2",
           guarded(pendant_square_case));
    record("4 hexagon-complement rejected with rank-2 witness",
           guarded(hexagon_rejection));
    record("5 unicyclic sweep matches closed forms", guarded(unicyclic_sweep));
    record("6 property suite on 250 randomized spherical complexes",
           guarded(property_suite));
    record("7 dual-route Betti tables agree, all entries 1", guarded(dual_route_betti));
    record("8 cross-identities: Leray/reg, duality, MV, SNF oracle",
           guarded(cross_identities));
    const char* cli = argc > 1 ? argv[1] : nullptr;
    record("9 verify runs are byte-identical",
           cli ? guarded([&] { return determinism(cli); }) : false);

    int failures = 0;
    for (const Criterion& c : results)
        if (!c.ok) ++failures;
    std::cout << (results.size() - failures) << "/" << results.size()
              << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
