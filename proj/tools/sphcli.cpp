#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <random>
#include <sstream>

#include "sphc/io.hpp"

namespace {

using sphc::io::json;

sphc::FieldSpec parse_field(const std::string& s) {
    if (s == "q" || s == "Q") return sphc::FieldSpec::rationals();
    if (s.size() > 2 && (s[0] == 'F' || s[0] == 'f') && s[1] == '_')
        return sphc::FieldSpec::prime_field(std::stoll(s.substr(2)));
    throw CLI::ValidationError("--field", "expected q or F_p");
}

sphc::SimplicialComplex load_cplx(const std::string& path) {
    if (path == "-") return sphc::io::read_cplx(std::cin);
    return sphc::io::read_cplx_file(path);
}

sphc::Graph load_graph(const std::string& path) {
    if (path == "-") return sphc::io::read_graph(std::cin);
    return sphc::io::read_graph_file(path);
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::vector<int> parse_order(const std::string& csv) {
    std::vector<int> out;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

/// Full invariant battery on one complex; deterministic given the seed.
json run_verify(const sphc::SimplicialComplex& delta, const sphc::FieldSpec& field,
                int max_vertices, int jobs, std::uint64_t seed, bool& fail) {
    sphc::HomologyEngine engine(field);
    sphc::HomologyEngine rational_engine;  // oracle comparisons are over Q
    sphc::SphericalAnalyzer analyzer(rational_engine, max_vertices);
    std::mt19937_64 rng(seed);

    json rep = json::object();
    rep["input"] = delta.canonical_key();
    sphc::HomologyProfile profile = engine.reduced_betti(delta);
    rep["profile"] = sphc::io::profile_json(profile);
    rep["classification"] = sphc::io::classification_json(sphc::classify(profile));

    // Engine vs Smith-normal-form oracle over Q.
    sphc::oracle::IntegralHomology snf = sphc::oracle::homology_oracle(delta);
    bool snf_ok =
        sphc::HomologyProfile::same_dims(rational_engine.reduced_betti(delta), snf.rational);
    rep["oracle"] = json{{"match", snf_ok}, {"torsion_primes", snf.torsion_primes}};
    if (!snf_ok) fail = true;

    // Per-vertex f-vector, Euler and Mayer-Vietoris identities.
    long long mv_failures = 0;
    for (int v : delta.support())
        if (!sphc::oracle::mv_identity_check(delta, v).pass()) ++mv_failures;
    rep["mv_identities"] = json{{"vertices", delta.support().size()},
                                {"failures", mv_failures}};
    if (mv_failures) fail = true;

    // Alexander duality: dim H~_{n-i-2}(Delta) = dim H~_{i-1}(dual).
    if (!delta.is_void()) {
        int n = delta.universe().size();
        sphc::SimplicialComplex dual = delta.alexander_dual();
        sphc::HomologyProfile p_dual = rational_engine.reduced_betti(dual);
        sphc::HomologyProfile p_self = rational_engine.reduced_betti(delta);
        bool dual_ok = true;
        for (int i = -1; i <= n + 1; ++i)
            if (p_self.at(n - i - 2) != p_dual.at(i - 1)) dual_ok = false;
        rep["alexander_duality"] = dual_ok;
        if (!dual_ok) fail = true;
    }

    // Leray number vs Castelnuovo-Mumford regularity.
    if (!delta.is_void()) {
        sphc::BettiTable table =
            sphc::multigraded_betti(delta, rational_engine, max_vertices, jobs);
        int leray = analyzer.leray_number(delta);
        rep["leray"] = leray;
        rep["regularity"] = table.reg();
        if (leray != table.reg()) fail = true;
    }

    sphc::SphericalVerdict verdict = analyzer.is_spherical(delta);
    rep["spherical"] = sphc::io::verdict_json(verdict);
    if (!verdict.is_spherical || delta.is_void()) return rep;

    // Spherical-only battery: trichotomy, random triples, dimension bounds,
    // sign orderings, depth + pd vs the vertex count.
    for (int v : delta.support()) analyzer.verify_link_del_trichotomy(delta, v);
    rep["trichotomy"] = "pass";

    std::vector<int> verts = delta.universe().to_vector();
    long long triples = 0;
    if (!verts.empty()) {
        std::uniform_int_distribution<int> pick(0, 2);
        std::uniform_int_distribution<std::size_t> pick_v(0, verts.size() - 1);
        for (int t = 0; t < 100; ++t) {
            sphc::VertexSet x, y;
            for (int u : verts) {
                int lot = pick(rng);
                if (lot == 0) x.insert(u);
                if (lot == 1) y.insert(u);
            }
            int v = verts[pick_v(rng)];
            x.erase(v);
            y.erase(v);
            analyzer.verify_triple(delta, x, y, v);
            ++triples;
        }
    }
    rep["triples"] = triples;

    bool non_acyclic = analyzer.engine().classify_complex(delta).is_sphere();
    if (non_acyclic) {
        sphc::BoundsReport bounds = analyzer.verify_dimension_bounds(delta);
        rep["dimension_bounds"] = json{{"base_dim", bounds.base_dim},
                                       {"states", bounds.states}};
    }

    int base_sign = analyzer.sign_of(delta).sign;
    for (int t = 0; t < 5; ++t) {
        std::vector<int> order = delta.support().to_vector();
        std::shuffle(order.begin(), order.end(), rng);
        if (analyzer.sign_of(delta, order).sign != base_sign) fail = true;
    }
    rep["sign"] = base_sign;
    if ((base_sign == 1) != analyzer.engine().classify_complex(delta).is_acyclic())
        fail = true;

    int dep = analyzer.depth(delta);
    int pd = analyzer.projective_dimension(delta);
    rep["dep"] = dep;
    rep["pd"] = pd;
    if (dep + pd != delta.universe().size()) fail = true;
    return rep;
}

struct Scoreboard {
    int passed = 0, failed = 0;

    void record(const std::string& name, bool ok) {
        std::cout << (ok ? "PASS  " : "FAIL  ") << name << "\n";
        (ok ? passed : failed)++;
    }
};

/// Built-in battery of curated golden cases.
int run_examples() {
    sphc::HomologyEngine engine;
    sphc::SphericalAnalyzer analyzer(engine);
    Scoreboard board;

    for (int n = 1; n <= 14; ++n) {
        sphc::Classification cls =
            engine.classify_complex(sphc::independence_complex(sphc::gen_path(n)));
        bool ok;
        if (n % 3 == 0)
            ok = cls.is_sphere() && cls.sphere_dim == n / 3 - 1;
        else if (n % 3 == 1)
            ok = cls.tag == sphc::Classification::Tag::Trivial;
        else
            ok = cls.is_sphere() && cls.sphere_dim == n / 3;
        board.record("path-graph homology n=" + std::to_string(n), ok);
    }

    {
        sphc::SimplicialComplex p3 = sphc::independence_complex(sphc::gen_path(3));
        board.record("Ind(P3) sign", analyzer.sign_of(p3).sign == -1);
        board.record("Ind(P3) dep/pd",
                     analyzer.depth(p3) == 1 && analyzer.projective_dimension(p3) == 2);
        board.record("Ind(P3) Leray", analyzer.leray_number(p3) == 1);
        sphc::BettiTable t = sphc::multigraded_betti(p3, engine);
        board.record("Ind(P3) Betti table",
                     t.entries.size() == 4 && t.at(0, {}) == 1 && t.at(1, {1, 2}) == 1 &&
                         t.at(1, {2, 3}) == 1 && t.at(2, {1, 2, 3}) == 1);
    }

    {
        sphc::SimplicialComplex hex =
            sphc::independence_complex(sphc::gen_cycle_complement(6));
        sphc::SphericalVerdict v = analyzer.is_spherical(hex);
        board.record("hexagon-complement rejected",
                     !v.is_spherical && v.witness && v.witness->profile.at(0) >= 2);
    }

    {
        sphc::Graph g(8);
        for (auto [u, v] : {std::pair{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
                            {1, 6}, {5, 7}, {7, 8}})
            g.add_edge(u, v);
        sphc::SimplicialComplex ind = sphc::independence_complex(g);
        sphc::DValue base = analyzer.d_value(ind, {}, {});
        sphc::DValue lk = analyzer.d_value(ind, {1}, {});
        sphc::DValue del = analyzer.d_value(ind, {}, {1});
        board.record("8-vertex graph d-triple",
                     base == sphc::DValue::of_dim(2) && lk == sphc::DValue::of_dim(1) &&
                         del.star);
        sphc::FiltrationRecord f = analyzer.build_maximal_filtration(ind);
        board.record("8-vertex graph dep", f.dep == 3);
        sphc::BettiTable t = sphc::multigraded_betti(ind, engine);
        board.record("8-vertex graph depth_alg", sphc::depth_alg(t, t.n) == 3);
        board.record("8-vertex graph Leray", analyzer.leray_number(ind) == 3);
    }

    {
        sphc::Graph g(6);
        for (auto [u, v] :
             {std::pair{1, 2}, {2, 3}, {3, 4}, {4, 1}, {3, 5}, {1, 6}})
            g.add_edge(u, v);
        sphc::SimplicialComplex ind = sphc::independence_complex(g);
        sphc::FiltrationRecord f = analyzer.build_maximal_filtration(ind);
        sphc::BettiTable t = sphc::multigraded_betti(ind, engine);
        board.record("pendant-square graph dep", f.dep == 2);
        board.record("pendant-square graph reg=depth=2",
                     t.reg() == 2 && sphc::depth_alg(t, t.n) == 2);
    }

    {
        sphc::SimplicialComplex ind =
            sphc::independence_complex(sphc::gen_unicyclic(4, 3));
        sphc::BettiTable t = sphc::multigraded_betti(ind, engine);
        sphc::Classification cls = engine.classify_complex(ind);
        board.record("unicyclic(4,3) depth/reg/sphere",
                     analyzer.depth(ind) == 2 && t.reg() == 2 && cls.is_sphere() &&
                         cls.sphere_dim == 1);
    }

    {
        sphc::SimplicialComplex full = sphc::SimplicialComplex::full_simplex({1, 2, 3, 4});
        board.record("full simplex pd/dep/Leray",
                     analyzer.projective_dimension(full) == 0 && analyzer.depth(full) == 4 &&
                         analyzer.leray_number(full) == 0);
    }

    std::cout << board.passed << " passed, " << board.failed << " failed\n";
    return board.failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of simplicial complexes and independence complexes"};
    app.require_subcommand(1);

    std::string file = "-";
    std::string field_str = "q";
    std::string order_csv;
    std::string route = "hochster";
    std::string format = "json";
    int max_vertices = 16;
    int jobs = 1;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* sub, bool with_file = true) {
        if (with_file) sub->add_option("file", file, "input file, - for stdin");
        sub->add_option("--field", field_str, "coefficient field: q or F_p");
        sub->add_option("--max-vertices", max_vertices, "guard on full enumerations");
        sub->add_option("--jobs", jobs, "worker count for subset sweeps");
        sub->add_option("--format", format, "json|tsv|pretty");
    };

    CLI::App* homology = app.add_subcommand("homology", "reduced homology profile");
    add_common(homology);
    CLI::App* spherical = app.add_subcommand("spherical", "spherical verdict + witness");
    add_common(spherical);
    CLI::App* filtration = app.add_subcommand("filtration", "greedy maximal filtration");
    add_common(filtration);
    CLI::App* sign = app.add_subcommand("sign", "split-poset sign and level counts");
    add_common(sign);
    sign->add_option("--order", order_csv, "comma-separated vertex order");
    CLI::App* betti = app.add_subcommand("betti", "multigraded Betti table");
    add_common(betti);
    betti->add_option("--route", route, "hochster|spherical|both")
        ->check(CLI::IsMember({"hochster", "spherical", "both"}));
    CLI::App* invariants = app.add_subcommand("invariants", "pd, depth, reg, Leray");
    add_common(invariants);

    CLI::App* graph = app.add_subcommand("graph", "graph utilities");
    graph->require_subcommand(1);
    CLI::App* graph_ind = graph->add_subcommand("ind", "independence complex as .cplx");
    graph_ind->add_option("file", file, "input .graph, - for stdin");
    CLI::App* graph_ternary =
        graph->add_subcommand("ternary", "induced-3k-cycle check");
    graph_ternary->add_option("file", file, "input .graph, - for stdin");

    CLI::App* forest = app.add_subcommand("forest", "simplicial-forest check");
    forest->add_option("file", file, "input .cplx, - for stdin");

    CLI::App* gen = app.add_subcommand("gen", "emit generated graphs");
    gen->require_subcommand(1);
    int gn = 3, gm = 1;
    CLI::App* gen_path_cmd = gen->add_subcommand("path", "path graph");
    gen_path_cmd->add_option("n", gn)->required();
    CLI::App* gen_cycle_cmd = gen->add_subcommand("cycle", "cycle graph");
    gen_cycle_cmd->add_option("n", gn)->required();
    CLI::App* gen_cocycle_cmd = gen->add_subcommand("cocycle", "cycle complement");
    gen_cocycle_cmd->add_option("n", gn)->required();
    CLI::App* gen_uni_cmd = gen->add_subcommand("unicyclic", "cycle with attached path");
    gen_uni_cmd->add_option("n", gn)->required();
    gen_uni_cmd->add_option("m", gm)->required();

    CLI::App* verify = app.add_subcommand("verify", "full invariant battery");
    add_common(verify);
    verify->add_option("--seed", seed, "seed for randomized sub-checks");

    CLI::App* examples =
        app.add_subcommand("examples", "curated golden-case scoreboard");

    try {
        app.parse(argc, argv);

        if (examples->parsed()) return run_examples();

        if (gen->parsed()) {
            sphc::Graph g = gen_path_cmd->parsed()     ? sphc::gen_path(gn)
                            : gen_cycle_cmd->parsed()  ? sphc::gen_cycle(gn)
                            : gen_cocycle_cmd->parsed() ? sphc::gen_cycle_complement(gn)
                                                        : sphc::gen_unicyclic(gn, gm);
            std::cout << sphc::io::write_graph(g);
            return 0;
        }

        if (graph_ind->parsed()) {
            std::cout << sphc::io::write_cplx(sphc::independence_complex(load_graph(file)));
            return 0;
        }
        if (graph_ternary->parsed()) {
            sphc::TernaryCheck check = sphc::is_ternary(load_graph(file));
            json out{{"ternary", check.is_ternary}};
            if (check.witness_cycle) out["witness_cycle"] = *check.witness_cycle;
            emit(out);
            return check.is_ternary ? 0 : 1;
        }
        if (forest->parsed()) {
            sphc::ForestCheck check = sphc::is_simplicial_forest(load_cplx(file));
            json out{{"forest", check.is_forest}};
            if (check.leafless_subcollection) {
                json bad = json::array();
                for (const sphc::VertexSet& f : *check.leafless_subcollection)
                    bad.push_back(f.to_string());
                out["leafless_subcollection"] = bad;
            }
            emit(out);
            return check.is_forest ? 0 : 1;
        }

        sphc::FieldSpec field = parse_field(field_str);
        sphc::HomologyEngine engine(field);
        sphc::SphericalAnalyzer analyzer(engine, max_vertices);
        sphc::SimplicialComplex delta = load_cplx(file);

        if (homology->parsed()) {
            sphc::HomologyProfile profile = engine.reduced_betti(delta);
            emit(json{{"profile", sphc::io::profile_json(profile)},
                      {"classification",
                       sphc::io::classification_json(sphc::classify(profile))}});
            return 0;
        }
        if (spherical->parsed()) {
            sphc::SphericalVerdict verdict = analyzer.is_spherical(delta);
            emit(sphc::io::verdict_json(verdict));
            return verdict.is_spherical ? 0 : 1;
        }
        if (filtration->parsed()) {
            emit(sphc::io::filtration_json(analyzer.build_maximal_filtration(delta)));
            return 0;
        }
        if (sign->parsed()) {
            std::optional<std::vector<int>> order;
            if (!order_csv.empty()) order = parse_order(order_csv);
            emit(sphc::io::sign_json(analyzer.sign_of(delta, order)));
            return 0;
        }
        if (betti->parsed()) {
            std::optional<sphc::BettiTable> hochster, spherical_route;
            if (route != "spherical")
                hochster = sphc::multigraded_betti(delta, engine, max_vertices, jobs);
            if (route != "hochster")
                spherical_route = sphc::betti_via_spherical(delta, analyzer);
            const sphc::BettiTable& table = hochster ? *hochster : *spherical_route;
            if (format == "tsv")
                std::cout << sphc::io::betti_tsv(table);
            else if (format == "pretty")
                std::cout << sphc::io::betti_diagram(table);
            else
                emit(sphc::io::betti_json(table));
            if (hochster && spherical_route && !(*hochster == *spherical_route)) {
                std::cerr << "betti: route disagreement\n";
                return 1;
            }
            return 0;
        }
        if (invariants->parsed()) {
            sphc::AlgCombReport rep = sphc::verify_alg_comb_equalities(delta, analyzer);
            emit(json{{"pd", rep.pd_algebraic},
                      {"depth", rep.depth_algebraic},
                      {"reg", rep.reg},
                      {"leray", rep.leray},
                      {"non_acyclic", rep.non_acyclic}});
            return 0;
        }
        if (verify->parsed()) {
            bool fail = false;
            json rep = run_verify(delta, field, max_vertices, jobs, seed, fail);
            rep["pass"] = !fail;
            emit(rep);
            return fail ? 1 : 0;
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const sphc::GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 3;
    } catch (const sphc::IntegrityError& e) {
        std::cerr << "integrity violation: " << e.what() << "\n";
        return 1;
    } catch (const sphc::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
