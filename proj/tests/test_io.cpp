#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "sphc/graph.hpp"
#include "sphc/io.hpp"

using namespace sphc;

TEST_CASE("cplx round trip") {
    SimplicialComplex c =
        SimplicialComplex::from_facets({{0, 1, 2}, {2, 3}}, VertexSet{0, 1, 2, 3, 5});
    std::string text = io::write_cplx(c);
    std::istringstream in(text);
    CHECK(io::read_cplx(in) == c);

    std::istringstream empty("");
    CHECK(io::read_cplx(empty).is_void());

    std::istringstream paren("()\n");
    CHECK(io::read_cplx(paren).is_empty_face_complex());

    std::istringstream commented("# facets of a path\n1 2\n2 3\n");
    SimplicialComplex path = io::read_cplx(commented);
    CHECK(path.facets().size() == 2);

    std::istringstream with_universe("#universe 1 2 3 4\n1 2\n");
    CHECK(io::read_cplx(with_universe).universe() == VertexSet{1, 2, 3, 4});

    std::istringstream bad("1 x\n");
    CHECK_THROWS_AS(io::read_cplx(bad), InvalidArgument);
    std::istringstream out_of_range("77\n");
    CHECK_THROWS_AS(io::read_cplx(out_of_range), InvalidArgument);
}

TEST_CASE("graph round trip") {
    Graph g = gen_unicyclic(4, 2);
    std::string text = io::write_graph(g);
    std::istringstream in(text);
    Graph h = io::read_graph(in);
    CHECK(h.vertex_count() == g.vertex_count());
    CHECK(h.edges() == g.edges());

    std::istringstream bad("");
    CHECK_THROWS_AS(io::read_graph(bad), InvalidArgument);
}

TEST_CASE("json serializations are schema-stable") {
    HomologyEngine engine;
    SimplicialComplex p3 = independence_complex(gen_path(3));

    io::json profile = io::profile_json(engine.reduced_betti(p3));
    CHECK(profile["field"] == "Q");
    CHECK(profile["dims"]["-1"] == 0);
    CHECK(profile["dims"]["0"] == 1);

    SphericalAnalyzer analyzer(engine);
    io::json verdict =
        io::verdict_json(analyzer.is_spherical(independence_complex(gen_cycle_complement(6))));
    CHECK(verdict["spherical"] == false);
    CHECK(verdict["witness"]["profile"]["dims"]["0"].get<long long>() >= 2);

    io::json filt = io::filtration_json(analyzer.build_maximal_filtration(p3));
    REQUIRE(filt["steps"].size() == 2);
    CHECK(filt["steps"][0] == io::json::array({"D", 1}));
    CHECK(filt["steps"][1] == io::json::array({"L", 2}));
    CHECK(filt["dep"] == 1);
    CHECK(filt["pd"] == 2);

    io::json betti = io::betti_json(multigraded_betti(p3, engine));
    CHECK(betti["n"] == 3);
    REQUIRE(betti["entries"].size() == 4);
    CHECK(betti["entries"][0]["i"] == 0);
    CHECK(betti["entries"][0]["support"].empty());
    bool found = false;
    for (auto& e : betti["entries"])
        if (e["i"] == 1 && e["support"] == io::json::array({1, 2})) found = true;
    CHECK(found);

    // Identical inputs serialize byte-identically.
    CHECK(io::betti_json(multigraded_betti(p3, engine)).dump() == betti.dump());
}

TEST_CASE("betti tsv and diagram") {
    HomologyEngine engine;
    SimplicialComplex p3 = independence_complex(gen_path(3));
    BettiTable t = multigraded_betti(p3, engine);

    std::string tsv = io::betti_tsv(t);
    CHECK(tsv.find("i\tsupport\tvalue") == 0);
    CHECK(tsv.find("1\t{1,2}\t1") != std::string::npos);

    std::string diagram = io::betti_diagram(t);
    CHECK(diagram.find("0:") != std::string::npos);
    CHECK(diagram.find("1:") != std::string::npos);
}

TEST_CASE("sign json") {
    HomologyEngine engine;
    SphericalAnalyzer analyzer(engine);
    io::json s = io::sign_json(analyzer.sign_of(independence_complex(gen_path(3))));
    CHECK(s["sign"] == -1);
    CHECK(s["order"] == io::json::array({1, 2, 3}));
    REQUIRE(s["level_counts"].size() == 4);
}
