#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "sphc/complex.hpp"
#include "sphc/graph.hpp"

using namespace sphc;

namespace {

// Labels for the running 4-vertex example <{x,y,z},{z,w}>.
constexpr int x = 0, y = 1, z = 2, w = 3;

SimplicialComplex xyz_zw() {
    return SimplicialComplex::from_facets({{x, y, z}, {z, w}});
}

}  // namespace

TEST_CASE("from_facets canonicalizes to an antichain") {
    SimplicialComplex c = SimplicialComplex::from_facets({{x, y, z}, {z, w}, {x, y}});
    REQUIRE(c.facets().size() == 2);
    CHECK(c.facets()[0] == VertexSet{z, w});
    CHECK(c.facets()[1] == VertexSet{x, y, z});

    SimplicialComplex d = SimplicialComplex::from_facets({{x, y}, {x, y}, {y, x}});
    CHECK(d.facets().size() == 1);
}

TEST_CASE("void complex vs the empty-face complex") {
    SimplicialComplex v = SimplicialComplex::void_complex();
    CHECK(v.is_void());
    CHECK(!v.is_empty_face_complex());
    CHECK(v.universe().empty());
    CHECK_THROWS_AS(v.dim(), InvalidArgument);
    CHECK_THROWS_AS(v.f_vector(), InvalidArgument);

    SimplicialComplex e = SimplicialComplex::from_facets({VertexSet{}});
    CHECK(!e.is_void());
    CHECK(e.is_empty_face_complex());
    CHECK(e.dim() == -1);
    CHECK(e.f_vector() == std::vector<long long>{1});
    CHECK(e == SimplicialComplex::empty_face_complex());

    CHECK(SimplicialComplex::from_facets({}, VertexSet{}).is_void());
    CHECK_THROWS_AS(SimplicialComplex::from_facets({}, VertexSet{0, 1}), InvalidArgument);
}

TEST_CASE("explicit universe may exceed the support but not the reverse") {
    SimplicialComplex c = SimplicialComplex::from_facets({{x, y}}, VertexSet{x, y, z});
    CHECK(c.universe() == VertexSet{x, y, z});
    CHECK(c.support() == VertexSet{x, y});
    CHECK_THROWS_AS(SimplicialComplex::from_facets({{x, y}}, VertexSet{x}), InvalidArgument);
}

TEST_CASE("link") {
    SimplicialComplex c = xyz_zw();
    SimplicialComplex lk = c.link(z);
    REQUIRE(lk.facets().size() == 2);
    CHECK(lk.facets()[0] == VertexSet{w});
    CHECK(lk.facets()[1] == VertexSet{x, y});
    CHECK(!lk.universe().contains(z));

    CHECK(c.link(17).is_void());
    CHECK(SimplicialComplex::from_facets({{5}}).link(5).is_empty_face_complex());
}

TEST_CASE("deletion") {
    SimplicialComplex c = xyz_zw();
    SimplicialComplex del = c.deletion(w);
    REQUIRE(del.facets().size() == 1);
    CHECK(del.facets()[0] == VertexSet{x, y, z});

    SimplicialComplex pts = SimplicialComplex::from_facets({{x}, {y}});
    CHECK(pts.deletion(x).facets()[0] == VertexSet{y});

    SimplicialComplex a = SimplicialComplex::from_facets({{5}});
    CHECK(a.deletion(9) == a);  // vertex outside the universe
}

TEST_CASE("star and induced") {
    SimplicialComplex c = xyz_zw();
    SimplicialComplex st = c.star(w);
    REQUIRE(st.facets().size() == 1);
    CHECK(st.facets()[0] == VertexSet{z, w});
    CHECK(st.universe() == c.universe());

    CHECK(c.induced({}).is_empty_face_complex());
    CHECK_THROWS_AS(c.induced({17}), InvalidArgument);

    // Hexagon minus alternating vertices: three isolated points.
    SimplicialComplex hex = independence_complex(gen_cycle_complement(6));
    SimplicialComplex sigma = hex.induced({1, 3, 5});
    REQUIRE(sigma.facets().size() == 3);
    for (const VertexSet& f : sigma.facets()) CHECK(f.size() == 1);
}

TEST_CASE("sub_state basics and order independence") {
    SimplicialComplex c = xyz_zw();
    CHECK(c.sub_state({}, {}) == c);
    CHECK(c.sub_state({z}, {}) == c.link(z));
    CHECK(c.sub_state({}, {z}) == c.deletion(z));
    CHECK_THROWS_AS(c.sub_state({x}, {x}), InvalidArgument);
    std::vector<int> bad = {x};
    CHECK_THROWS_AS(c.sub_state({x}, {y}, bad), InvalidArgument);

    std::mt19937_64 rng(7);
    SimplicialComplex big = independence_complex(gen_unicyclic(5, 3));
    std::vector<int> verts = {1, 3, 4, 6, 8};
    VertexSet xs = {1, 4}, ys = {3, 6, 8};
    SimplicialComplex ref = big.sub_state(xs, ys, verts);
    for (int t = 0; t < 20; ++t) {
        std::shuffle(verts.begin(), verts.end(), rng);
        CHECK(big.sub_state(xs, ys, verts) == ref);
    }
}

TEST_CASE("eight-vertex example folds down to the empty-face complex") {
    Graph g(8);
    for (auto [u, v] : {std::pair{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
                        {1, 6}, {5, 7}, {7, 8}})
        g.add_edge(u, v);
    SimplicialComplex ind = independence_complex(g);
    CHECK(ind.sub_state({6, 8, 4}, {2}).is_empty_face_complex());
}

TEST_CASE("alexander dual") {
    SimplicialComplex two_pts = SimplicialComplex::from_facets({{1}, {2}});
    CHECK(two_pts.alexander_dual().is_empty_face_complex());

    CHECK(SimplicialComplex::full_simplex({1, 2, 3}).alexander_dual().is_void());

    // Dual of the dual is the original complex (same ambient set).
    SimplicialComplex c = xyz_zw();
    CHECK(c.alexander_dual().alexander_dual(c.universe()) == c);
    SimplicialComplex hex = independence_complex(gen_cycle_complement(6));
    CHECK(hex.alexander_dual().alexander_dual(hex.universe()) == hex);
}

TEST_CASE("join") {
    SimplicialComplex s0a = SimplicialComplex::from_facets({{1}, {2}});
    SimplicialComplex s0b = SimplicialComplex::from_facets({{3}, {4}});
    SimplicialComplex j = SimplicialComplex::join(s0a, s0b);
    REQUIRE(j.facets().size() == 4);
    for (const VertexSet& f : j.facets()) CHECK(f.size() == 2);
    CHECK(j.is_face({1, 3}));
    CHECK(j.is_face({2, 4}));
    CHECK(!j.is_face({1, 2}));

    CHECK(SimplicialComplex::join(s0a, SimplicialComplex::empty_face_complex()) == s0a);
    CHECK(SimplicialComplex::join(s0a, SimplicialComplex::void_complex()).is_void());
    CHECK_THROWS_AS(SimplicialComplex::join(s0a, s0a), InvalidArgument);

    // f-polynomial of the join is the product of f-polynomials:
    // f_k(join) = sum_{i+j=k-1} f_i(a) f_j(b), indices shifted by one.
    SimplicialComplex a = xyz_zw();
    SimplicialComplex b = SimplicialComplex::from_facets({{10, 11}, {11, 12}});
    std::vector<long long> fa = a.f_vector(), fb = b.f_vector();
    std::vector<long long> fj = SimplicialComplex::join(a, b).f_vector();
    for (std::size_t k = 0; k < fj.size(); ++k) {
        long long expect = 0;
        for (std::size_t i = 0; i < fa.size(); ++i)
            if (k >= i && k - i < fb.size()) expect += fa[i] * fb[k - i];
        CHECK(fj[k] == expect);
    }
}

TEST_CASE("f-vector values") {
    CHECK(SimplicialComplex::from_facets({{1, 2}}).f_vector() ==
          std::vector<long long>{1, 2, 1});
    SimplicialComplex hex = independence_complex(gen_cycle_complement(6));
    CHECK(hex.f_vector() == std::vector<long long>{1, 6, 6});
}

TEST_CASE("f-vector splitting at every vertex") {
    for (const SimplicialComplex& c :
         {xyz_zw(), independence_complex(gen_cycle_complement(6)),
          independence_complex(gen_unicyclic(4, 2))}) {
        auto f_at = [](const SimplicialComplex& d, int i) -> long long {
            if (d.is_void()) return 0;
            std::vector<long long> f = d.f_vector();
            std::size_t idx = static_cast<std::size_t>(i + 1);
            return idx < f.size() ? f[idx] : 0;
        };
        for (int v : c.support())
            for (int i = -1; i <= c.dim(); ++i)
                CHECK(f_at(c, i) == f_at(c.deletion(v), i) + f_at(c.link(v), i - 1));
    }
}

TEST_CASE("minimal nonfaces") {
    SimplicialComplex p3 = independence_complex(gen_path(3));
    std::vector<VertexSet> mnf = p3.minimal_nonfaces();
    REQUIRE(mnf.size() == 2);
    CHECK(mnf[0] == VertexSet{1, 2});
    CHECK(mnf[1] == VertexSet{2, 3});

    CHECK(SimplicialComplex::full_simplex({1, 2, 3}).minimal_nonfaces().empty());

    std::vector<VertexSet> mnf2 = xyz_zw().minimal_nonfaces();
    REQUIRE(mnf2.size() == 2);
    CHECK(mnf2[0] == VertexSet{x, w});
    CHECK(mnf2[1] == VertexSet{y, w});
}

TEST_CASE("faces, cones, keys") {
    SimplicialComplex c = xyz_zw();
    CHECK(c.faces().size() == 1 + 4 + 4 + 1);  // by dimension: {}, 4, {xy,xz,yz,zw}, xyz
    CHECK(c.is_cone());  // z lies in every facet
    CHECK(!independence_complex(gen_path(3)).is_cone());
    CHECK(!SimplicialComplex::void_complex().is_cone());
    CHECK(!SimplicialComplex::empty_face_complex().is_cone());

    SimplicialComplex shifted = SimplicialComplex::from_facets({{x + 9, y + 9, z + 9},
                                                                {z + 9, w + 9}});
    CHECK(c.canonical_key() != shifted.canonical_key());
    CHECK(c.normalized_key() == shifted.normalized_key());
}
