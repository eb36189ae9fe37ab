#ifndef SPHC_GRAPH_HPP
#define SPHC_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sphc/complex.hpp"

namespace sphc {

/// Simple undirected graph on vertices 1..n, adjacency kept as bitmasks.
class Graph {
public:
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    std::vector<std::pair<int, int>> edges() const;
    long long edge_count() const;

    VertexSet vertex_set() const;

private:
    int n_;
    std::vector<VertexSet> adj_;  // index 0 unused
};

/// Faces are the independent sets of G; facets the maximal ones, found by
/// Bron-Kerbosch on the complement. The empty graph gives the full simplex.
SimplicialComplex independence_complex(const Graph& g);

/// Independence complex of an arbitrary complex: faces are the vertex sets
/// containing no facet of delta. Agrees with the graph version when delta is
/// one-dimensional.
SimplicialComplex independence_complex_of_complex(const SimplicialComplex& delta);

struct TernaryCheck {
    bool is_ternary;
    std::optional<std::vector<int>> witness_cycle;  // an induced 3k-cycle
};

/// No induced cycles of length divisible by 3. Enumerates chordless cycles
/// by canonical-start DFS; guard on the vertex count.
TernaryCheck is_ternary(const Graph& g, int max_vertices = 24);

struct ForestCheck {
    bool is_forest;
    std::optional<std::vector<VertexSet>> leafless_subcollection;
};

/// Every nonempty subcollection of facets has a leaf: a facet F such that
/// some facet G != F satisfies H&F <= G&F for all facets H != F (or F is the
/// only facet). Exhaustive over subcollections; guard on the facet count.
ForestCheck is_simplicial_forest(const SimplicialComplex& delta, int max_facets = 12);

Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_cycle_complement(int n);
/// Cycle x_1..x_n with a path y_1..y_m attached at x_1; vertices labeled
/// 1..n for the cycle, n+1..n+m for the path.
Graph gen_unicyclic(int n, int m);

struct UnicyclicInvariants {
    int depth;
    int sphere_dim;
};

/// Closed forms for depth / sphere dimension of Ind(G_{n,m}) in the covered
/// cases (n >= 3, m >= 1, 3 does not divide n, n != m mod 3); nullopt
/// otherwise.
std::optional<UnicyclicInvariants> unicyclic_expected(int n, int m);

/// Seeded Erdos-Renyi rejection sampler; every output passes is_ternary.
/// Throws after 1000 rejections.
Graph random_ternary(int n, double edge_probability, std::uint64_t seed);

}  // namespace sphc

#endif
