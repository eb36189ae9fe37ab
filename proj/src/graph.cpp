#include "sphc/graph.hpp"

#include <random>

namespace sphc {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1) {
    if (n < 0 || n > VertexSet::kMaxVertex)
        throw InvalidArgument("graph vertex count out of range");
}

void Graph::add_edge(int u, int v) {
    if (u < 1 || u > n_ || v < 1 || v > n_ || u == v)
        throw InvalidArgument("bad edge endpoints");
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
}

bool Graph::has_edge(int u, int v) const {
    return u >= 1 && u <= n_ && adj_[static_cast<std::size_t>(u)].contains(v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (v > u) out.emplace_back(u, v);
    return out;
}

long long Graph::edge_count() const { return static_cast<long long>(edges().size()); }

VertexSet Graph::vertex_set() const {
    VertexSet s;
    for (int v = 1; v <= n_; ++v) s.insert(v);
    return s;
}

namespace {

// Bron-Kerbosch with pivoting on the complement graph: maximal independent
// sets of g are maximal cliques of the complement.
void bk_maximal_independent(const Graph& g, VertexSet all, VertexSet r, VertexSet p,
                            VertexSet x, std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    auto co_nbrs = [&](int v) { return (all - g.neighbors(v)).without(v); };
    int pivot = -1, best = -1;
    for (int v : p | x) {
        int deg = (p & co_nbrs(v)).size();
        if (deg > best) {
            best = deg;
            pivot = v;
        }
    }
    for (int v : p - co_nbrs(pivot)) {
        bk_maximal_independent(g, all, r.with(v), p & co_nbrs(v), x & co_nbrs(v), out);
        p.erase(v);
        x.insert(v);
    }
}

}  // namespace

SimplicialComplex independence_complex(const Graph& g) {
    VertexSet all = g.vertex_set();
    if (all.empty()) return SimplicialComplex::empty_face_complex();
    std::vector<VertexSet> facets;
    bk_maximal_independent(g, all, {}, all, {}, facets);
    return SimplicialComplex::from_facets(std::move(facets), all);
}

SimplicialComplex independence_complex_of_complex(const SimplicialComplex& delta) {
    if (delta.is_void())
        throw InvalidArgument("independence complex of the void complex is undefined");
    VertexSet supp = delta.support();
    std::vector<int> verts = supp.to_vector();
    std::size_t n = verts.size();
    if (n > 20) throw GuardExceeded("independence_complex_of_complex: too many vertices");

    auto independent = [&](VertexSet s) {
        for (const VertexSet& f : delta.facets())
            if (!f.empty() && f.subset_of(s)) return false;
        return true;
    };
    std::vector<VertexSet> facets;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet s;
        for (std::size_t i = 0; i < n; ++i)
            if (bits >> i & 1u) s.insert(verts[i]);
        if (!independent(s)) continue;
        bool maximal = true;
        for (int v : supp - s)
            if (independent(s.with(v))) {
                maximal = false;
                break;
            }
        if (maximal) facets.push_back(s);
    }
    return SimplicialComplex::from_facets(std::move(facets), supp);
}

namespace {

// Grow chordless paths from the smallest cycle vertex s; a new vertex may be
// adjacent only to the current endpoint, and closing back to s yields an
// induced cycle. Aborts with a witness as soon as a cycle of length
// divisible by 3 shows up.
bool chordless_dfs(const Graph& g, int s, std::vector<int>& path, VertexSet on_path,
                   VertexSet forbidden, std::vector<int>* witness) {
    int last = path.back();
    for (int w : g.neighbors(last)) {
        if (w <= s || on_path.contains(w)) continue;
        if (forbidden.contains(w)) continue;
        bool closes = g.has_edge(w, s);
        // Chordless: w must avoid all earlier path vertices except last (and
        // s when closing), which `forbidden` already encodes.
        if (closes && path.size() >= 2) {
            if ((path.size() + 1) % 3 == 0) {
                if (witness) {
                    *witness = path;
                    witness->push_back(w);
                }
                return true;
            }
            continue;  // cannot extend past a neighbor of s without a chord
        }
        path.push_back(w);
        VertexSet next_forbidden = forbidden | (g.neighbors(last) - VertexSet{w});
        if (chordless_dfs(g, s, path, on_path.with(w), next_forbidden, witness))
            return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

TernaryCheck is_ternary(const Graph& g, int max_vertices) {
    if (g.vertex_count() > max_vertices)
        throw GuardExceeded("is_ternary: vertex count exceeds guard");
    for (int s = 1; s <= g.vertex_count(); ++s) {
        for (int v : g.neighbors(s)) {
            if (v <= s) continue;
            std::vector<int> path = {s, v};
            std::vector<int> witness;
            // Neighbors of s other than v are only usable as the closing
            // vertex; mark them forbidden for interior extension.
            VertexSet forbid;
            if (chordless_dfs(g, s, path, VertexSet{s, v}, forbid, &witness))
                return {false, witness};
        }
    }
    return {true, std::nullopt};
}

ForestCheck is_simplicial_forest(const SimplicialComplex& delta, int max_facets) {
    if (delta.is_void() || delta.is_empty_face_complex()) return {true, std::nullopt};
    std::vector<VertexSet> facets(delta.facets().begin(), delta.facets().end());
    int q = static_cast<int>(facets.size());
    if (q > max_facets) throw GuardExceeded("is_simplicial_forest: facet count exceeds guard");

    for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << q); ++sub) {
        std::vector<VertexSet> coll;
        for (int i = 0; i < q; ++i)
            if (sub >> i & 1u) coll.push_back(facets[static_cast<std::size_t>(i)]);
        bool has_leaf = false;
        if (coll.size() == 1) has_leaf = true;
        for (std::size_t fi = 0; fi < coll.size() && !has_leaf; ++fi) {
            for (std::size_t gi = 0; gi < coll.size() && !has_leaf; ++gi) {
                if (gi == fi) continue;
                bool joint = true;
                for (std::size_t hi = 0; hi < coll.size() && joint; ++hi) {
                    if (hi == fi) continue;
                    joint = (coll[hi] & coll[fi]).subset_of(coll[gi] & coll[fi]);
                }
                has_leaf = joint;
            }
        }
        if (!has_leaf) return {false, coll};
    }
    return {true, std::nullopt};
}

Graph gen_path(int n) {
    if (n < 1) throw InvalidArgument("gen_path: n >= 1 required");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph gen_cycle(int n) {
    if (n < 3) throw InvalidArgument("gen_cycle: n >= 3 required");
    Graph g = gen_path(n);
    g.add_edge(n, 1);
    return g;
}

Graph gen_cycle_complement(int n) {
    if (n < 3) throw InvalidArgument("gen_cycle_complement: n >= 3 required");
    Graph cycle = gen_cycle(n);
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!cycle.has_edge(u, v)) g.add_edge(u, v);
    return g;
}

Graph gen_unicyclic(int n, int m) {
    if (n < 3 || m < 1) throw InvalidArgument("gen_unicyclic: need n >= 3, m >= 1");
    Graph g(n + m);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    g.add_edge(n, 1);
    g.add_edge(1, n + 1);
    for (int i = 1; i < m; ++i) g.add_edge(n + i, n + i + 1);
    return g;
}

std::optional<UnicyclicInvariants> unicyclic_expected(int n, int m) {
    if (n < 3 || m < 1 || n % 3 == 0 || n % 3 == m % 3) return std::nullopt;
    int depth;
    if (n % 3 == 1 && m % 3 == 0)
        depth = (n - 1) / 3 + m / 3;
    else if (n % 3 == 1 && m % 3 == 2)
        depth = (n - 1) / 3 + (m - 2) / 3 + 1;
    else if (n % 3 == 2 && m % 3 == 0)
        depth = (n - 2) / 3 + m / 3 + 1;
    else  // n = 2, m = 1 mod 3
        depth = (n - 2) / 3 + (m - 1) / 3 + 1;
    return UnicyclicInvariants{depth, depth - 1};
}

Graph random_ternary(int n, double edge_probability, std::uint64_t seed) {
    if (edge_probability < 0.0 || edge_probability > 1.0)
        throw InvalidArgument("random_ternary: probability out of [0,1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Graph g(n);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (coin(rng) < edge_probability) g.add_edge(u, v);
        if (is_ternary(g).is_ternary) return g;
    }
    throw InvalidArgument("random_ternary: 1000 rejections; lower the edge probability");
}

}  // namespace sphc
