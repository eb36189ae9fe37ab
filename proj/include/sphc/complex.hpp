#ifndef SPHC_COMPLEX_HPP
#define SPHC_COMPLEX_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sphc/vertex_set.hpp"

namespace sphc {

/// A simplicial complex given by its facets, kept as a canonical antichain
/// sorted by (size, lexicographic). The vertex universe is carried explicitly
/// and may strictly contain the facet support (ghost vertices matter for
/// Alexander duals and induced-subcomplex bookkeeping).
///
/// The void complex (no faces at all) is distinct from the complex whose only
/// face is the empty set: the former has no facets and an empty universe, the
/// latter has the single facet {}.
class SimplicialComplex {
public:
    static SimplicialComplex void_complex() { return SimplicialComplex(); }

    /// The complex whose only face is the empty set, on an optional universe.
    static SimplicialComplex empty_face_complex(VertexSet universe = {}) {
        SimplicialComplex c;
        c.universe_ = universe;
        c.facets_ = {VertexSet{}};
        return c;
    }

    static SimplicialComplex full_simplex(VertexSet vertices) {
        SimplicialComplex c;
        c.universe_ = vertices;
        c.facets_ = {vertices};
        return c;
    }

    /// Canonicalize raw facets: drop duplicates and contained facets, sort.
    /// With no universe given, the universe is the union of the facets. An
    /// empty facet list with an empty universe yields the void complex; a
    /// nonempty universe with no facets is rejected.
    static SimplicialComplex from_facets(std::vector<VertexSet> raw,
                                         std::optional<VertexSet> universe = std::nullopt);

    bool is_void() const { return facets_.empty(); }
    bool is_empty_face_complex() const {
        return facets_.size() == 1 && facets_[0].empty();
    }

    VertexSet universe() const { return universe_; }
    /// Union of all facets: the vertices actually present in the complex.
    VertexSet support() const;
    std::span<const VertexSet> facets() const { return facets_; }

    /// dim of the complex: -1 for {}, largest facet size minus one otherwise.
    /// Undefined (throws) on the void complex.
    int dim() const;

    bool is_face(VertexSet sigma) const;
    bool has_vertex(int v) const { return support().contains(v); }

    /// A cone over some vertex: one vertex lies in every facet. The void
    /// complex and {} are not cones.
    bool is_cone() const;

    SimplicialComplex link(int v) const;
    SimplicialComplex deletion(int v) const;
    SimplicialComplex star(int v) const;
    SimplicialComplex induced(VertexSet a) const;

    /// Fold links over X and deletions over Y along the given vertex order
    /// (defaults to ascending ids). The result is order-independent since
    /// links and deletions at distinct vertices commute.
    SimplicialComplex sub_state(VertexSet x, VertexSet y,
                                std::span<const int> order = {}) const;

    /// Alexander dual with respect to the given ambient vertex set (defaults
    /// to the universe). Dualizing a full simplex yields the void complex.
    SimplicialComplex alexander_dual(std::optional<VertexSet> ambient = std::nullopt) const;

    static SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

    /// All faces including the empty face, enumerated by streaming facet
    /// subsets through a deduplicating set (never the ambient power set).
    std::vector<VertexSet> faces() const;

    /// (f_{-1}, f_0, ..., f_dim). Throws on the void complex.
    std::vector<long long> f_vector() const;

    /// Inclusion-minimal non-faces with respect to the ambient set (defaults
    /// to the universe). Generators of the Stanley-Reisner ideal.
    std::vector<VertexSet> minimal_nonfaces(std::optional<VertexSet> ambient = std::nullopt) const;

    /// Deterministic serialization of (universe, facets); memoization key.
    std::string canonical_key() const;

    /// Like canonical_key but with support vertices relabeled 0..k-1 and the
    /// universe dropped. Two complexes with equal normalized keys are
    /// isomorphic via an order-preserving relabeling, so homology may be
    /// shared across them.
    std::string normalized_key() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex() = default;

    VertexSet universe_;
    std::vector<VertexSet> facets_;  // canonical antichain; empty <=> void
};

}  // namespace sphc

#endif
