#ifndef SPHC_SPHERICAL_HPP
#define SPHC_SPHERICAL_HPP

#include <optional>
#include <unordered_set>
#include <vector>

#include "sphc/homology.hpp"

namespace sphc {

/// Sphere dimension of a realized sub-state, or the star symbol for states
/// with trivial (or void) homology.
struct DValue {
    bool star = true;
    int dim = 0;  // valid when !star

    static DValue star_value() { return {}; }
    static DValue of_dim(int d) { return {false, d}; }
    friend bool operator==(const DValue&, const DValue&) = default;
    std::string to_string() const { return star ? "*" : std::to_string(dim); }
};

struct SphericalWitness {
    VertexSet x;
    VertexSet y;
    HomologyProfile profile;  // classification Other
};

struct SphericalVerdict {
    bool is_spherical;
    std::optional<SphericalWitness> witness;
};

struct FiltrationStep {
    enum class Move { Link, Delete };
    int vertex;
    Move move;
};

/// A maximal filtration together with its derived invariants.
struct FiltrationRecord {
    SimplicialComplex base = SimplicialComplex::void_complex();
    std::vector<FiltrationStep> steps;
    VertexSet link_set;    // lk(F)
    VertexSet delete_set;  // del(F)
    VertexSet outside_stars;  // N(F): vertices outside every star of a link vertex
    int dep = 0;
    int pd = 0;
};

/// Level profile of the split poset over an ordered vertex set B: f(t) counts
/// the non-star full splits of the first t vertices. All f(t) share parity;
/// sign = (-1)^{f(|B|)}.
struct SignPosetStats {
    std::vector<int> order;
    std::vector<long long> level_counts;
    int sign = 1;
};

struct TripleReport {
    DValue d_base, d_link, d_del;
    // Which pattern of {(*,*,*), (k,*,k), (k+1,k,*), (*,k,k)} matched.
    std::string pattern;
};

struct BoundsReport {
    int base_dim = 0;        // sphere dimension of the base complex
    long long states = 0;    // non-star states checked against the bounds
};

struct TrichotomyReport {
    int case_tag;  // 1, 2 or 3
};

/// The filtration/sign/depth machinery for spherical complexes. Pure given
/// the shared homology engine; results are memoized on normalized complex
/// keys.
class SphericalAnalyzer {
public:
    explicit SphericalAnalyzer(const HomologyEngine& engine, int max_vertices = 16)
        : engine_(&engine), max_vertices_(max_vertices) {}

    const HomologyEngine& engine() const { return *engine_; }
    int max_vertices() const { return max_vertices_; }

    /// Recursive check of the defining property on every link/deletion
    /// descendant, smallest-vertex-first with link before delete, so the
    /// returned witness is deterministic.
    SphericalVerdict is_spherical(const SimplicialComplex& delta) const;

    /// d<X|Y> of a spherical complex. Throws IntegrityError if the realized
    /// state has classification Other.
    DValue d_value(const SimplicialComplex& delta, VertexSet x, VertexSet y) const;
    DValue d_of(const SimplicialComplex& realized) const;

    /// Greedy maximal filtration (smallest vertex, forced branch). Requires a
    /// non-acyclic spherical complex; {} with the empty face only yields the
    /// empty filtration.
    FiltrationRecord build_maximal_filtration(const SimplicialComplex& delta) const;

    SignPosetStats sign_of(const SimplicialComplex& delta,
                           std::optional<std::vector<int>> order = std::nullopt) const;

    int depth(const SimplicialComplex& delta) const;
    int projective_dimension(const SimplicialComplex& delta) const;

    /// Brute-force minimum d such that every induced subcomplex has zero
    /// reduced homology in all degrees >= d (degree -1 excluded: the empty
    /// induced subcomplex always carries it).
    int leray_number(const SimplicialComplex& delta) const;

    TripleReport verify_triple(const SimplicialComplex& delta, VertexSet x, VertexSet y,
                               int v) const;
    BoundsReport verify_dimension_bounds(const SimplicialComplex& delta) const;
    TrichotomyReport verify_link_del_trichotomy(const SimplicialComplex& delta, int v) const;

private:
    void check_guard(const SimplicialComplex& delta, const char* what) const;
    bool spherical_recursive(const SimplicialComplex& delta, VertexSet x, VertexSet y,
                             std::optional<SphericalWitness>& witness) const;
    int pd_non_acyclic(const SimplicialComplex& delta) const;

    const HomologyEngine* engine_;
    int max_vertices_;
    mutable std::mutex mu_;
    mutable std::unordered_set<std::string> known_spherical_;
};

}  // namespace sphc

#endif
