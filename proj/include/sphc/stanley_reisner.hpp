#ifndef SPHC_STANLEY_REISNER_HPP
#define SPHC_STANLEY_REISNER_HPP

#include <map>
#include <utility>

#include "sphc/spherical.hpp"

namespace sphc {

/// Multigraded Betti numbers of R/I_delta indexed by (homological index,
/// squarefree support). Non-squarefree multidegrees vanish and are never
/// represented.
struct BettiTable {
    int n = 0;  // ambient variable count
    std::map<std::pair<int, std::uint64_t>, long long> entries;

    long long at(int i, VertexSet support) const {
        auto it = entries.find({i, support.bits()});
        return it == entries.end() ? 0 : it->second;
    }
    void add(int i, VertexSet support, long long value) {
        if (value != 0) entries[{i, support.bits()}] += value;
    }

    /// pd = max homological index present; reg = max(|support| - i).
    int pd() const;
    int reg() const;
    long long total(int i) const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Hochster's formula: beta_{i,S} = dim H~_{|S|-i-1}(Delta_S) swept over all
/// vertex subsets of the universe. `jobs` shards the sweep.
BettiTable multigraded_betti(const SimplicialComplex& delta, const HomologyEngine& engine,
                             int max_vertices = 16, int jobs = 1);

/// Fast route for spherical complexes: an entry is present iff the induced
/// subcomplex is non-acyclic, in which case it is exactly 1 at i = pd of the
/// subcomplex.
BettiTable betti_via_spherical(const SimplicialComplex& delta,
                               const SphericalAnalyzer& analyzer);

int pd_alg(const BettiTable& table);
int depth_alg(const BettiTable& table, int n);
int regularity(const BettiTable& table);

struct AlgCombReport {
    int pd_combinatorial, pd_algebraic;
    int depth_combinatorial, depth_algebraic;
    int reg;
    int leray;
    bool non_acyclic;
};

/// Cross-checks pd/depth equalities, reg = depth on non-acyclic input, and
/// Leray = regularity. Throws IntegrityError on any violated equality.
AlgCombReport verify_alg_comb_equalities(const SimplicialComplex& delta,
                                         const SphericalAnalyzer& analyzer);

}  // namespace sphc

#endif
