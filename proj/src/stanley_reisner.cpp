#include "sphc/stanley_reisner.hpp"

#include <algorithm>
#include <thread>

namespace sphc {

int BettiTable::pd() const {
    int best = 0;
    for (auto& [key, value] : entries) best = std::max(best, key.first);
    return best;
}

int BettiTable::reg() const {
    int best = 0;
    for (auto& [key, value] : entries) {
        int deg = VertexSet::from_bits(key.second).size();
        best = std::max(best, deg - key.first);
    }
    return best;
}

long long BettiTable::total(int i) const {
    long long sum = 0;
    for (auto& [key, value] : entries)
        if (key.first == i) sum += value;
    return sum;
}

namespace {

VertexSet subset_by_bits(const std::vector<int>& verts, std::uint64_t bits) {
    VertexSet s;
    for (std::size_t i = 0; i < verts.size(); ++i)
        if (bits >> i & 1u) s.insert(verts[i]);
    return s;
}

}  // namespace

BettiTable multigraded_betti(const SimplicialComplex& delta, const HomologyEngine& engine,
                             int max_vertices, int jobs) {
    if (delta.is_void())
        throw InvalidArgument("multigraded_betti of the void complex is undefined");
    std::vector<int> verts = delta.universe().to_vector();
    std::size_t n = verts.size();
    if (static_cast<int>(n) > max_vertices)
        throw GuardExceeded("multigraded_betti: vertex count exceeds the configured guard");

    auto sweep = [&](std::uint64_t lo, std::uint64_t hi, BettiTable& out) {
        for (std::uint64_t bits = lo; bits < hi; ++bits) {
            VertexSet s = subset_by_bits(verts, bits);
            HomologyProfile profile = engine.reduced_betti(delta.induced(s));
            for (auto& [j, dim] : profile.dims)
                if (dim != 0) out.add(s.size() - j - 1, s, dim);
        }
    };

    std::uint64_t total = std::uint64_t{1} << n;
    BettiTable table;
    table.n = static_cast<int>(n);
    if (jobs <= 1) {
        sweep(0, total, table);
        return table;
    }

    // Workers own disjoint subset ranges; merging partial tables is an
    // associative, commutative sum.
    std::vector<BettiTable> partial(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
        std::uint64_t lo = std::min<std::uint64_t>(total, chunk * static_cast<std::uint64_t>(w));
        std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
        workers.emplace_back(sweep, lo, hi, std::ref(partial[static_cast<std::size_t>(w)]));
    }
    for (auto& t : workers) t.join();
    for (const BettiTable& part : partial)
        for (auto& [key, value] : part.entries)
            table.add(key.first, VertexSet::from_bits(key.second), value);
    return table;
}

BettiTable betti_via_spherical(const SimplicialComplex& delta,
                               const SphericalAnalyzer& analyzer) {
    if (!analyzer.is_spherical(delta).is_spherical)
        throw InvalidArgument("betti_via_spherical: input complex is not spherical");
    std::vector<int> verts = delta.universe().to_vector();
    std::size_t n = verts.size();

    BettiTable table;
    table.n = static_cast<int>(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet s = subset_by_bits(verts, bits);
        SimplicialComplex sigma = delta.induced(s);
        if (analyzer.engine().classify_complex(sigma).is_sphere())
            table.add(analyzer.projective_dimension(sigma), s, 1);
    }
    return table;
}

int pd_alg(const BettiTable& table) { return table.pd(); }

int depth_alg(const BettiTable& table, int n) { return n - table.pd(); }

int regularity(const BettiTable& table) { return table.reg(); }

AlgCombReport verify_alg_comb_equalities(const SimplicialComplex& delta,
                                         const SphericalAnalyzer& analyzer) {
    if (!analyzer.is_spherical(delta).is_spherical)
        throw InvalidArgument("verify_alg_comb_equalities: input complex is not spherical");

    BettiTable table = multigraded_betti(delta, analyzer.engine(), analyzer.max_vertices());
    AlgCombReport rep;
    rep.pd_combinatorial = analyzer.projective_dimension(delta);
    rep.pd_algebraic = pd_alg(table);
    rep.depth_combinatorial = analyzer.depth(delta);
    rep.depth_algebraic = depth_alg(table, table.n);
    rep.reg = regularity(table);
    rep.leray = analyzer.leray_number(delta);
    rep.non_acyclic = analyzer.engine().classify_complex(delta).is_sphere();

    if (rep.pd_combinatorial != rep.pd_algebraic)
        throw IntegrityError("pd(Delta) != pd(R/I)");
    if (rep.depth_combinatorial != rep.depth_algebraic)
        throw IntegrityError("dep(Delta) != depth(R/I)");
    if (rep.non_acyclic && rep.reg != rep.depth_algebraic)
        throw IntegrityError("reg(R/I) != depth(R/I) on a non-acyclic spherical complex");
    if (rep.leray != rep.reg) throw IntegrityError("Leray number != regularity");
    return rep;
}

}  // namespace sphc
