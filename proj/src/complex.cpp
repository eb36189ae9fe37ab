#include "sphc/complex.hpp"

#include <algorithm>
#include <unordered_set>

namespace sphc {

SimplicialComplex SimplicialComplex::from_facets(std::vector<VertexSet> raw,
                                                 std::optional<VertexSet> universe) {
    VertexSet supp;
    for (const VertexSet& f : raw) supp = supp | f;
    VertexSet uni = universe.value_or(supp);
    if (!supp.subset_of(uni))
        throw InvalidArgument("facet vertex outside the explicit universe");

    // Antichain: keep only facets not contained in another.
    std::vector<VertexSet> keep;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        bool contained = false;
        for (std::size_t j = 0; j < raw.size() && !contained; ++j) {
            if (i == j) continue;
            if (raw[i].subset_of(raw[j]) && !(raw[j].subset_of(raw[i]) && j > i))
                contained = true;
        }
        if (!contained) keep.push_back(raw[i]);
    }
    std::sort(keep.begin(), keep.end(),
              [](VertexSet a, VertexSet b) { return canonical_less(a, b); });
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

    if (keep.empty() && !uni.empty())
        throw InvalidArgument("a non-void complex needs at least the empty facet");
    SimplicialComplex c;
    c.universe_ = uni;
    c.facets_ = std::move(keep);
    return c;
}

VertexSet SimplicialComplex::support() const {
    VertexSet s;
    for (const VertexSet& f : facets_) s = s | f;
    return s;
}

int SimplicialComplex::dim() const {
    if (is_void()) throw InvalidArgument("dim of the void complex is undefined");
    return facets_.back().size() - 1;
}

bool SimplicialComplex::is_face(VertexSet sigma) const {
    for (const VertexSet& f : facets_)
        if (sigma.subset_of(f)) return true;
    return false;
}

bool SimplicialComplex::is_cone() const {
    if (is_void() || is_empty_face_complex()) return false;
    VertexSet common = facets_[0];
    for (const VertexSet& f : facets_) common = common & f;
    return !common.empty();
}

SimplicialComplex SimplicialComplex::link(int v) const {
    if (!has_vertex(v)) return void_complex();
    std::vector<VertexSet> out;
    for (const VertexSet& f : facets_)
        if (f.contains(v)) out.push_back(f.without(v));
    return from_facets(std::move(out), universe_.without(v));
}

SimplicialComplex SimplicialComplex::deletion(int v) const {
    if (!universe_.contains(v)) return *this;
    std::vector<VertexSet> out;
    for (const VertexSet& f : facets_) out.push_back(f.without(v));
    return from_facets(std::move(out), universe_.without(v));
}

SimplicialComplex SimplicialComplex::star(int v) const {
    if (!has_vertex(v)) return void_complex();
    std::vector<VertexSet> out;
    for (const VertexSet& f : facets_)
        if (f.contains(v)) out.push_back(f);
    return from_facets(std::move(out), universe_);
}

SimplicialComplex SimplicialComplex::induced(VertexSet a) const {
    if (!a.subset_of(universe_))
        throw InvalidArgument("induced: vertex set not contained in the universe");
    if (is_void()) return void_complex();
    std::vector<VertexSet> out;
    for (const VertexSet& f : facets_) out.push_back(f & a);
    return from_facets(std::move(out), a);
}

SimplicialComplex SimplicialComplex::sub_state(VertexSet x, VertexSet y,
                                               std::span<const int> order) const {
    if (x.intersects(y)) throw InvalidArgument("sub_state: X and Y must be disjoint");
    std::vector<int> default_order;
    if (order.empty()) {
        default_order = (x | y).to_vector();
        order = default_order;
    }
    VertexSet seen;
    SimplicialComplex cur = *this;
    for (int v : order) {
        if (!(x | y).contains(v) || seen.contains(v))
            throw InvalidArgument("sub_state: order must be a permutation of X union Y");
        seen.insert(v);
        cur = x.contains(v) ? cur.link(v) : cur.deletion(v);
    }
    if (seen != (x | y))
        throw InvalidArgument("sub_state: order must be a permutation of X union Y");
    return cur;
}

SimplicialComplex SimplicialComplex::alexander_dual(std::optional<VertexSet> ambient) const {
    VertexSet v = ambient.value_or(universe_);
    if (!support().subset_of(v))
        throw InvalidArgument("alexander_dual: support not contained in the ambient set");
    // Facets of the dual are complements of minimal non-faces.
    std::vector<VertexSet> out;
    for (VertexSet m : minimal_nonfaces(v)) out.push_back(v - m);
    if (out.empty()) return void_complex();
    return from_facets(std::move(out), v);
}

SimplicialComplex SimplicialComplex::join(const SimplicialComplex& a,
                                          const SimplicialComplex& b) {
    if (a.universe_.intersects(b.universe_))
        throw InvalidArgument("join: vertex universes must be disjoint");
    if (a.is_void() || b.is_void()) return void_complex();
    std::vector<VertexSet> out;
    for (const VertexSet& f : a.facets_)
        for (const VertexSet& g : b.facets_) out.push_back(f | g);
    return from_facets(std::move(out), a.universe_ | b.universe_);
}

std::vector<VertexSet> SimplicialComplex::faces() const {
    std::unordered_set<std::uint64_t> seen;
    for (const VertexSet& f : facets_) {
        std::uint64_t m = f.bits();
        std::uint64_t sub = m;
        while (true) {
            seen.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & m;
        }
    }
    std::vector<VertexSet> out;
    out.reserve(seen.size());
    for (std::uint64_t s : seen) out.push_back(VertexSet::from_bits(s));
    std::sort(out.begin(), out.end(),
              [](VertexSet x, VertexSet y) { return canonical_less(x, y); });
    return out;
}

std::vector<long long> SimplicialComplex::f_vector() const {
    if (is_void()) throw InvalidArgument("f_vector of the void complex is undefined");
    std::vector<long long> f(static_cast<std::size_t>(dim()) + 2, 0);
    for (const VertexSet& face : faces()) f[static_cast<std::size_t>(face.size())]++;
    return f;
}

std::vector<VertexSet> SimplicialComplex::minimal_nonfaces(
    std::optional<VertexSet> ambient) const {
    VertexSet v = ambient.value_or(universe_);
    if (!support().subset_of(v))
        throw InvalidArgument("minimal_nonfaces: support not contained in the ambient set");
    if (v.size() > 24) throw GuardExceeded("minimal_nonfaces: ambient set too large");

    std::vector<int> verts = v.to_vector();
    std::size_t n = verts.size();
    std::vector<VertexSet> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        VertexSet cand;
        for (std::size_t i = 0; i < n; ++i)
            if (s >> i & 1u) cand.insert(verts[i]);
        if (is_face(cand)) continue;
        bool minimal = true;
        for (int u : cand)
            if (!is_face(cand.without(u))) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(cand);
    }
    std::sort(out.begin(), out.end(),
              [](VertexSet a, VertexSet b) { return canonical_less(a, b); });
    return out;
}

std::string SimplicialComplex::canonical_key() const {
    std::string k = "U" + universe_.to_string();
    for (const VertexSet& f : facets_) k += f.to_string();
    return k;
}

std::string SimplicialComplex::normalized_key() const {
    // Compress support labels to 0..k-1 (order preserving).
    int relabel[VertexSet::kMaxVertex + 1];
    int next = 0;
    for (int v : support()) relabel[v] = next++;
    std::vector<VertexSet> mapped;
    mapped.reserve(facets_.size());
    for (const VertexSet& f : facets_) {
        VertexSet g;
        for (int v : f) g.insert(relabel[v]);
        mapped.push_back(g);
    }
    std::sort(mapped.begin(), mapped.end(),
              [](VertexSet a, VertexSet b) { return canonical_less(a, b); });
    std::string k;
    for (const VertexSet& f : mapped) k += f.to_string();
    return k;
}

}  // namespace sphc
