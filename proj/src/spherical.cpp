#include "sphc/spherical.hpp"

#include <algorithm>

namespace sphc {

void SphericalAnalyzer::check_guard(const SimplicialComplex& delta, const char* what) const {
    if (delta.universe().size() > max_vertices_)
        throw GuardExceeded(std::string(what) + ": vertex count exceeds the configured guard");
}

DValue SphericalAnalyzer::d_of(const SimplicialComplex& realized) const {
    Classification cls = engine_->classify_complex(realized);
    switch (cls.tag) {
        case Classification::Tag::Void:
        case Classification::Tag::Trivial:
            return DValue::star_value();
        case Classification::Tag::Sphere:
            return DValue::of_dim(cls.sphere_dim);
        case Classification::Tag::Other:
            throw IntegrityError("d-value requested on a state with non-sphere homology");
    }
    throw IntegrityError("unreachable");
}

DValue SphericalAnalyzer::d_value(const SimplicialComplex& delta, VertexSet x,
                                  VertexSet y) const {
    return d_of(delta.sub_state(x, y));
}

bool SphericalAnalyzer::spherical_recursive(const SimplicialComplex& delta, VertexSet x,
                                            VertexSet y,
                                            std::optional<SphericalWitness>& witness) const {
    std::string key = delta.normalized_key();
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (known_spherical_.contains(key)) return true;
    }
    HomologyProfile profile = engine_->reduced_betti(delta);
    if (classify(profile).tag == Classification::Tag::Other) {
        witness = SphericalWitness{x, y, std::move(profile)};
        return false;
    }
    for (int v : delta.support()) {
        if (!spherical_recursive(delta.link(v), x.with(v), y, witness)) return false;
        if (!spherical_recursive(delta.deletion(v), x, y.with(v), witness)) return false;
    }
    std::lock_guard<std::mutex> lock(mu_);
    known_spherical_.insert(std::move(key));
    return true;
}

SphericalVerdict SphericalAnalyzer::is_spherical(const SimplicialComplex& delta) const {
    check_guard(delta, "is_spherical");
    std::optional<SphericalWitness> witness;
    bool ok = spherical_recursive(delta, {}, {}, witness);
    return {ok, std::move(witness)};
}

FiltrationRecord SphericalAnalyzer::build_maximal_filtration(
    const SimplicialComplex& delta) const {
    Classification cls = engine_->classify_complex(delta);
    if (cls.tag == Classification::Tag::Other)
        throw IntegrityError("build_maximal_filtration: input is not spherical");
    if (!cls.is_sphere())
        throw InvalidArgument("build_maximal_filtration: no filtration exists for an acyclic complex");

    FiltrationRecord rec;
    rec.base = delta;
    SimplicialComplex cur = delta;
    while (!cur.is_empty_face_complex()) {
        int v = cur.support().min();
        SimplicialComplex lk = cur.link(v);
        SimplicialComplex del = cur.deletion(v);
        Classification clk = engine_->classify_complex(lk);
        Classification cdel = engine_->classify_complex(del);
        if (clk.tag == Classification::Tag::Other || cdel.tag == Classification::Tag::Other)
            throw IntegrityError("build_maximal_filtration: non-spherical intermediate state");
        if (clk.is_sphere() == cdel.is_sphere())
            throw IntegrityError(
                "build_maximal_filtration: expected exactly one non-acyclic branch");
        if (clk.is_sphere()) {
            rec.steps.push_back({v, FiltrationStep::Move::Link});
            rec.link_set.insert(v);
            cur = std::move(lk);
        } else {
            rec.steps.push_back({v, FiltrationStep::Move::Delete});
            rec.delete_set.insert(v);
            cur = std::move(del);
        }
    }

    // N(F) is the set of universe vertices outside the star of the face
    // link_set: w survives every link step iff {w} together with the whole
    // link set is still a face. Ghost vertices always land here, which is
    // what makes the algebraic cross-equalities hold on complexes whose
    // universe exceeds their support.
    VertexSet star_support;
    for (int w : delta.support())
        if (delta.is_face(rec.link_set.with(w))) star_support.insert(w);
    rec.outside_stars = delta.universe() - star_support;
    rec.dep = rec.link_set.size();
    rec.pd = (rec.delete_set | rec.outside_stars).size();
    return rec;
}

namespace {

void sign_walk(const SphericalAnalyzer& analyzer, const SimplicialComplex& cur,
               const std::vector<int>& order, std::size_t t,
               std::vector<long long>& counts) {
    if (!analyzer.d_of(cur).star) counts[t]++;
    if (t == order.size()) return;
    if (cur.is_void()) return;  // every descendant of the void complex is void
    int v = order[t];
    sign_walk(analyzer, cur.link(v), order, t + 1, counts);
    sign_walk(analyzer, cur.deletion(v), order, t + 1, counts);
}

}  // namespace

SignPosetStats SphericalAnalyzer::sign_of(const SimplicialComplex& delta,
                                          std::optional<std::vector<int>> order) const {
    check_guard(delta, "sign_of");
    if (!is_spherical(delta).is_spherical)
        throw InvalidArgument("sign_of: input complex is not spherical");
    SignPosetStats stats;
    stats.order = order.value_or(delta.support().to_vector());
    stats.level_counts.assign(stats.order.size() + 1, 0);
    sign_walk(*this, delta, stats.order, 0, stats.level_counts);
    stats.sign = stats.level_counts.back() % 2 == 0 ? 1 : -1;
    return stats;
}

int SphericalAnalyzer::pd_non_acyclic(const SimplicialComplex& delta) const {
    return build_maximal_filtration(delta).pd;
}

int SphericalAnalyzer::projective_dimension(const SimplicialComplex& delta) const {
    check_guard(delta, "projective_dimension");
    if (!is_spherical(delta).is_spherical)
        throw InvalidArgument("projective_dimension: input complex is not spherical");
    Classification cls = engine_->classify_complex(delta);
    if (cls.is_sphere()) return pd_non_acyclic(delta);

    // Acyclic case: maximum over non-acyclic induced subcomplexes, swept
    // over universe subsets. The empty vertex set realizes the complex with
    // the empty face only, which is non-acyclic with pd 0, so the maximum is
    // over a nonempty family.
    std::vector<int> verts = delta.universe().to_vector();
    std::size_t n = verts.size();
    int best = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet s;
        for (std::size_t i = 0; i < n; ++i)
            if (bits >> i & 1u) s.insert(verts[i]);
        SimplicialComplex sigma = delta.induced(s);
        if (engine_->classify_complex(sigma).is_sphere())
            best = std::max(best, pd_non_acyclic(sigma));
    }
    return best;
}

int SphericalAnalyzer::depth(const SimplicialComplex& delta) const {
    check_guard(delta, "depth");
    if (!is_spherical(delta).is_spherical)
        throw InvalidArgument("depth: input complex is not spherical");
    Classification cls = engine_->classify_complex(delta);
    if (cls.is_sphere()) return build_maximal_filtration(delta).dep;
    return delta.universe().size() - projective_dimension(delta);
}

int SphericalAnalyzer::leray_number(const SimplicialComplex& delta) const {
    check_guard(delta, "leray_number");
    if (delta.is_void()) return 0;
    std::vector<int> verts = delta.support().to_vector();
    std::size_t n = verts.size();
    int max_degree = -1;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet s;
        for (std::size_t i = 0; i < n; ++i)
            if (bits >> i & 1u) s.insert(verts[i]);
        HomologyProfile profile = engine_->reduced_betti(delta.induced(s));
        for (auto& [d, v] : profile.dims)
            if (d >= 0 && v != 0) max_degree = std::max(max_degree, d);
    }
    return max_degree + 1;
}

TripleReport SphericalAnalyzer::verify_triple(const SimplicialComplex& delta, VertexSet x,
                                              VertexSet y, int v) const {
    if (x.intersects(y) || x.contains(v) || y.contains(v))
        throw InvalidArgument("verify_triple: X, Y and v must be pairwise disjoint");
    TripleReport rep;
    rep.d_base = d_value(delta, x, y);
    rep.d_link = d_value(delta, x.with(v), y);
    rep.d_del = d_value(delta, x, y.with(v));

    const DValue &a = rep.d_base, &b = rep.d_link, &c = rep.d_del;
    if (a.star && b.star && c.star)
        rep.pattern = "(*,*,*)";
    else if (!a.star && b.star && !c.star && a.dim == c.dim)
        rep.pattern = "(k,*,k)";
    else if (!a.star && !b.star && c.star && a.dim == b.dim + 1)
        rep.pattern = "(k+1,k,*)";
    else if (a.star && !b.star && !c.star && b.dim == c.dim)
        rep.pattern = "(*,k,k)";
    else
        throw IntegrityError("verify_triple: triple (" + a.to_string() + "," +
                             b.to_string() + "," + c.to_string() +
                             ") matches no admissible pattern");
    return rep;
}

namespace {

void bounds_dfs(const SphericalAnalyzer& analyzer, const SimplicialComplex& cur,
                const std::vector<int>& verts, std::size_t i, int used, int base_dim,
                long long& states) {
    if (i == verts.size()) {
        DValue d = analyzer.d_of(cur);
        if (!d.star) {
            ++states;
            if (d.dim > base_dim || d.dim < base_dim - used)
                throw IntegrityError("verify_dimension_bounds: state violates the sphere-dimension bounds");
        }
        return;
    }
    int v = verts[i];
    // States choosing an absent vertex are implied: linking it gives the void
    // complex (all-star subtree) and deleting it repeats this state with a
    // weaker lower bound.
    bounds_dfs(analyzer, cur, verts, i + 1, used, base_dim, states);
    if (cur.has_vertex(v)) {
        bounds_dfs(analyzer, cur.link(v), verts, i + 1, used + 1, base_dim, states);
        bounds_dfs(analyzer, cur.deletion(v), verts, i + 1, used + 1, base_dim, states);
    }
}

}  // namespace

BoundsReport SphericalAnalyzer::verify_dimension_bounds(const SimplicialComplex& delta) const {
    check_guard(delta, "verify_dimension_bounds");
    Classification cls = engine_->classify_complex(delta);
    if (!cls.is_sphere())
        throw InvalidArgument("verify_dimension_bounds: base complex must be non-acyclic spherical");
    BoundsReport rep;
    rep.base_dim = cls.sphere_dim;
    std::vector<int> verts = delta.support().to_vector();
    bounds_dfs(*this, delta, verts, 0, 0, rep.base_dim, rep.states);
    return rep;
}

TrichotomyReport SphericalAnalyzer::verify_link_del_trichotomy(const SimplicialComplex& delta,
                                                               int v) const {
    HomologyProfile p_delta = engine_->reduced_betti(delta);
    HomologyProfile p_link = engine_->reduced_betti(delta.link(v));
    HomologyProfile p_del = engine_->reduced_betti(delta.deletion(v));

    if (HomologyProfile::same_dims(p_delta, p_del) && p_link.all_zero()) return {1};
    if (HomologyProfile::same_dims(p_delta, p_link, 1) && p_del.all_zero()) return {2};
    if (HomologyProfile::same_dims(p_link, p_del) && p_delta.all_zero()) return {3};
    throw IntegrityError("verify_link_del_trichotomy: no case holds at vertex " +
                         std::to_string(v));
}

}  // namespace sphc
