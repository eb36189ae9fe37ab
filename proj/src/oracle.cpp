#include "sphc/oracle.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

namespace sphc {
namespace oracle {

using boost::multiprecision::cpp_int;

namespace {

struct BigMatrix {
    int rows = 0, cols = 0;
    std::vector<cpp_int> a;

    cpp_int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
};

BigMatrix to_big(const IntMatrix& m) {
    BigMatrix b;
    b.rows = m.rows;
    b.cols = m.cols;
    b.a.assign(m.a.begin(), m.a.end());
    return b;
}

// Diagonalize by elementary integer row/column operations, always pivoting
// on the smallest nonzero magnitude to control entry growth. The diagonal
// entries present the cokernel; no divisibility chain is needed to read off
// rank and torsion primes.
std::vector<cpp_int> smith_diagonal(BigMatrix m) {
    std::vector<cpp_int> diag;
    int t = 0;
    while (t < m.rows && t < m.cols) {
        // Smallest nonzero pivot in the trailing block.
        int pr = -1, pc = -1;
        cpp_int best = 0;
        for (int r = t; r < m.rows; ++r)
            for (int c = t; c < m.cols; ++c) {
                cpp_int v = abs(m.at(r, c));
                if (v != 0 && (pr < 0 || v < best)) {
                    best = v;
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(t, c));
        for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, pc), m.at(r, t));

        bool reduced = false;
        while (!reduced) {
            reduced = true;
            for (int r = t + 1; r < m.rows; ++r) {
                if (m.at(r, t) == 0) continue;
                cpp_int q = m.at(r, t) / m.at(t, t);
                for (int c = t; c < m.cols; ++c) m.at(r, c) -= q * m.at(t, c);
                if (m.at(r, t) != 0) {
                    // Remainder became the smaller pivot; swap it up.
                    for (int c = 0; c < m.cols; ++c) std::swap(m.at(r, c), m.at(t, c));
                    reduced = false;
                }
            }
            for (int c = t + 1; c < m.cols; ++c) {
                if (m.at(t, c) == 0) continue;
                cpp_int q = m.at(t, c) / m.at(t, t);
                for (int r = t; r < m.rows; ++r) m.at(r, c) -= q * m.at(r, t);
                if (m.at(t, c) != 0) {
                    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, c), m.at(r, t));
                    reduced = false;
                }
            }
        }
        diag.push_back(abs(m.at(t, t)));
        ++t;
    }
    return diag;
}

std::vector<long long> prime_factors(cpp_int v) {
    std::vector<long long> out;
    for (cpp_int d = 2; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(static_cast<long long>(d));
            while (v % d == 0) v /= d;
        }
    if (v > 1) out.push_back(static_cast<long long>(v));
    return out;
}

}  // namespace

IntegralHomology homology_oracle(const SimplicialComplex& delta, long long max_faces) {
    IntegralHomology result;
    result.rational.field = FieldSpec::rationals();
    if (delta.is_void()) return result;
    if (static_cast<long long>(delta.faces().size()) > max_faces)
        throw GuardExceeded("homology_oracle: face count exceeds guard");

    int top = delta.dim();
    std::vector<long long> face_count(static_cast<std::size_t>(top) + 2, 0);
    for (const VertexSet& f : delta.faces()) face_count[static_cast<std::size_t>(f.size())]++;

    std::vector<std::vector<cpp_int>> diag(static_cast<std::size_t>(top) + 1);
    for (int i = 0; i <= top; ++i)
        diag[static_cast<std::size_t>(i)] = smith_diagonal(to_big(boundary_matrix(delta, i)));

    std::vector<long long> torsion;
    for (int i = -1; i <= top; ++i) {
        long long rank_i =
            i == -1 ? 0 : static_cast<long long>(diag[static_cast<std::size_t>(i)].size());
        long long rank_next = 0;
        if (i < top) {
            const auto& d = diag[static_cast<std::size_t>(i) + 1];
            rank_next = static_cast<long long>(d.size());
            for (const cpp_int& e : d)
                if (e > 1)
                    for (long long p : prime_factors(e)) torsion.push_back(p);
        }
        long long faces_i = face_count[static_cast<std::size_t>(i) + 1];
        result.rational.dims[i] = faces_i - rank_i - rank_next;
    }
    std::sort(torsion.begin(), torsion.end());
    torsion.erase(std::unique(torsion.begin(), torsion.end()), torsion.end());
    result.torsion_primes = std::move(torsion);
    return result;
}

OracleReport mv_identity_check(const SimplicialComplex& delta, int v) {
    OracleReport rep;
    rep.subject = delta.canonical_key();
    if (!delta.has_vertex(v))
        throw InvalidArgument("mv_identity_check: v is not a vertex of the complex");

    SimplicialComplex lk = delta.link(v);
    SimplicialComplex del = delta.deletion(v);

    auto f_at = [](const SimplicialComplex& c, int i) -> long long {
        if (c.is_void()) return 0;
        std::vector<long long> f = c.f_vector();
        std::size_t idx = static_cast<std::size_t>(i + 1);
        return idx < f.size() ? f[idx] : 0;
    };

    for (int i = -1; i <= delta.dim(); ++i) {
        ++rep.checks_run;
        long long lhs = f_at(delta, i);
        long long rhs = f_at(del, i) + f_at(lk, i - 1);
        if (lhs != rhs)
            rep.discrepancies.push_back({"f_vector_split", "i=" + std::to_string(i),
                                         std::to_string(lhs), std::to_string(rhs)});
    }

    ++rep.checks_run;
    long long chi = reduced_euler(delta);
    long long chi_split = reduced_euler(del) - (lk.is_void() ? 0 : reduced_euler(lk));
    if (chi != chi_split)
        rep.discrepancies.push_back({"euler_split", "chi", std::to_string(chi),
                                     std::to_string(chi_split)});

    IntegralHomology h = homology_oracle(delta);
    IntegralHomology h_del = homology_oracle(del);
    IntegralHomology h_lk = homology_oracle(lk);
    for (auto& [i, dim] : h.rational.dims) {
        ++rep.checks_run;
        long long bound = h_del.rational.at(i) + h_lk.rational.at(i - 1);
        if (dim > bound)
            rep.discrepancies.push_back({"mv_rank_bound", "i=" + std::to_string(i),
                                         "<= " + std::to_string(bound),
                                         std::to_string(dim)});
    }
    return rep;
}

int exhaustive_leray(const SimplicialComplex& delta, int max_vertices) {
    if (delta.is_void()) return 0;
    std::vector<int> verts = delta.support().to_vector();
    std::size_t n = verts.size();
    if (static_cast<int>(n) > max_vertices)
        throw GuardExceeded("exhaustive_leray: vertex count exceeds guard");
    int max_degree = -1;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet s;
        for (std::size_t i = 0; i < n; ++i)
            if (bits >> i & 1u) s.insert(verts[i]);
        IntegralHomology h = homology_oracle(delta.induced(s));
        for (auto& [d, v] : h.rational.dims)
            if (d >= 0 && v != 0) max_degree = std::max(max_degree, d);
    }
    return max_degree + 1;
}

BettiTable exhaustive_betti(const SimplicialComplex& delta, int max_vertices) {
    if (delta.is_void())
        throw InvalidArgument("exhaustive_betti of the void complex is undefined");
    std::vector<int> verts = delta.universe().to_vector();
    std::size_t n = verts.size();
    if (static_cast<int>(n) > max_vertices)
        throw GuardExceeded("exhaustive_betti: vertex count exceeds guard");

    BettiTable table;
    table.n = static_cast<int>(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet s;
        for (std::size_t i = 0; i < n; ++i)
            if (bits >> i & 1u) s.insert(verts[i]);
        IntegralHomology h = homology_oracle(delta.induced(s));
        for (auto& [j, dim] : h.rational.dims)
            if (dim != 0) table.add(s.size() - j - 1, s, dim);
    }
    return table;
}

}  // namespace oracle
}  // namespace sphc
