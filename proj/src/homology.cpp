#include "sphc/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

namespace sphc {

using boost::multiprecision::cpp_int;

FieldSpec FieldSpec::prime_field(long long p) {
    if (p < 2 || p >= (1LL << 31)) throw InvalidArgument("prime field: p out of range");
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw InvalidArgument("prime field: p is not prime");
    FieldSpec f;
    f.tag = Tag::PrimeField;
    f.p = p;
    return f;
}

std::string FieldSpec::name() const {
    return is_rationals() ? "Q" : "F_" + std::to_string(p);
}

bool HomologyProfile::same_dims(const HomologyProfile& a, const HomologyProfile& b,
                                int shift_b) {
    int lo = 1, hi = -1;  // scan the union of supports
    for (auto& [d, v] : a.dims) {
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    for (auto& [d, v] : b.dims) {
        lo = std::min(lo, d + shift_b);
        hi = std::max(hi, d + shift_b);
    }
    for (int d = lo; d <= hi; ++d)
        if (a.at(d) != b.at(d - shift_b)) return false;
    return true;
}

std::string Classification::to_string() const {
    switch (tag) {
        case Tag::Void: return "void";
        case Tag::Trivial: return "trivial";
        case Tag::Sphere: return "sphere(" + std::to_string(sphere_dim) + ")";
        case Tag::Other: return "other";
    }
    return "?";
}

Classification classify(const HomologyProfile& profile) {
    if (profile.dims.empty()) return {Classification::Tag::Void};
    int nonzero_degree = 0;
    long long total = 0;
    for (auto& [d, v] : profile.dims) {
        if (v != 0) {
            total += v;
            nonzero_degree = d;
        }
    }
    if (total == 0) return {Classification::Tag::Trivial};
    if (total == 1) return {Classification::Tag::Sphere, nonzero_degree};
    return {Classification::Tag::Other};
}

IntMatrix boundary_matrix(const SimplicialComplex& delta, int degree) {
    if (delta.is_void())
        throw InvalidArgument("boundary_matrix of the void complex is undefined");
    int top = delta.dim();
    std::vector<std::vector<VertexSet>> by_dim(static_cast<std::size_t>(top) + 2);
    for (const VertexSet& f : delta.faces())
        by_dim[static_cast<std::size_t>(f.size())].push_back(f);
    // faces() is already canonically sorted, and the per-dimension buckets
    // inherit that order.

    auto faces_of = [&](int d) -> const std::vector<VertexSet>& {
        static const std::vector<VertexSet> none;
        if (d < -1 || d > top) return none;
        return by_dim[static_cast<std::size_t>(d) + 1];
    };

    const auto& rows_faces = faces_of(degree - 1);
    const auto& cols_faces = faces_of(degree);
    IntMatrix m;
    m.rows = static_cast<int>(rows_faces.size());
    m.cols = static_cast<int>(cols_faces.size());
    m.a.assign(static_cast<std::size_t>(m.rows) * m.cols, 0);

    std::unordered_map<std::uint64_t, int> row_index;
    for (int r = 0; r < m.rows; ++r) row_index[rows_faces[r].bits()] = r;

    for (int c = 0; c < m.cols; ++c) {
        int sign = 1;
        for (int v : cols_faces[static_cast<std::size_t>(c)]) {
            VertexSet sub = cols_faces[static_cast<std::size_t>(c)].without(v);
            m.at(row_index.at(sub.bits()), c) = sign;
            sign = -sign;
        }
        if (degree == 0) m.at(0, c) = 1;  // single (-1)-face, coefficient +1
    }
    return m;
}

namespace {

// Fraction-free Bareiss elimination, templated over the entry type. The
// int64 instantiation reports overflow through `ok` and the caller retries
// with cpp_int.
template <typename T>
int bareiss_rank(const IntMatrix& in, bool* ok) {
    int rows = in.rows, cols = in.cols;
    std::vector<T> a(in.a.begin(), in.a.end());
    auto at = [&](int r, int c) -> T& { return a[static_cast<std::size_t>(r) * cols + c]; };

    if (ok) *ok = true;
    T prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
        T piv = at(rank, col);
        for (int r = rank + 1; r < rows; ++r) {
            T head = at(r, col);
            for (int c = col; c < cols; ++c) {
                if constexpr (std::is_same_v<T, long long>) {
                    __int128 num = static_cast<__int128>(piv) * at(r, c) -
                                   static_cast<__int128>(head) * at(rank, c);
                    __int128 q = num / prev;
                    if (q > INT64_MAX || q < INT64_MIN) {
                        *ok = false;
                        return 0;
                    }
                    at(r, c) = static_cast<long long>(q);
                } else {
                    at(r, c) = (piv * at(r, c) - head * at(rank, c)) / prev;
                }
            }
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

long long mod_pow(long long b, long long e, long long p) {
    long long r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = static_cast<long long>(static_cast<__int128>(r) * b % p);
        b = static_cast<long long>(static_cast<__int128>(b) * b % p);
        e >>= 1;
    }
    return r;
}

}  // namespace

int rank_over_rationals(const IntMatrix& m) {
    bool ok = false;
    int r = bareiss_rank<long long>(m, &ok);
    if (ok) return r;
    return bareiss_rank<cpp_int>(m, nullptr);
}

int rank_over_prime_field(const IntMatrix& in, long long p) {
    int rows = in.rows, cols = in.cols;
    std::vector<long long> a(in.a.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = ((in.a[i] % p) + p) % p;
    auto at = [&](int r, int c) -> long long& {
        return a[static_cast<std::size_t>(r) * cols + c];
    };

    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
        long long inv = mod_pow(at(rank, col), p - 2, p);
        for (int r = rank + 1; r < rows; ++r) {
            if (at(r, col) == 0) continue;
            long long factor =
                static_cast<long long>(static_cast<__int128>(at(r, col)) * inv % p);
            for (int c = col; c < cols; ++c) {
                long long sub =
                    static_cast<long long>(static_cast<__int128>(factor) * at(rank, c) % p);
                at(r, c) = (at(r, c) - sub + p) % p;
            }
        }
        ++rank;
    }
    return rank;
}

HomologyProfile HomologyEngine::reduced_betti(const SimplicialComplex& delta) const {
    if (delta.is_void()) return HomologyProfile{{}, field_};
    std::string key = delta.normalized_key();
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    HomologyProfile profile = compute(delta);
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(std::move(key), profile);
    return profile;
}

HomologyProfile HomologyEngine::compute(const SimplicialComplex& delta) const {
    int top = delta.dim();
    std::vector<long long> face_count(static_cast<std::size_t>(top) + 2, 0);
    for (const VertexSet& f : delta.faces()) face_count[static_cast<std::size_t>(f.size())]++;

    auto rank_of = [&](int degree) -> int {
        IntMatrix m = boundary_matrix(delta, degree);
        if (m.rows == 0 || m.cols == 0) return 0;
        return field_.is_rationals() ? rank_over_rationals(m)
                                     : rank_over_prime_field(m, field_.p);
    };

    HomologyProfile profile;
    profile.field = field_;
    int rank_next = 0;  // rank of d_{-1}, the zero map
    for (int i = -1; i <= top; ++i) {
        int rank_cur = rank_next;  // rank of d_i
        rank_next = i < top ? rank_of(i + 1) : 0;
        // dims[i] = nullity(d_i) - rank(d_{i+1}); d_{-1} is the zero map.
        long long faces_i = face_count[static_cast<std::size_t>(i) + 1];
        long long nullity = i == -1 ? faces_i : faces_i - rank_cur;
        profile.dims[i] = nullity - rank_next;
    }
    return profile;
}

long long reduced_euler(const SimplicialComplex& delta) {
    std::vector<long long> f = delta.f_vector();
    long long chi = 0;
    int sign = -1;  // degree -1 term
    for (long long count : f) {
        chi += sign * count;
        sign = -sign;
    }
    return chi;
}

}  // namespace sphc
