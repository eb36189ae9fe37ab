#ifndef SPHC_HOMOLOGY_HPP
#define SPHC_HOMOLOGY_HPP

#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "sphc/complex.hpp"

namespace sphc {

/// Coefficient field: the rationals or a prime field GF(p).
struct FieldSpec {
    enum class Tag { Rationals, PrimeField };
    Tag tag = Tag::Rationals;
    long long p = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime_field(long long p);

    bool is_rationals() const { return tag == Tag::Rationals; }
    std::string name() const;
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Reduced Betti dimensions by degree, starting at -1. The void complex has
/// an empty map; every non-void complex has entries for -1..dim (zeros kept).
struct HomologyProfile {
    std::map<int, long long> dims;
    FieldSpec field;

    long long at(int degree) const {
        auto it = dims.find(degree);
        return it == dims.end() ? 0 : it->second;
    }
    bool all_zero() const {
        for (auto& [d, v] : dims)
            if (v != 0) return false;
        return true;
    }
    /// Degrees agree entry-by-entry (missing entries count as zero).
    static bool same_dims(const HomologyProfile& a, const HomologyProfile& b,
                          int shift_b = 0);
};

struct Classification {
    enum class Tag { Void, Trivial, Sphere, Other };
    Tag tag;
    int sphere_dim = 0;  // valid when tag == Sphere

    bool is_sphere() const { return tag == Tag::Sphere; }
    /// Trivial or void homology.
    bool is_acyclic() const { return tag == Tag::Trivial || tag == Tag::Void; }
    std::string to_string() const;
};

Classification classify(const HomologyProfile& profile);

/// Integer matrix in row-major order; entries of boundary matrices are 0, +1, -1.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> a;

    int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    int at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

/// Boundary operator from i-chains to (i-1)-chains with the alternating-sign
/// rule on sorted vertex order; faces indexed in canonical order so the
/// matrix is reproducible bit-for-bit. Degree 0 maps vertices to the single
/// (-1)-face with coefficient +1. Out-of-range degrees give empty matrices.
IntMatrix boundary_matrix(const SimplicialComplex& delta, int degree);

/// Exact rank over Q (fraction-free Bareiss elimination; int64 fast path with
/// overflow detection, arbitrary-precision fallback).
int rank_over_rationals(const IntMatrix& m);

/// Exact rank over GF(p) by modular elimination.
int rank_over_prime_field(const IntMatrix& m, long long p);

/// Homology engine with a profile cache keyed on the label-normalized
/// canonical form, shared safely across threads.
class HomologyEngine {
public:
    explicit HomologyEngine(FieldSpec field = FieldSpec::rationals()) : field_(field) {}

    FieldSpec field() const { return field_; }

    HomologyProfile reduced_betti(const SimplicialComplex& delta) const;
    Classification classify_complex(const SimplicialComplex& delta) const {
        return classify(reduced_betti(delta));
    }

private:
    HomologyProfile compute(const SimplicialComplex& delta) const;

    FieldSpec field_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::string, HomologyProfile> cache_;
};

/// Alternating sum of face counts; equals the alternating sum of reduced
/// Betti numbers over any field. Throws on the void complex.
long long reduced_euler(const SimplicialComplex& delta);

}  // namespace sphc

#endif
