#ifndef SPHC_VERTEX_SET_HPP
#define SPHC_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace sphc {

/// Error types shared across the library.
struct InvalidArgument : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A set of vertex ids in [0, 63], stored as a bitmask. Value type; all
/// operations are O(1) word operations.
class VertexSet {
public:
    static constexpr int kMaxVertex = 63;

    constexpr VertexSet() = default;
    static constexpr VertexSet from_bits(std::uint64_t bits) {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }
    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) insert(v);
    }

    static void check_vertex(int v) {
        if (v < 0 || v > kMaxVertex)
            throw InvalidArgument("vertex id out of range [0,63]: " + std::to_string(v));
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    bool contains(int v) const {
        return v >= 0 && v <= kMaxVertex && (bits_ >> v & 1u);
    }
    void insert(int v) {
        check_vertex(v);
        bits_ |= std::uint64_t{1} << v;
    }
    void erase(int v) {
        if (v >= 0 && v <= kMaxVertex) bits_ &= ~(std::uint64_t{1} << v);
    }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
        return from_bits(a.bits_ | b.bits_);
    }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
        return from_bits(a.bits_ & b.bits_);
    }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
        return from_bits(a.bits_ & ~b.bits_);
    }
    VertexSet with(int v) const {
        VertexSet s = *this;
        s.insert(v);
        return s;
    }
    VertexSet without(int v) const {
        VertexSet s = *this;
        s.erase(v);
        return s;
    }

    /// Smallest vertex id; undefined on the empty set.
    int min() const { return std::countr_zero(bits_); }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;

    /// Order by (size, lexicographic on the increasing id sequence). Used for
    /// canonical facet ordering. For equal sizes the smaller set is the one
    /// owning the least element of the symmetric difference.
    friend bool canonical_less(VertexSet a, VertexSet b) {
        if (a.size() != b.size()) return a.size() < b.size();
        std::uint64_t d = a.bits_ ^ b.bits_;
        if (d == 0) return false;
        return a.bits_ >> std::countr_zero(d) & 1u;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : to_vector()) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

    // Iteration over members in increasing order.
    class iterator {
    public:
        explicit constexpr iterator(std::uint64_t b) : rest_(b) {}
        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        friend constexpr bool operator==(iterator, iterator) = default;

    private:
        std::uint64_t rest_;
    };
    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

}  // namespace sphc

#endif
