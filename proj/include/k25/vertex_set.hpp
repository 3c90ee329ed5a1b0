#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace k25 {

/// Set of vertex indices in [0, 64), one bit per vertex. Value type; all
/// operations are pure. A VertexSet is always interpreted relative to some
/// graph's vertex range, and operations producing them keep every set bit
/// below that graph's vertex count.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.bits_ |= std::uint64_t{1} << v;
        return s;
    }

    /// {0, 1, ..., n-1}
    static constexpr VertexSet first_n(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
    constexpr bool empty() const { return bits_ == 0; }
    int count() const { return std::popcount(bits_); }

    /// Smallest member; undefined on the empty set.
    int first() const { return std::countr_zero(bits_); }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

    bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    /// Set difference.
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }

    constexpr bool operator==(const VertexSet&) const = default;

    constexpr std::uint64_t bits() const { return bits_; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    /// Iterates members in ascending order.
    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_;
    };

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

} // namespace k25
