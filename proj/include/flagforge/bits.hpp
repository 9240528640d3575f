#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace flagforge {

/// A set of vertex indices packed into a machine word. Bit i set <=> vertex i present.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

constexpr VertexSet low_bits(int n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

constexpr int popcount(VertexSet s) { return std::popcount(s); }

constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }

constexpr bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

/// Calls fn(v) for every vertex of s in ascending order.
template <typename Fn>
constexpr void for_each_vertex(VertexSet s, Fn&& fn) {
    while (s != 0) {
        const int v = std::countr_zero(s);
        fn(v);
        s &= s - 1;
    }
}

inline std::vector<int> to_indices(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(s)));
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

/// Calls fn(sub) for every subset of s, including the empty set and s itself.
template <typename Fn>
constexpr void for_each_subset(VertexSet s, Fn&& fn) {
    VertexSet sub = s;
    while (true) {
        fn(sub);
        if (sub == 0) break;
        sub = (sub - 1) & s;
    }
}

}  // namespace flagforge
