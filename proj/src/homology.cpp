#include "flagforge/homology.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>

#include "checked.hpp"
#include "flagforge/errors.hpp"

namespace flagforge {

namespace {

struct RankOverflow {};

// Overflow-checked operations for the int64 Bareiss pass.
struct Int64Ops {
    using Value = std::int64_t;
    static Value step(Value pivot, Value a, Value b, Value c, Value prev) {
        const __int128 num = static_cast<__int128>(pivot) * a - static_cast<__int128>(b) * c;
        const __int128 q = num / prev;
        if (q > INT64_MAX || q < INT64_MIN) throw RankOverflow{};
        return static_cast<Value>(q);
    }
    static Value magnitude(Value v) { return v < 0 ? -v : v; }
};

struct BigOps {
    using Value = boost::multiprecision::cpp_int;
    static Value step(const Value& pivot, const Value& a, const Value& b, const Value& c, const Value& prev) {
        return (pivot * a - b * c) / prev;
    }
    static Value magnitude(const Value& v) { return boost::multiprecision::abs(v); }
};

// Fraction-free Gaussian elimination with full pivoting; every intermediate
// entry is a minor of the (permuted) input, so divisions are exact.
template <typename Ops>
std::size_t bareiss_rank(std::vector<typename Ops::Value> m, std::size_t rows, std::size_t cols) {
    using Value = typename Ops::Value;
    Value prev = 1;
    std::size_t rank = 0;
    auto at = [&](std::size_t r, std::size_t c) -> Value& { return m[r * cols + c]; };

    for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
        std::size_t pr = rows, pc = cols;
        Value best = 0;
        for (std::size_t r = k; r < rows; ++r) {
            for (std::size_t c = k; c < cols; ++c) {
                if (at(r, c) == 0) continue;
                Value mag = Ops::magnitude(at(r, c));
                if (pr == rows || mag < best) {
                    best = mag;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (pr == rows) break;
        if (pr != k)
            for (std::size_t c = 0; c < cols; ++c) std::swap(at(k, c), at(pr, c));
        if (pc != k)
            for (std::size_t r = 0; r < rows; ++r) std::swap(at(r, k), at(r, pc));

        const Value pivot = at(k, k);
        for (std::size_t r = k + 1; r < rows; ++r) {
            const Value lead = at(r, k);
            for (std::size_t c = k + 1; c < cols; ++c) at(r, c) = Ops::step(pivot, at(r, c), lead, at(k, c), prev);
            at(r, k) = 0;
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

std::size_t modular_rank(std::vector<std::int64_t> m, std::size_t rows, std::size_t cols, std::uint32_t p) {
    const auto mod = static_cast<std::int64_t>(p);
    for (auto& v : m) v = ((v % mod) + mod) % mod;
    auto at = [&](std::size_t r, std::size_t c) -> std::int64_t& { return m[r * cols + c]; };
    auto inverse = [&](std::int64_t a) {
        std::int64_t result = 1, e = mod - 2;
        while (e > 0) {
            if (e & 1) result = result * a % mod;
            a = a * a % mod;
            e >>= 1;
        }
        return result;
    };
    std::size_t rank = 0;
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pr = rank;
        while (pr < rows && at(pr, c) == 0) ++pr;
        if (pr == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(at(rank, j), at(pr, j));
        const std::int64_t inv = inverse(at(rank, c));
        support.clear();
        for (std::size_t j = c; j < cols; ++j)
            if (at(rank, j) != 0) support.push_back(j);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (at(r, c) == 0) continue;
            const std::int64_t factor = mod - at(r, c) * inv % mod;
            for (std::size_t j : support) at(r, j) = (at(r, j) + factor * at(rank, j)) % mod;
        }
        ++rank;
    }
    return rank;
}

constexpr std::uint32_t kScreenPrime = 2;

bool is_prime(std::uint32_t p) {
    if (p < 2 || p >= (1U << 31)) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t mod) {
    std::int64_t result = 1, e = mod - 2;
    while (e > 0) {
        if (e & 1) result = result * a % mod;
        a = a * a % mod;
        e >>= 1;
    }
    return result;
}

using SparseColumn = std::vector<std::pair<std::size_t, std::int64_t>>;  // (row, value), rows ascending

// Column reduction over GF(p), pivoting on the lowest nonzero row.
std::size_t sparse_modular_rank(std::vector<SparseColumn> columns, std::size_t rows, std::uint32_t p) {
    const auto mod = static_cast<std::int64_t>(p);
    std::vector<std::ptrdiff_t> pivot(rows, -1);
    std::vector<SparseColumn> reduced;
    SparseColumn merged;
    for (auto& col : columns) {
        for (auto& [r, v] : col) v = ((v % mod) + mod) % mod;
        while (!col.empty()) {
            const auto [low, value] = col.back();
            if (pivot[low] < 0) {
                // stored pivots are scaled to end in 1
                const std::int64_t inv = inverse_mod(value, mod);
                for (auto& entry : col) entry.second = entry.second * inv % mod;
                pivot[low] = static_cast<std::ptrdiff_t>(reduced.size());
                reduced.push_back(std::move(col));
                break;
            }
            const SparseColumn& other = reduced[static_cast<std::size_t>(pivot[low])];
            const std::int64_t factor = mod - value;
            merged.clear();
            std::size_t i = 0, j = 0;
            while (i < col.size() || j < other.size()) {
                if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
                    merged.push_back(col[i++]);
                } else if (i == col.size() || other[j].first < col[i].first) {
                    merged.emplace_back(other[j].first, factor * other[j].second % mod);
                    ++j;
                } else {
                    const std::int64_t v = (col[i].second + factor * other[j].second) % mod;
                    if (v != 0) merged.emplace_back(col[i].first, v);
                    ++i;
                    ++j;
                }
            }
            col.swap(merged);
        }
    }
    return reduced.size();
}

// Column reduction over GF(2) on packed bit columns.
std::size_t binary_rank(std::vector<std::vector<std::uint64_t>> columns, std::size_t rows) {
    std::vector<std::ptrdiff_t> pivot(rows, -1);
    std::vector<std::vector<std::uint64_t>> reduced;
    auto lowest = [](const std::vector<std::uint64_t>& col) -> std::ptrdiff_t {
        for (std::size_t w = col.size(); w-- > 0;)
            if (col[w]) return static_cast<std::ptrdiff_t>(w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(col[w])));
        return -1;
    };
    for (auto& col : columns) {
        for (std::ptrdiff_t low = lowest(col); low >= 0; low = lowest(col)) {
            if (pivot[static_cast<std::size_t>(low)] < 0) {
                pivot[static_cast<std::size_t>(low)] = static_cast<std::ptrdiff_t>(reduced.size());
                reduced.push_back(std::move(col));
                break;
            }
            const auto& other = reduced[static_cast<std::size_t>(pivot[static_cast<std::size_t>(low)])];
            for (std::size_t w = 0; w <= static_cast<std::size_t>(low) / 64; ++w) col[w] ^= other[w];
        }
    }
    return reduced.size();
}

// Rank of ∂ between consecutive levels, without materializing a BoundaryMatrix.
std::size_t boundary_rank(const std::vector<VertexSet>& lower, const std::vector<VertexSet>& upper, std::uint32_t characteristic) {
    if (lower.empty() || upper.empty()) return 0;
    const std::size_t rows = lower.size(), cols = upper.size();
    auto row_of = [&](VertexSet face) {
        return static_cast<std::size_t>(std::lower_bound(lower.begin(), lower.end(), face) - lower.begin());
    };
    if (characteristic == 2) {
        std::vector<std::vector<std::uint64_t>> columns(cols, std::vector<std::uint64_t>((rows + 63) / 64, 0));
        for (std::size_t c = 0; c < cols; ++c)
            for_each_vertex(upper[c], [&](int v) {
                const std::size_t r = row_of(upper[c] & ~bit(v));
                columns[c][r / 64] |= std::uint64_t{1} << (r % 64);
            });
        return binary_rank(std::move(columns), rows);
    }
    if (characteristic != 0) {
        if (!is_prime(characteristic)) throw DomainError("field characteristic must be 0 or a prime below 2^31");
        std::vector<SparseColumn> columns(cols);
        for (std::size_t c = 0; c < cols; ++c) {
            int i = 0;
            for_each_vertex(upper[c], [&](int v) {
                columns[c].emplace_back(row_of(upper[c] & ~bit(v)), (i % 2 == 0) ? 1 : -1);
                ++i;
            });
            std::sort(columns[c].begin(), columns[c].end());
        }
        return sparse_modular_rank(std::move(columns), rows, characteristic);
    }
    std::vector<std::int64_t> m(rows * cols, 0);
    for (std::size_t c = 0; c < cols; ++c) {
        int i = 0;
        for_each_vertex(upper[c], [&](int v) {
            m[row_of(upper[c] & ~bit(v)) * cols + c] = (i % 2 == 0) ? 1 : -1;
            ++i;
        });
    }
    return matrix_rank(std::move(m), rows, cols, 0);
}

}  // namespace

BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int dim) {
    if (dim < 0) throw DomainError("boundary matrices start at dimension 0");
    const auto levels = c.faces_by_size();
    BoundaryMatrix out;
    const auto size = static_cast<std::size_t>(dim) + 1;
    if (size - 1 < levels.size()) out.row_faces = levels[size - 1];
    if (size < levels.size()) out.col_faces = levels[size];
    out.entries.assign(out.rows() * out.cols(), 0);
    for (std::size_t col = 0; col < out.cols(); ++col) {
        int i = 0;
        for_each_vertex(out.col_faces[col], [&](int v) {
            const VertexSet face = out.col_faces[col] & ~bit(v);
            const auto r = static_cast<std::size_t>(
                std::lower_bound(out.row_faces.begin(), out.row_faces.end(), face) - out.row_faces.begin());
            out.entries[r * out.cols() + col] = static_cast<std::int8_t>((i % 2 == 0) ? 1 : -1);
            ++i;
        });
    }
    return out;
}

std::vector<std::int64_t> compose(const BoundaryMatrix& lower, const BoundaryMatrix& upper) {
    if (lower.col_faces != upper.row_faces) throw DomainError("boundary maps are not composable");
    std::vector<std::int64_t> out(lower.rows() * upper.cols(), 0);
    for (std::size_t r = 0; r < lower.rows(); ++r)
        for (std::size_t k = 0; k < lower.cols(); ++k) {
            const int a = lower.at(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < upper.cols(); ++c) out[r * upper.cols() + c] += a * upper.at(k, c);
        }
    return out;
}

std::size_t matrix_rank(std::vector<std::int64_t> entries, std::size_t rows, std::size_t cols, std::uint32_t characteristic) {
    if (entries.size() != rows * cols) throw DomainError("matrix shape mismatch");
    if (rows == 0 || cols == 0) return 0;
    if (characteristic != 0) {
        if (!is_prime(characteristic)) throw DomainError("field characteristic must be 0 or a prime below 2^31");
        return modular_rank(std::move(entries), rows, cols, characteristic);
    }
    try {
        return bareiss_rank<Int64Ops>(entries, rows, cols);
    } catch (const RankOverflow&) {
        std::vector<BigOps::Value> big(entries.begin(), entries.end());
        return bareiss_rank<BigOps>(std::move(big), rows, cols);
    }
}

IntVector reduced_betti(const SimplicialComplex& c, std::uint32_t characteristic) {
    if (c.is_void()) throw DomainError("homology of the void complex is undefined");
    const auto levels = c.faces_by_size();  // levels[k]: faces with k vertices, dimension k-1
    const std::size_t top = levels.size();
    // ranks[k] = rank of ∂ from levels[k] to levels[k-1]
    std::vector<std::size_t> ranks(top + 1, 0);
    // Over Q, ranks are computed mod 2 first. A rank mod p never exceeds the rational rank,
    // so a Betti number that vanishes mod p vanishes over Q; only the others are recomputed exactly.
    const std::uint32_t first = characteristic == 0 ? kScreenPrime : characteristic;
    for (std::size_t k = 1; k < top; ++k) ranks[k] = boundary_rank(levels[k - 1], levels[k], first);
    auto betti_at = [&](std::size_t k) {
        return static_cast<std::int64_t>(levels[k].size()) - static_cast<std::int64_t>(ranks[k]) -
               static_cast<std::int64_t>(ranks[k + 1]);
    };
    if (characteristic == 0) {
        std::vector<bool> exact(top + 1, false);
        for (std::size_t k = 0; k < top; ++k) {
            if (betti_at(k) == 0) continue;
            for (std::size_t j : {k, k + 1}) {
                if (j == 0 || j >= top || exact[j]) continue;
                ranks[j] = boundary_rank(levels[j - 1], levels[j], 0);
                exact[j] = true;
            }
        }
    }
    IntVector betti(top, 0);
    for (std::size_t k = 0; k < top; ++k) betti[k] = betti_at(k);
    return betti;
}

std::int64_t euler_characteristic(const SimplicialComplex& c) {
    const IntVector f = f_vector(c);
    std::int64_t chi = 0;
    for (std::size_t k = 1; k < f.size(); ++k) chi += ((k - 1) % 2 == 0) ? f[k] : -f[k];
    return chi;
}

CmReport cohen_macaulay_report(const SimplicialComplex& c, std::uint32_t characteristic) {
    if (c.is_void()) throw DomainError("Cohen-Macaulayness of the void complex is undefined");
    auto levels = c.faces_by_size();
    for (auto level = levels.rbegin(); level != levels.rend(); ++level) {
        for (VertexSet sigma : *level) {
            const SimplicialComplex lk = link(c, sigma);
            const int dim = lk.dimension();
            if (dim <= 0) continue;  // b_{-1} vanishes on any nonempty complex
            VertexSet apex = lk.vertices();
            for (VertexSet f : lk.facets()) apex &= f;
            if (apex) continue;  // cones are acyclic
            const IntVector betti = reduced_betti(lk, characteristic);
            // betti[i + 1] = b_i; require b_i = 0 for -1 <= i < dim
            for (int i = -1; i < dim; ++i) {
                if (betti[static_cast<std::size_t>(i + 1)] != 0) return CmReport{false, sigma, i};
            }
        }
    }
    return CmReport{};
}

BuchsbaumReport buchsbaum_report(const SimplicialComplex& c, std::uint32_t characteristic) {
    if (c.is_void()) throw DomainError("Buchsbaumness of the void complex is undefined");
    BuchsbaumReport out;
    if (!is_pure(c)) {
        out.buchsbaum = false;
        out.pure = false;
        return out;
    }
    std::optional<int> bad;
    for_each_vertex(c.vertices(), [&](int v) {
        if (!bad && !is_cm(link(c, bit(v)), characteristic)) bad = v;
    });
    if (bad) {
        out.buchsbaum = false;
        out.vertex = bad;
    }
    return out;
}

}  // namespace flagforge
