#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flagforge/complex.hpp"

namespace flagforge {

/**
 * Oriented boundary map ∂ from the faces of one dimension to the faces one
 * dimension lower. Faces are oriented by ascending vertex order, so removing
 * the i-th smallest vertex contributes the sign (-1)^i.
 */
struct BoundaryMatrix {
    std::vector<VertexSet> row_faces;  // (dim-1)-faces, ascending
    std::vector<VertexSet> col_faces;  // dim-faces, ascending
    std::vector<std::int8_t> entries;  // row-major

    std::size_t rows() const { return row_faces.size(); }
    std::size_t cols() const { return col_faces.size(); }
    int at(std::size_t r, std::size_t c) const { return entries[r * cols() + c]; }
};

/// ∂ whose columns are the faces of the given dimension (dim >= 0; dim 0 maps onto the empty face).
BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int dim);

/// Dense integer matrix product of two boundary maps (∂_{k} · ∂_{k+1}).
std::vector<std::int64_t> compose(const BoundaryMatrix& lower, const BoundaryMatrix& upper);

/// Rank of a dense integer matrix. characteristic == 0 uses exact fraction-free
/// (Bareiss) elimination; a prime characteristic reduces modulo p.
std::size_t matrix_rank(std::vector<std::int64_t> entries, std::size_t rows, std::size_t cols, std::uint32_t characteristic = 0);

/// Reduced Betti numbers b_{-1}, ..., b_{d-1}. DomainError on the void complex.
IntVector reduced_betti(const SimplicialComplex& c, std::uint32_t characteristic = 0);

/// Σ_{k>=0} (-1)^k f_k.
std::int64_t euler_characteristic(const SimplicialComplex& c);

struct CmReport {
    bool cohen_macaulay = true;
    /// On failure: a face whose link has nonvanishing homology below its top dimension.
    std::optional<VertexSet> face;
    int degree = 0;
};

/// Reisner's criterion over every face (including ∅), largest faces first.
CmReport cohen_macaulay_report(const SimplicialComplex& c, std::uint32_t characteristic = 0);

inline bool is_cm(const SimplicialComplex& c, std::uint32_t characteristic = 0) {
    return cohen_macaulay_report(c, characteristic).cohen_macaulay;
}

struct BuchsbaumReport {
    bool buchsbaum = true;
    bool pure = true;
    std::optional<int> vertex;  // first vertex with a non-CM link
};

/// Pure and every vertex link Cohen-Macaulay.
BuchsbaumReport buchsbaum_report(const SimplicialComplex& c, std::uint32_t characteristic = 0);

inline bool is_buchsbaum(const SimplicialComplex& c, std::uint32_t characteristic = 0) {
    return buchsbaum_report(c, characteristic).buchsbaum;
}

}  // namespace flagforge
