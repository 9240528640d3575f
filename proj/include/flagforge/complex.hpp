#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flagforge/bits.hpp"
#include "flagforge/graph.hpp"

namespace flagforge {

/// Exact integer sequence. f-vectors start at f_{-1}, h-vectors at h_0,
/// reduced Betti vectors at b_{-1}.
using IntVector = std::vector<std::int64_t>;

/// Drops trailing zeros ("nonzero part"); an all-zero vector becomes empty.
IntVector strip_trailing_zeros(IntVector v);

/// Pads with zeros up to the requested length (never truncates).
IntVector pad_to(IntVector v, std::size_t length);

/// Binomial coefficient with overflow checking; zero when k < 0 or k > n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/**
 * Simplicial complex on the ground set {0..n-1}, stored as its facet antichain.
 *
 * The void complex (no faces at all) and the empty complex {∅} are distinct:
 * the former has no facets, the latter has the single facet 0. Vertices of
 * the ground set that lie in no facet are allowed; link and deletion keep the
 * ground set fixed so faces never need relabeling.
 */
class SimplicialComplex {
public:
    /// Void complex on an empty ground set.
    SimplicialComplex() = default;

    static SimplicialComplex void_complex(int n);
    static SimplicialComplex empty_complex(int n);
    static SimplicialComplex simplex(int n, VertexSet face);

    /// Facets must form an antichain inside the ground set, else DomainError.
    static SimplicialComplex from_facets(int n, std::vector<VertexSet> facets);

    /// Complex generated by arbitrary faces (non-maximal ones are dropped).
    static SimplicialComplex generated_by(int n, std::vector<VertexSet> faces);

    int ground_size() const { return n_; }
    const std::vector<VertexSet>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    /// Union of all facets.
    VertexSet vertices() const;
    /// Largest facet size d (so the dimension is d - 1). DomainError when void.
    int facet_dimension_count() const;
    int dimension() const { return facet_dimension_count() - 1; }
    bool is_simplex() const { return facets_.size() == 1; }

    bool contains_face(VertexSet s) const;

    /// All faces grouped by size: result[k] holds the faces with k vertices, ascending.
    std::vector<std::vector<VertexSet>> faces_by_size() const;

    /// Same faces relabeled through map (map[old] = new) into a ground set of size n.
    SimplicialComplex relabeled(int n, const std::vector<int>& map) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex(int n, std::vector<VertexSet> facets) : n_(n), facets_(std::move(facets)) {}

    int n_ = 0;
    std::vector<VertexSet> facets_;  // sorted ascending
};

/// Facets are the maximal independent sets of g; the 0-vertex graph gives {∅}.
SimplicialComplex independence_complex(const Graph& g);

IntVector f_vector(const SimplicialComplex& c);
IntVector h_vector(const SimplicialComplex& c);

/// Inverse transform: f_{j-1} = Σ_i C(d-i, j-i) h_i with d = h.size() - 1.
IntVector f_from_h(const IntVector& h);
/// Forward transform on a raw f-vector (length d + 1).
IntVector h_from_f(const IntVector& f);

/// lk σ = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}. DomainError if σ is not a face.
SimplicialComplex link(const SimplicialComplex& c, VertexSet sigma);
/// del σ = {τ ∈ Δ : σ ⊄ τ}. DomainError if σ is empty.
SimplicialComplex deletion(const SimplicialComplex& c, VertexSet sigma);

/// Join on disjoint ground sets; the second ground set is shifted past the first.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

bool is_pure(const SimplicialComplex& c);

/// Minimal non-faces, ordered by size then bitmask. Unused ground vertices appear as singletons.
std::vector<VertexSet> stanley_reisner_generators(const SimplicialComplex& c);

/// True when every minimal non-face has exactly two vertices.
bool is_flag(const SimplicialComplex& c);

/// Numerator of the Hilbert series of K[Δ] over (1-t)^d, expanded from
/// Σ_σ t^|σ| (1-t)^(d-|σ|). Agrees with h_vector.
IntVector hilbert_numerator(const SimplicialComplex& c);

/// Coefficient-wise product of two integer polynomials.
IntVector polynomial_product(const IntVector& a, const IntVector& b);

/// Graph whose edges are the two-element minimal non-faces (inverse of independence_complex on flag complexes).
Graph graph_of_flag_complex(const SimplicialComplex& c);

}  // namespace flagforge
