#pragma once

#include <cstdint>

namespace flagforge {

/// Limits for the exhaustive searches. Exceeding one raises BudgetExceeded.
struct Budget {
    /// Orientation words tried by the extrusion search (2^20 by default).
    std::uint64_t extrusion_candidates = std::uint64_t{1} << 20;
    /// Largest vertex count for isomorphism-reduced graph enumeration.
    int dedup_vertices = 9;
    /// Largest vertex count for labeled (2^C(n,2)) graph enumeration.
    int labeled_vertices = 7;
    /// Largest vertex count for the bipartite class enumeration.
    int bipartite_vertices = 11;

    /// Defaults, with FLAGFORGE_BUDGET (if set) replacing extrusion_candidates.
    static Budget from_env();
};

}  // namespace flagforge
