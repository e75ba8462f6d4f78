#pragma once

#include <optional>
#include <vector>

#include "tenslab/decomposition.hpp"
#include "tenslab/matrix.hpp"

namespace tenslab {

// Subspaces are given by bases of coordinate vectors: a1/b1 in the left and
// right argument spaces of the bilinear map (the duals of modes 1 and 2),
// c1 in the value space (mode 3). An empty list is the zero subspace.
struct SeparationQuery {
    Decomposition phi;  // exact computation, phi in A* (x) B* (x) C
    std::vector<std::vector<Rat>> a1, b1, c1;
    bool all_modes = false;  // flagged variant: injective contractions in every mode
};

struct SeparationResult {
    bool found = false;
    // part[t] in {1,2,3} (or {1,2,3,4} for the all-modes variant, 4 = leftover);
    // lexicographically least valid assignment.
    std::vector<int> part;
    std::size_t phi3_valued_in_c1 = 0;
    std::size_t implied_bound = 0;  // dim a1 + dim b1 + (phi3 terms valued in c1)
};

// Exhaustive 3-coloring of the terms (4-coloring for the all-modes
// variant). Budget: colors^length <= 3^12.
SeparationResult separation_check(const SeparationQuery& q, int threads = 1);

}  // namespace tenslab
