#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tenslab/tensor.hpp"

namespace tenslab {

// One rank-one summand of a bilinear computation: a coefficient vector per
// mode, entries Laurent in eps (plain rationals embed as degree 0).
struct RankOneTerm {
    std::vector<std::vector<EpsScalar>> factors;

    bool factors_nonzero() const {
        for (const auto& f : factors) {
            bool nz = false;
            for (const auto& x : f) nz = nz || !x.is_zero();
            if (!nz) return false;
        }
        return true;
    }
};

struct Decomposition {
    std::vector<int> shape;
    EpsScalar prefactor = EpsScalar(Rat(1));
    std::vector<RankOneTerm> terms;
    std::string name;

    std::size_t length() const { return terms.size(); }
    bool eps_free() const;
    void validate() const;  // shapes agree, factor vectors nonzero
};

// A computation read over the split space V = A (+) B in the first two
// modes; `split` is dim A.
struct VSplitDecomposition {
    Decomposition decomposition;
    int split = 0;
};

EpsTensor assemble(const Decomposition& d);

// Tensor of the bilinear map (m x n) * (n x p): shape (mn, np, mp), entry 1
// exactly where the index pairs (i,k),(k,l),(i,l) chain.
Tensor matmul_tensor(int m, int n, int p);

// Same with a set of first-matrix entries forced to zero; the zeroed
// entries are dropped from mode 1, so the shape shrinks.
Tensor matmul_tensor_partial(int m, int n, int p,
                             const std::vector<std::pair<int, int>>& zero_a);

Tensor w_state();
Tensor ghz_state();

bool verify_exact(const Decomposition& d, const Tensor& target);

struct BorderVerification {
    bool ok = false;
    // Lowest positive eps-order of the discarded remainder; nullopt when the
    // computation is exact (remainder identically zero).
    std::optional<int> remainder_order;
    std::string reason;
};

// Checks eps_limit(assemble(d)) == target and that every term stays a
// genuine rank-one tensor at a generic rational substitution (1/7, retrying
// at 1/11 when a factor degenerates).
BorderVerification verify_border(const Decomposition& d, const Tensor& target);

// Certificate check for a computation over V = A (+) B: after symmetrizing
// the first two modes, the S^2A and S^2B components must vanish and the
// mixed component must equal the target.
bool mult_complexity_verify(const VSplitDecomposition& d, const Tensor& target);

// --- catalog -------------------------------------------------------------
// Named computations shipped as data files under data/catalog.

std::vector<std::string> catalog_names();
Decomposition catalog(const std::string& name);
std::optional<VSplitDecomposition> catalog_vsplit(const std::string& name);

// The tensor a catalog entry is a computation of.
Tensor catalog_target(const std::string& name);

// Standard q x q x q base with q^3 terms, for the recursion engine.
Decomposition standard_base(int q);

// Resolve a base name for `mul`: catalog entries plus standard-NxN.
Decomposition resolve_base(const std::string& name);

}  // namespace tenslab
