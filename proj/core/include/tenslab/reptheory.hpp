#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tenslab/poly.hpp"
#include "tenslab/rational.hpp"
#include "tenslab/tensor.hpp"
#include "tenslab/varieties.hpp"

namespace tenslab {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int partition_size(const Partition& p);
std::vector<Partition> partitions_of(int d);
std::string partition_str(const Partition& p);

// Irreducible symmetric-group character chi_pi at cycle type mu
// (Murnaghan-Nakayama), exact.
long long mn_character(const Partition& pi, const Partition& mu);

// |class(mu)| = d! / prod(i^{m_i} m_i!).
Int conjugacy_class_size(const Partition& mu);

// dim of the invariant space in [pi_1] (x) ... (x) [pi_n], via the class
// sum of character products. Budget d <= 12.
long invariant_mult(const std::vector<Partition>& labels);

// Hook-content formula for dim S_pi C^a; zero when the partition is too
// long.
Int schur_dim(const Partition& pi, int a);

struct ModuleLabel {
    std::vector<Partition> parts;
    long multiplicity = 0;
    Int dimension;  // multiplicity * prod schur_dim
};

// Isotypic decomposition of Sym^d of a tensor product space. Checks the
// dimension identity sum mult * prod dim = C(prod a_i + d - 1, d) before
// returning. Budget: d <= 8, <= 4 factors, dims <= 4.
std::vector<ModuleLabel> decompose_symd(const std::vector<int>& shape, int d);

// Young symmetrizer for the canonical tableau of shape pi (rows filled
// left-to-right, top-to-bottom): row-symmetrize, then column-antisymmetrize.
Tensor young_symmetrize(const Partition& pi, const Tensor& t);

// Raising operator sum_slots (e_from -> e_to at one slot), for
// highest-weight checks.
Tensor raising_operator(const Tensor& t, int from, int to);

// Linear subspace of degree-k forms in N variables, spanned by coefficient
// vectors over the fixed monomial order.
struct PolySpace {
    int degree = 0;
    int num_vars = 0;
    std::vector<std::vector<Rat>> basis;
};

// Prolongation A^(p): forms of degree k+p all of whose order-p partial
// derivatives lie in A. Exact kernel computation.
PolySpace prolong(const PolySpace& a, int p);

// Quadratic generators of the ideal of the degree-d Veronese of P^1 in
// `vars` variables is not provided here; tests build PolySpaces directly.

struct IdealDimReport {
    std::size_t monomials = 0;
    std::size_t samples = 0;
    std::size_t rank = 0;
    std::size_t dim_upper_bound = 0;  // equals dim I_k generically
};

// Numeric dimension of the degree-k ideal of a variety or its r-th secant:
// kernel dimension of the evaluation matrix at random exact points, with
// the rank certified modulo a 61-bit prime. Always a true upper bound on
// dim I_k; equality holds generically in the samples. samples = 0 picks
// 3x the monomial count. Budget: C(N+k-1, k) <= 5000.
IdealDimReport ideal_dim_numeric(const VarietySpec& v, int secant_r, int degree,
                                 std::size_t samples = 0, std::uint64_t seed = 0);

// Predicted dimension of the space of cubics vanishing on the second
// secant of a Segre product with the given mode dimensions (module count
// weighted by Schur dimensions; labels too long for a factor drop out).
Int cubics_on_secant2_formula(const std::vector<int>& dims);

}  // namespace tenslab
