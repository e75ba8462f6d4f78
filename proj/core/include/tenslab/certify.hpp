#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tenslab/matrix.hpp"
#include "tenslab/tensor.hpp"

namespace tenslab {

struct SingularSlice : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommutatorWitness {
    std::vector<Rat> alpha, alpha1, alpha2;
    RatMatrix commutator;
    std::size_t rank = 0;
    std::size_t bound = 0;  // b + ceil(rank/2) <= border rank
};

// Commutator test for an a x b x b tensor (a >= 3, modes 2 and 3 equal).
// T_alpha must be invertible; a singular slice throws SingularSlice and the
// caller retries with a new covector.
CommutatorWitness strassen_commutator(const Tensor& t, const std::vector<Rat>& alpha,
                                      const std::vector<Rat>& alpha1,
                                      const std::vector<Rat>& alpha2);

// P(T)^s_t = sum_{j,k} (-1)^{j+k} det(X with row j, col k removed)
//            * (Y^j_t Z^s_k - Y^s_k Z^j_t)
// for T = a1 (x) X + a2 (x) Y + a3 (x) Z in the fixed basis. Needs no
// invertibility. Mode 1 must have dimension exactly 3.
RatMatrix strassen_P(const Tensor& t);

// det P(T) / det X for 3x3x3 tensors, homogeneous of degree nine. If det X
// vanishes, up to three deterministic unimodular basis changes in mode 1
// are tried; the zero/nonzero verdict is basis independent.
Rat degree9_invariant(const Tensor& t);

// psi^{s,t}_{alpha,alpha1,alpha2}(T) - psi^{s,t}_{alpha,alpha2,alpha1}(T)
// as a 4-mode tensor in Wedge^{s+t}B (x) Wedge^{s+t}C (x) Wedge^sB (x)
// Wedge^sC; identically zero whenever the rank of T is at most s+t.
Tensor generalized_strassen(const Tensor& t, int s, int u,
                            const std::vector<Rat>& alpha,
                            const std::vector<Rat>& alpha1,
                            const std::vector<Rat>& alpha2);

struct LiteratureConstant {
    std::string label;
    Rat value;
    bool is_lower_bound = true;
};

struct BoundReport {
    std::optional<std::size_t> flattening;
    std::optional<std::size_t> multilinear;
    std::optional<std::size_t> commutator;
    std::optional<std::size_t> p_matrix;
    std::size_t best = 0;
    std::vector<std::string> notes;
    std::vector<LiteratureConstant> literature;  // published values, shown not recomputed

    std::string best_method() const;
};

// Maximum of the implemented necessary-condition bounds on border rank.
// Commutator sampling uses 20 covector triples with entries in {-5..5}
// derived from `seed`.
BoundReport border_rank_bounds(const Tensor& t, std::uint64_t seed = 0,
                               int threads = 1);

// Attaches published rank / border-rank constants for M_{m,m,m} to a report.
void attach_matmul_literature(BoundReport& report, int m);

enum class PencilClass { S, B, W, GHZ };
std::string to_string(PencilClass c);

// Orbit classification of a nonzero 2x2x2 tensor: multilinear ranks
// separate S and B; the discriminant of det(x T0 + y T1) separates W
// (double root) from GHZ.
PencilClass classify_222(const Tensor& t);

enum class PhyloTopology { T12_34, T13_24, T14_23 };
std::string to_string(PhyloTopology t);
std::optional<PhyloTopology> phylo_topology_from_string(const std::string& s);

struct PhyloReport {
    bool compatible = false;
    std::size_t rank_primary = 0;  // rank of the grouped flattening
    std::size_t rank_secondary = 0;
};

// Necessary condition only: the grouped flattenings prescribed by the
// topology must have rank <= 4. Passing it does not certify membership in
// the model (its defining equations are not known).
PhyloReport phylo_necessary(const Tensor& t, PhyloTopology topology);

}  // namespace tenslab
