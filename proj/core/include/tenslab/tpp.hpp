#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tenslab/rational.hpp"

namespace tenslab {

// Finite group as a Cayley table; element 0 is the identity. The table is
// validated on construction.
class FiniteGroup {
public:
    explicit FiniteGroup(std::vector<std::vector<int>> table, std::string name = "");

    int order() const { return static_cast<int>(table_.size()); }
    int mul(int a, int b) const { return table_[a][b]; }
    int inverse(int a) const { return inv_[a]; }
    bool is_abelian() const;
    const std::string& name() const { return name_; }

    static FiniteGroup cyclic(int n);
    static FiniteGroup dihedral(int n);          // order 2n
    static FiniteGroup quaternion8();
    static FiniteGroup dicyclic12();
    static FiniteGroup alternating4();
    static FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h);

    // Every group of order <= 12, up to isomorphism.
    static std::vector<FiniteGroup> all_up_to_order_12();

private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    std::string name_;
};

struct TPPInstance {
    FiniteGroup group;
    std::vector<int> s1, s2, s3;
    std::vector<int> character_degrees;  // optional; abelian groups default to all ones
};

// Exhaustive check of the triple product property over the quotient sets
// S_i^{-1} S_i.
bool tpp_check(const TPPInstance& inst);

// Largest omega consistent with (nmp)^(omega/3) <= d^(omega-2) |G|; nullopt
// means the inequality holds for every omega >= 2, i.e. no constraint.
std::optional<double> tpp_omega_bound(const TPPInstance& inst);

// Exhaustive search for subset triples of the given sizes satisfying the
// property; returns the first triple in lexicographic order.
std::optional<std::array<std::vector<int>, 3>> tpp_search(const FiniteGroup& g,
                                                          int n1, int n2, int n3);

}  // namespace tenslab
