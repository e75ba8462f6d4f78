#pragma once

#include <map>
#include <string>
#include <vector>

#include "tenslab/decomposition.hpp"
#include "tenslab/tensor.hpp"

namespace tenslab {

// Family of rank-one curves given factor-wise: curve j is the outer product
// of one polynomial vector per mode (EpsScalar entries restricted to
// non-negative degrees). Factor-wise presentation keeps every curve on the
// Segre cone for all parameter values.
struct CurveFamily {
    std::vector<int> shape;
    std::vector<RankOneTerm> curves;

    void validate() const;  // polynomial factors, nonzero at t = 0
    std::size_t size() const { return curves.size(); }

    static CurveFamily from_decomposition(const Decomposition& d);
};

// Element of Wedge^r of the ambient space, stored compactly over a working
// subspace U spanned by the vectors that actually occur: `basis` is a basis
// of U in ambient coordinates and `coords` maps sorted r-subsets of basis
// indices to Plucker coefficients.
struct MultiVector {
    int r = 0;
    std::vector<std::vector<Rat>> basis;
    std::map<std::vector<int>, Rat> coords;

    bool is_zero() const { return coords.empty(); }

    // Dense Plucker expansion over sorted r-subsets of ambient indices.
    // Only sensible when C(ambient, r) is small; used by tests.
    std::vector<Rat> dense(std::size_t ambient_dim) const;
};

// Tensor-valued polynomial curves: coefficient list by degree in t.
using TensorCurve = std::vector<Tensor>;

TensorCurve expand_curve(const std::vector<int>& shape, const RankOneTerm& term);

// Coefficient of t^k in x_1(t) ^ ... ^ x_r(t) for arbitrary vector-valued
// polynomial curves (ambient coordinates per degree).
MultiVector wedge_taylor_raw(const std::vector<std::vector<std::vector<Rat>>>& curves,
                             int k);

// Same, for a factor-wise family.
MultiVector wedge_taylor(const CurveFamily& f, int k);

struct LimitPlane {
    int order = 0;                        // lowest t-power with nonzero wedge
    std::vector<std::vector<Rat>> basis;  // spanning basis of the limiting r-plane
};

// Lowest nonvanishing wedge coefficient, verified decomposable through the
// rank of the induced contraction map; an indecomposable lowest coefficient
// means a curve left the variety and is reported as an internal error.
LimitPlane limit_plane(const CurveFamily& f);

bool plane_contains(const LimitPlane& plane, const Tensor& t);

}  // namespace tenslab
