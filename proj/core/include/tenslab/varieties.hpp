#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tenslab/rational.hpp"
#include "tenslab/rng.hpp"

namespace tenslab {

// Cones over the three variety families the sampler knows how to
// parameterize. veronese(d, n) is degree-d powers of linear forms in n
// variables; grassmann(k, n) is decomposable k-vectors in n-space.
struct VarietySpec {
    enum class Kind { Segre, Veronese, Grassmann };
    Kind kind = Kind::Segre;
    std::vector<int> dims;  // segre mode dims
    int d = 0, n = 0, k = 0;

    static VarietySpec segre(std::vector<int> dims);
    static VarietySpec veronese(int d, int n);
    static VarietySpec grassmann(int k, int n);
    static std::optional<VarietySpec> parse(const std::string& text);

    std::size_t ambient_dim() const;
    std::size_t cone_dim() const;  // affine dimension of the cone
    std::string str() const;
};

// Spanning set of the affine tangent space at the point cut out by the
// given parameters (one coefficient vector per factor of the
// parameterization).
std::vector<std::vector<Rat>> tangent_space(const VarietySpec& v,
                                            const std::vector<std::vector<Rat>>& params);

// Random integer parameters in {-9..9} for one point of the cone.
std::vector<std::vector<Rat>> sample_point_params(const VarietySpec& v, Rng& rng);

// Ambient coordinates of the point with the given parameters.
std::vector<Rat> point_coords(const VarietySpec& v,
                              const std::vector<std::vector<Rat>>& params);

struct TerraciniReport {
    VarietySpec variety;
    int r = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::size_t observed = 0;  // max over trials, affine
    std::size_t expected = 0;  // min(r * cone_dim, ambient)
    std::size_t defect = 0;
    std::size_t ambient = 0;
};

// Terracini sampling: stack tangent spaces at r random points and take the
// exact rank; the max over trials is the observed affine dimension.
TerraciniReport secant_dim(const VarietySpec& v, int r, int trials,
                           std::uint64_t seed, int threads = 1);

// ceil(abc / (a+b+c-2)): the least r whose expected secant dimension fills.
long expected_fill(long a, long b, long c);

// Projective dimension of the r-th secant of the cube Segre on n-spaces:
// min{r(3n-2) - 1, n^3 - 1}, with the known n = 3, r = 4 hypersurface
// correction applied.
long lickteig_dim(int n, int r);

// Typical Waring rank of degree-d forms in n variables (dimension count
// with the published exception table; d = 2 returns n).
long waring_rank(int d, int n);

// dim sigma_r(v_2(P^n)) = rn - (r^2 - 3r)/2 - 1 for 2 <= r <= n; r = 1 is
// the Veronese itself.
long quadric_veronese_dim(int r, int n);

// Bookkeeping for the three-block covering of 3x3 multiplication by
// partial products of cost 7 each.
struct BlockCoverReport {
    bool covers_entries = false;  // union of entry supports is all of A, B and C
    int total_cost = 0;
    std::vector<int> block_costs;
};
BlockCoverReport three_block_cover_333();

}  // namespace tenslab
