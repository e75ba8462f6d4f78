#include <stdexcept>

#include "tenslab/reptheory.hpp"
#include "tenslab/rng.hpp"

namespace tenslab {

namespace {

// Arithmetic modulo the 61-bit Mersenne prime. A nonsingular minor mod p is
// nonsingular over Q, so the mod-p rank is a true lower bound on the
// rational rank; the reported kernel dimension is therefore always an upper
// bound on dim I_k.
constexpr std::uint64_t kP = (1ULL << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kP);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kP - 2); }

std::uint64_t to_mod(const Rat& q) {
    // Sample coordinates are integers by construction.
    static const Int p = (Int(1) << 61) - 1;
    Int r = q.get_num() % p;
    if (r < 0) r += p;
    return r.get_ui();
}

// Incremental row reduction mod p. Keeps an echelon basis; returns final rank.
struct ModEchelon {
    std::size_t cols;
    std::vector<std::vector<std::uint64_t>> rows;  // normalized, pivot = 1
    std::vector<std::size_t> pivot_cols;

    explicit ModEchelon(std::size_t c) : cols(c) {}

    bool add_row(std::vector<std::uint64_t> r) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::uint64_t f = r[pivot_cols[i]];
            if (f == 0) continue;
            const auto& er = rows[i];
            for (std::size_t j = 0; j < cols; ++j) {
                if (er[j] == 0) continue;
                const std::uint64_t sub = mulmod(f, er[j]);
                r[j] = (r[j] + kP - sub) % kP;
            }
        }
        std::size_t piv = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (r[j] != 0) {
                piv = j;
                break;
            }
        if (piv == cols) return false;
        const std::uint64_t inv = invmod(r[piv]);
        for (std::size_t j = 0; j < cols; ++j)
            if (r[j] != 0) r[j] = mulmod(r[j], inv);
        rows.push_back(std::move(r));
        pivot_cols.push_back(piv);
        return true;
    }
};

}  // namespace

IdealDimReport ideal_dim_numeric(const VarietySpec& v, int secant_r, int degree,
                                 std::size_t samples, std::uint64_t seed) {
    if (secant_r < 1) throw std::invalid_argument("secant index must be >= 1");
    const std::size_t n_coords = v.ambient_dim();
    MonomialBasis basis(static_cast<int>(n_coords), degree);
    if (basis.size() > 5000)
        throw std::invalid_argument("ideal_dim budget: monomial count <= 5000");
    if (samples == 0) samples = 3 * basis.size();

    IdealDimReport rep;
    rep.monomials = basis.size();
    rep.samples = samples;

    ModEchelon ech(basis.size());
    std::size_t stagnant = 0;
    std::size_t used = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        Rng rng = Rng::derive(seed, s);
        // One point of the cone over the r-th secant: sum of r points.
        std::vector<Rat> point(n_coords, Rat(0));
        for (int i = 0; i < secant_r; ++i) {
            auto params = sample_point_params(v, rng);
            auto coords = point_coords(v, params);
            for (std::size_t j = 0; j < n_coords; ++j) point[j] += coords[j];
        }
        // Powers table, then one row of monomial evaluations.
        std::vector<std::vector<std::uint64_t>> powers(n_coords);
        for (std::size_t j = 0; j < n_coords; ++j) {
            powers[j].resize(degree + 1);
            powers[j][0] = 1;
            const std::uint64_t x = to_mod(point[j]);
            for (int e = 1; e <= degree; ++e) powers[j][e] = mulmod(powers[j][e - 1], x);
        }
        std::vector<std::uint64_t> row(basis.size());
        for (std::size_t m = 0; m < basis.size(); ++m) {
            const auto& e = basis.exponent(m);
            std::uint64_t val = 1;
            for (std::size_t j = 0; j < n_coords && val != 0; ++j)
                if (e[j] > 0) val = mulmod(val, powers[j][e[j]]);
            row[m] = val;
        }
        ++used;
        if (ech.add_row(std::move(row)))
            stagnant = 0;
        else
            ++stagnant;
        if (ech.rows.size() == basis.size()) break;  // full rank, kernel is zero
        if (stagnant >= 60) break;  // rank saturated
    }
    rep.samples = used;
    rep.rank = ech.rows.size();
    rep.dim_upper_bound = basis.size() - rep.rank;
    return rep;
}

}  // namespace tenslab
