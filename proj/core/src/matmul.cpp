#include "tenslab/matmul.hpp"

namespace tenslab {
namespace detail {

RecursiveBase make_base(const Decomposition& d) {
    if (d.shape.size() != 3 || d.shape[0] != d.shape[1] || d.shape[1] != d.shape[2])
        throw std::invalid_argument("base must have shape (q^2, q^2, q^2)");
    int q = 1;
    while (q * q < d.shape[0]) ++q;
    if (q * q != d.shape[0])
        throw std::invalid_argument("base mode dimension is not a square");
    if (!d.eps_free())
        throw std::invalid_argument("base must be an exact computation");
    if (!verify_exact(d, matmul_tensor(q, q, q)))
        throw std::invalid_argument("base decomposition failed verification against M_" +
                                    std::to_string(q));

    RecursiveBase rb;
    rb.q = q;
    for (const auto& t : d.terms) {
        std::vector<Rat> a(q * q), b(q * q), c(q * q);
        const Rat pre = d.prefactor.coeff(0);
        for (int i = 0; i < q * q; ++i) a[i] = t.factors[0][i].coeff(0);
        for (int i = 0; i < q * q; ++i) b[i] = t.factors[1][i].coeff(0);
        for (int i = 0; i < q * q; ++i) c[i] = pre * t.factors[2][i].coeff(0);
        rb.alpha.push_back(std::move(a));
        rb.beta.push_back(std::move(b));
        rb.gamma.push_back(std::move(c));
    }
    return rb;
}

}  // namespace detail

std::uint64_t mult_count_model(int n, int q, std::uint64_t r_base_terms, int cutoff) {
    int m = pad_to_power(n, q);
    std::uint64_t factor = 1;
    while (m > cutoff && m % q == 0) {
        factor *= r_base_terms;
        m /= q;
    }
    return factor * std::uint64_t(m) * m * m;
}

double exponent_estimate(const std::vector<int>& sizes,
                         const std::vector<std::uint64_t>& counts) {
    if (sizes.size() != counts.size() || sizes.size() < 2)
        throw std::invalid_argument("need at least two size/count pairs");
    const std::size_t n = sizes.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = std::log(static_cast<double>(sizes[i]));
        const double y = std::log(static_cast<double>(counts[i]));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0) throw std::invalid_argument("degenerate size list");
    return (n * sxy - sx * sy) / denom;
}

}  // namespace tenslab
