#include "tenslab/poly.hpp"

#include <stdexcept>

namespace tenslab {

namespace {

void enumerate(int n, int d, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur.push_back(e);
        enumerate(n, d - e, cur, out);
        cur.pop_back();
    }
}

}  // namespace

MonomialBasis::MonomialBasis(int num_vars, int degree) : n_(num_vars), d_(degree) {
    if (n_ < 1 || d_ < 0) throw std::invalid_argument("bad monomial basis");
    std::vector<int> cur;
    enumerate(n_, d_, cur, exponents_);
    for (std::size_t i = 0; i < exponents_.size(); ++i) lookup_[exponents_[i]] = i;
}

std::size_t MonomialBasis::index(const std::vector<int>& e) const {
    auto it = lookup_.find(e);
    if (it == lookup_.end()) throw std::out_of_range("monomial not in basis");
    return it->second;
}

std::vector<Rat> poly_linear_power(const std::vector<Rat>& linear, int d,
                                   const MonomialBasis& basis) {
    if (static_cast<int>(linear.size()) != basis.num_vars() || d != basis.degree())
        throw std::invalid_argument("basis mismatch");
    std::vector<Rat> out(basis.size(), Rat(0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& e = basis.exponent(i);
        // multinomial coefficient d! / prod e_j!
        Int mult = factorial(d);
        Rat val = 1;
        bool zero = false;
        for (int v = 0; v < basis.num_vars(); ++v) {
            mult /= factorial(e[v]);
            if (e[v] > 0) {
                if (linear[v] == 0) {
                    zero = true;
                    break;
                }
                val *= rat_pow(linear[v], e[v]);
            }
        }
        if (!zero) out[i] = Rat(mult) * val;
    }
    return out;
}

std::vector<Rat> poly_mul_var(const std::vector<Rat>& coeffs,
                              const MonomialBasis& from, int var,
                              const MonomialBasis& to) {
    std::vector<Rat> out(to.size(), Rat(0));
    for (std::size_t i = 0; i < from.size(); ++i) {
        if (coeffs[i] == 0) continue;
        auto e = from.exponent(i);
        e[var] += 1;
        out[to.index(e)] += coeffs[i];
    }
    return out;
}

std::vector<Rat> poly_diff(const std::vector<Rat>& coeffs, const MonomialBasis& from,
                           int var, const MonomialBasis& to) {
    std::vector<Rat> out(to.size(), Rat(0));
    for (std::size_t i = 0; i < from.size(); ++i) {
        if (coeffs[i] == 0) continue;
        auto e = from.exponent(i);
        if (e[var] == 0) continue;
        const int pow = e[var];
        e[var] -= 1;
        out[to.index(e)] += coeffs[i] * pow;
    }
    return out;
}

}  // namespace tenslab
