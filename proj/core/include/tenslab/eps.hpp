#pragma once

#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "tenslab/rational.hpp"

namespace tenslab {

struct DivergentLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Laurent polynomial in a single global deformation parameter.
// Coefficients are exact rationals; zero coefficients are never stored.
class EpsScalar {
public:
    EpsScalar() = default;
    EpsScalar(const Rat& c) {  // implicit: rationals embed at degree 0
        if (c != 0) coeff_[0] = c;
    }
    EpsScalar(long c) : EpsScalar(Rat(c)) {}

    static EpsScalar eps_power(int degree, const Rat& c = 1) {
        EpsScalar e;
        if (c != 0) e.coeff_[degree] = c;
        return e;
    }

    const std::map<int, Rat>& coeffs() const { return coeff_; }
    bool is_zero() const { return coeff_.empty(); }
    bool is_scalar() const {
        return coeff_.empty() || (coeff_.size() == 1 && coeff_.begin()->first == 0);
    }

    // Lowest exponent present; INT_MAX for the zero element.
    int order() const {
        return coeff_.empty() ? std::numeric_limits<int>::max()
                              : coeff_.begin()->first;
    }

    Rat coeff(int degree) const {
        auto it = coeff_.find(degree);
        return it == coeff_.end() ? Rat(0) : it->second;
    }

    // Degree-0 coefficient; throws if a negative power survives.
    Rat limit0() const {
        if (!coeff_.empty() && coeff_.begin()->first < 0)
            throw DivergentLimit("eps -> 0 limit diverges (order " +
                                 std::to_string(coeff_.begin()->first) + ")");
        return coeff(0);
    }

    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (const auto& [d, c] : coeff_) acc += c * rat_pow(x, d);
        return acc;
    }

    EpsScalar& operator+=(const EpsScalar& o) {
        for (const auto& [d, c] : o.coeff_) add_term(d, c);
        return *this;
    }
    EpsScalar& operator-=(const EpsScalar& o) {
        for (const auto& [d, c] : o.coeff_) add_term(d, -c);
        return *this;
    }

    friend EpsScalar operator+(EpsScalar a, const EpsScalar& b) { return a += b; }
    friend EpsScalar operator-(EpsScalar a, const EpsScalar& b) { return a -= b; }
    friend EpsScalar operator-(const EpsScalar& a) {
        EpsScalar r;
        for (const auto& [d, c] : a.coeff_) r.coeff_[d] = -c;
        return r;
    }
    friend EpsScalar operator*(const EpsScalar& a, const EpsScalar& b) {
        EpsScalar r;
        for (const auto& [da, ca] : a.coeff_)
            for (const auto& [db, cb] : b.coeff_) r.add_term(da + db, ca * cb);
        return r;
    }
    EpsScalar& operator*=(const EpsScalar& o) { return *this = *this * o; }

    friend bool operator==(const EpsScalar& a, const EpsScalar& b) {
        return a.coeff_ == b.coeff_;
    }
    friend bool operator!=(const EpsScalar& a, const EpsScalar& b) {
        return !(a == b);
    }

    std::string str() const {
        if (coeff_.empty()) return "0";
        std::string s;
        for (const auto& [d, c] : coeff_) {
            if (!s.empty()) s += " + ";
            s += rat_str(c);
            if (d != 0) s += "*e^" + std::to_string(d);
        }
        return s;
    }

private:
    void add_term(int d, const Rat& c) {
        auto it = coeff_.find(d);
        if (it == coeff_.end()) {
            if (c != 0) coeff_[d] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeff_.erase(it);
        }
    }

    std::map<int, Rat> coeff_;
};

}  // namespace tenslab
