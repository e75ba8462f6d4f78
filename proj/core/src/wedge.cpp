#include "tenslab/wedge.hpp"

#include <algorithm>
#include <stdexcept>

#include "tenslab/matrix.hpp"

namespace tenslab {

void CurveFamily::validate() const {
    for (const auto& c : curves) {
        if (c.factors.size() != shape.size())
            throw std::invalid_argument("curve mode count mismatch");
        for (std::size_t m = 0; m < shape.size(); ++m) {
            if (c.factors[m].size() != static_cast<std::size_t>(shape[m]))
                throw std::invalid_argument("curve factor length mismatch");
            for (const auto& x : c.factors[m])
                if (!x.is_zero() && x.order() < 0)
                    throw std::invalid_argument("curve factors must be polynomial in t");
        }
        // Nonzero at t = 0: every factor has a nonzero constant part.
        bool nonzero_at_0 = true;
        for (std::size_t m = 0; m < shape.size(); ++m) {
            bool f_nz = false;
            for (const auto& x : c.factors[m]) f_nz = f_nz || x.coeff(0) != 0;
            nonzero_at_0 = nonzero_at_0 && f_nz;
        }
        if (!nonzero_at_0)
            throw std::invalid_argument("curve vanishes at t = 0");
    }
}

CurveFamily CurveFamily::from_decomposition(const Decomposition& d) {
    CurveFamily f;
    f.shape = d.shape;
    f.curves = d.terms;
    f.validate();
    return f;
}

TensorCurve expand_curve(const std::vector<int>& shape, const RankOneTerm& term) {
    // Degree of the product is the sum of factor degrees.
    int total_deg = 0;
    for (const auto& f : term.factors) {
        int fd = 0;
        for (const auto& x : f)
            if (!x.is_zero()) fd = std::max(fd, x.coeffs().rbegin()->first);
        total_deg += fd;
    }

    EpsTensor prod = outer_eps(term.factors);
    TensorCurve out;
    for (int deg = 0; deg <= total_deg; ++deg) {
        Tensor coeff(shape);
        for (std::size_t i = 0; i < prod.size(); ++i) coeff[i] = prod[i].coeff(deg);
        out.push_back(std::move(coeff));
    }
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

namespace {

// Gathers every coefficient vector, reduces to a basis of the working
// subspace U, and rewrites the curves in U-coordinates.
struct Workspace {
    std::vector<std::vector<Rat>> basis;                 // ambient vectors
    std::vector<std::vector<std::vector<Rat>>> curves_u; // [curve][deg][u-coord]
};

std::vector<Rat> coords_in_basis(const std::vector<std::vector<Rat>>& basis,
                                 const std::vector<Rat>& v) {
    // Solve basis^T x = v by augmented elimination.
    const std::size_t n = basis.size();
    const std::size_t amb = v.size();
    std::vector<std::vector<Rat>> m(amb, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < amb; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = basis[j][i];
        m[i][n] = v[i];
    }
    std::size_t row = 0;
    std::vector<int> pivot_col(n, -1);
    for (std::size_t col = 0; col < n && row < amb; ++col) {
        std::size_t piv = row;
        while (piv < amb && m[piv][col] == 0) ++piv;
        if (piv == amb) continue;
        std::swap(m[row], m[piv]);
        const Rat inv = Rat(1) / m[row][col];
        for (std::size_t j = col; j <= n; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < amb; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rat f = m[i][col];
            for (std::size_t j = col; j <= n; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col[col] = static_cast<int>(row);
        ++row;
    }
    std::vector<Rat> x(n, Rat(0));
    for (std::size_t col = 0; col < n; ++col)
        if (pivot_col[col] >= 0) x[col] = m[pivot_col[col]][n];
    // Consistency: residual must vanish (v must lie in span(basis)).
    for (std::size_t i = row; i < amb; ++i)
        if (m[i][n] != 0) throw std::logic_error("vector outside working subspace");
    return x;
}

Workspace build_workspace(const std::vector<std::vector<std::vector<Rat>>>& curves) {
    Workspace w;
    std::vector<std::vector<Rat>> all;
    for (const auto& c : curves)
        for (const auto& v : c) all.push_back(v);

    // Greedy basis: keep vectors that grow the span.
    for (const auto& v : all) {
        auto trial = w.basis;
        trial.push_back(v);
        if (span_rank(trial) > w.basis.size()) w.basis.push_back(v);
    }
    for (const auto& c : curves) {
        std::vector<std::vector<Rat>> cu;
        for (const auto& v : c) cu.push_back(coords_in_basis(w.basis, v));
        w.curves_u.push_back(std::move(cu));
    }
    return w;
}

int subset_sign_insert(const std::vector<int>& sorted, int value) {
    // Sign of inserting `value` into the sorted list (count of larger-first).
    int before = 0;
    for (int x : sorted)
        if (x < value) ++before;
    return before % 2 == 0 ? 1 : -1;
}

}  // namespace

std::vector<Rat> MultiVector::dense(std::size_t ambient_dim) const {
    // Index sorted r-subsets of the ambient by colex rank.
    std::vector<std::vector<int>> subs;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == r) {
            subs.push_back(cur);
            return;
        }
        for (int i = start; i < static_cast<int>(ambient_dim); ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);

    std::vector<Rat> out(subs.size(), Rat(0));
    for (const auto& [uset, coeff] : coords) {
        // Expand the wedge of the chosen basis vectors into ambient minors.
        std::vector<std::vector<Rat>> rows;
        for (int bi : uset) rows.push_back(basis[bi]);
        for (std::size_t s = 0; s < subs.size(); ++s) {
            RatMatrix m(r, r);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) m(i, j) = rows[i][subs[s][j]];
            const Rat d = m.determinant();
            if (d != 0) out[s] += coeff * d;
        }
    }
    return out;
}

MultiVector wedge_taylor_raw(const std::vector<std::vector<std::vector<Rat>>>& curves,
                             int k) {
    if (curves.empty()) throw std::invalid_argument("empty curve family");
    const int r = static_cast<int>(curves.size());
    Workspace w = build_workspace(curves);
    const int u = static_cast<int>(w.basis.size());

    MultiVector out;
    out.r = r;
    out.basis = w.basis;
    if (u < r) return out;  // wedge of dependent vectors only: identically zero

    // Enumerate degree tuples k_1 + ... + k_r = k.
    std::vector<int> tuple(r, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == r - 1) {
            tuple[pos] = left;
            if (left >= static_cast<int>(w.curves_u[pos].size())) return;
            // Wedge the selected coefficient vectors: r x r minors over U.
            std::vector<const std::vector<Rat>*> vecs(r);
            for (int i = 0; i < r; ++i) vecs[i] = &w.curves_u[i][tuple[i]];
            std::vector<int> sel(r);
            auto subs = [&](auto&& self2, int start, int depth) -> void {
                if (depth == r) {
                    RatMatrix m(r, r);
                    for (int i = 0; i < r; ++i)
                        for (int j = 0; j < r; ++j) m(i, j) = (*vecs[i])[sel[j]];
                    const Rat d = m.determinant();
                    if (d != 0) {
                        std::vector<int> key(sel.begin(), sel.end());
                        auto it = out.coords.find(key);
                        if (it == out.coords.end())
                            out.coords[key] = d;
                        else {
                            it->second += d;
                            if (it->second == 0) out.coords.erase(it);
                        }
                    }
                    return;
                }
                for (int i = start; i < u; ++i) {
                    sel[depth] = i;
                    self2(self2, i + 1, depth + 1);
                }
            };
            subs(subs, 0, 0);
            return;
        }
        const int cap = std::min<int>(left, static_cast<int>(w.curves_u[pos].size()) - 1);
        for (int d = 0; d <= cap; ++d) {
            tuple[pos] = d;
            self(self, pos + 1, left - d);
        }
    };
    rec(rec, 0, k);
    return out;
}

MultiVector wedge_taylor(const CurveFamily& f, int k) {
    f.validate();
    std::vector<std::vector<std::vector<Rat>>> raw;
    for (const auto& c : f.curves) {
        TensorCurve tc = expand_curve(f.shape, c);
        std::vector<std::vector<Rat>> vecs;
        for (const auto& t : tc) {
            std::vector<Rat> v(t.size());
            for (std::size_t i = 0; i < t.size(); ++i) v[i] = t[i];
            vecs.push_back(std::move(v));
        }
        raw.push_back(std::move(vecs));
    }
    return wedge_taylor_raw(raw, k);
}

LimitPlane limit_plane(const CurveFamily& f) {
    f.validate();
    std::vector<std::vector<std::vector<Rat>>> raw;
    int max_total_deg = 0;
    for (const auto& c : f.curves) {
        TensorCurve tc = expand_curve(f.shape, c);
        max_total_deg += static_cast<int>(tc.size()) - 1;
        std::vector<std::vector<Rat>> vecs;
        for (const auto& t : tc) {
            std::vector<Rat> v(t.size());
            for (std::size_t i = 0; i < t.size(); ++i) v[i] = t[i];
            vecs.push_back(std::move(v));
        }
        raw.push_back(std::move(vecs));
    }

    const int r = static_cast<int>(raw.size());
    for (int k = 0; k <= max_total_deg; ++k) {
        MultiVector w = wedge_taylor_raw(raw, k);
        if (w.is_zero()) continue;

        // Contraction-map test: the span of all (r-1)-fold contractions of a
        // nonzero r-vector has dimension exactly r iff it is decomposable,
        // and then equals the plane itself.
        const int u = static_cast<int>(w.basis.size());
        std::vector<std::vector<Rat>> contractions;
        std::vector<int> jset;
        auto rec = [&](auto&& self, int start) -> void {
            if (static_cast<int>(jset.size()) == r - 1) {
                std::vector<Rat> vec(u, Rat(0));
                bool nz = false;
                for (int i = 0; i < u; ++i) {
                    if (std::binary_search(jset.begin(), jset.end(), i)) continue;
                    std::vector<int> key = jset;
                    key.insert(std::lower_bound(key.begin(), key.end(), i), i);
                    auto it = w.coords.find(key);
                    if (it == w.coords.end()) continue;
                    const int sg = subset_sign_insert(jset, i);
                    vec[i] = sg * it->second;
                    nz = nz || vec[i] != 0;
                }
                if (nz) contractions.push_back(std::move(vec));
                return;
            }
            for (int i = start; i < u; ++i) {
                jset.push_back(i);
                self(self, i + 1);
                jset.pop_back();
            }
        };
        rec(rec, 0);

        const std::size_t dim = span_rank(contractions);
        if (dim != static_cast<std::size_t>(r))
            throw std::logic_error(
                "lowest wedge coefficient is not decomposable; a curve left the variety");

        // Reduce to r independent contraction vectors and map back to the
        // ambient space.
        std::vector<std::vector<Rat>> u_rows;
        for (const auto& c : contractions) {
            auto trial = u_rows;
            trial.push_back(c);
            if (span_rank(trial) > u_rows.size()) u_rows.push_back(c);
            if (u_rows.size() == static_cast<std::size_t>(r)) break;
        }
        LimitPlane plane;
        plane.order = k;
        for (const auto& row : u_rows) {
            std::vector<Rat> amb(w.basis.empty() ? 0 : w.basis[0].size(), Rat(0));
            for (int i = 0; i < u; ++i) {
                if (row[i] == 0) continue;
                for (std::size_t j = 0; j < amb.size(); ++j)
                    amb[j] += row[i] * w.basis[i][j];
            }
            plane.basis.push_back(std::move(amb));
        }
        return plane;
    }
    throw std::invalid_argument("wedge of the family is identically zero");
}

bool plane_contains(const LimitPlane& plane, const Tensor& t) {
    std::vector<Rat> v(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) v[i] = t[i];
    return in_span(plane.basis, v);
}

}  // namespace tenslab
