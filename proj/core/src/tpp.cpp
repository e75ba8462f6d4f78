#include "tenslab/tpp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <stdexcept>

namespace tenslab {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::string name)
    : table_(std::move(table)), name_(std::move(name)) {
    const int n = static_cast<int>(table_.size());
    if (n == 0) throw std::invalid_argument("empty Cayley table");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("Cayley table is not square");
        for (int x : row)
            if (x < 0 || x >= n) throw std::invalid_argument("Cayley entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (table_[0][a] != a || table_[a][0] != a)
            throw std::invalid_argument("element 0 is not an identity");
    // Latin-square rows/columns give inverses and cancellation.
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int b = 0; b < n; ++b) {
            if (seen_row[table_[a][b]] || seen_col[table_[b][a]])
                throw std::invalid_argument("Cayley table is not a Latin square");
            seen_row[table_[a][b]] = true;
            seen_col[table_[b][a]] = true;
            if (table_[a][b] == 0) inv_[a] = b;
        }
        if (inv_[a] < 0) throw std::invalid_argument("missing inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw std::invalid_argument("Cayley table is not associative");
}

bool FiniteGroup::is_abelian() const {
    const int n = order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

FiniteGroup FiniteGroup::cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t), "Z" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(int n) {
    // Elements: r^i (0..n-1) then s r^i (n..2n-1).
    const int m = 2 * n;
    auto enc = [&](int flip, int rot) { return flip * n + ((rot % n) + n) % n; };
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int f1 = 0; f1 < 2; ++f1)
        for (int r1 = 0; r1 < n; ++r1)
            for (int f2 = 0; f2 < 2; ++f2)
                for (int r2 = 0; r2 < n; ++r2) {
                    // (s^f1 r^r1)(s^f2 r^r2) = s^(f1+f2) r^(r2 + r1 * (-1)^f2)
                    const int rot = f2 ? r2 - r1 : r1 + r2;
                    t[enc(f1, r1)][enc(f2, r2)] = enc((f1 + f2) % 2, rot);
                }
    return FiniteGroup(std::move(t), "D" + std::to_string(n));
}

namespace {

// Group from generator permutations acting on points; elements are the
// closure, identity first.
FiniteGroup from_permutations(const std::vector<std::vector<int>>& gens,
                              const std::string& name) {
    const int pts = static_cast<int>(gens.at(0).size());
    std::vector<int> id(pts);
    for (int i = 0; i < pts; ++i) id[i] = i;

    std::vector<std::vector<int>> elems = {id};
    std::set<std::vector<int>> seen = {id};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : gens) {
            std::vector<int> prod(pts);
            for (int i = 0; i < pts; ++i) prod[i] = g[elems[head][i]];
            if (seen.insert(prod).second) elems.push_back(prod);
        }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> prod(pts);
            for (int i = 0; i < pts; ++i) prod[i] = elems[a][elems[b][i]];
            t[a][b] = static_cast<int>(
                std::find(elems.begin(), elems.end(), prod) - elems.begin());
        }
    return FiniteGroup(std::move(t), name);
}

}  // namespace

FiniteGroup FiniteGroup::quaternion8() {
    // i, j as permutations of {1,i,-1,-i,j,k,-j,-k} ordered
    // 1,i,-1,-i,j,k,-j,-k (left multiplication).
    std::vector<int> mi = {1, 2, 3, 0, 5, 6, 7, 4};  // left-multiply by i
    std::vector<int> mj = {4, 7, 6, 5, 2, 1, 0, 3};  // left-multiply by j
    return from_permutations({mi, mj}, "Q8");
}

FiniteGroup FiniteGroup::dicyclic12() {
    // <a,b | a^6 = 1, b^2 = a^3, b a b^-1 = a^-1> acting on 12 elements
    // a^i b^j (i mod 6, j mod 2) by left multiplication.
    auto enc = [](int i, int j) { return (j % 2) * 6 + ((i % 6) + 6) % 6; };
    std::vector<int> ma(12), mb(12);
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 6; ++i) {
            ma[enc(i, j)] = enc(i + 1, j);
            // b * a^i b^j = a^{-i} b^{j+1}, and b^2 = a^3
            mb[enc(i, j)] = j == 0 ? enc(-i, 1) : enc(-i + 3, 0);
        }
    return from_permutations({ma, mb}, "Dic3");
}

FiniteGroup FiniteGroup::alternating4() {
    std::vector<int> g1 = {1, 2, 0, 3};  // (0 1 2)
    std::vector<int> g2 = {1, 0, 3, 2};  // (0 1)(2 3)
    return from_permutations({g1, g2}, "A4");
}

FiniteGroup FiniteGroup::product(const FiniteGroup& g, const FiniteGroup& h) {
    const int n = g.order() * h.order();
    auto enc = [&](int a, int b) { return a * h.order() + b; };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a1 = 0; a1 < g.order(); ++a1)
        for (int b1 = 0; b1 < h.order(); ++b1)
            for (int a2 = 0; a2 < g.order(); ++a2)
                for (int b2 = 0; b2 < h.order(); ++b2)
                    t[enc(a1, b1)][enc(a2, b2)] = enc(g.mul(a1, a2), h.mul(b1, b2));
    return FiniteGroup(std::move(t), g.name() + "x" + h.name());
}

std::vector<FiniteGroup> FiniteGroup::all_up_to_order_12() {
    std::vector<FiniteGroup> gs;
    for (int n = 1; n <= 12; ++n) gs.push_back(cyclic(n));
    gs.push_back(product(cyclic(2), cyclic(2)));
    gs.push_back(product(cyclic(2), cyclic(4)));
    gs.push_back(product(cyclic(2), product(cyclic(2), cyclic(2))));
    gs.push_back(product(cyclic(2), cyclic(6)));
    gs.push_back(product(cyclic(3), cyclic(3)));
    gs.push_back(dihedral(3));
    gs.push_back(dihedral(4));
    gs.push_back(dihedral(5));
    gs.push_back(dihedral(6));
    gs.push_back(quaternion8());
    gs.push_back(dicyclic12());
    gs.push_back(alternating4());
    return gs;
}

namespace {

std::vector<int> quotient_set(const FiniteGroup& g, const std::vector<int>& s) {
    std::set<int> q;
    for (int a : s)
        for (int b : s) q.insert(g.mul(g.inverse(a), b));
    return {q.begin(), q.end()};
}

}  // namespace

bool tpp_check(const TPPInstance& inst) {
    const auto& g = inst.group;
    for (const auto* s : {&inst.s1, &inst.s2, &inst.s3}) {
        if (s->empty()) throw std::invalid_argument("TPP subsets must be nonempty");
        for (int x : *s)
            if (x < 0 || x >= g.order())
                throw std::invalid_argument("subset element out of range");
    }
    const auto q1 = quotient_set(g, inst.s1);
    const auto q2 = quotient_set(g, inst.s2);
    const auto q3 = quotient_set(g, inst.s3);
    for (int a : q1)
        for (int b : q2)
            for (int c : q3)
                if (g.mul(g.mul(a, b), c) == 0 && !(a == 0 && b == 0 && c == 0))
                    return false;
    return true;
}

std::optional<double> tpp_omega_bound(const TPPInstance& inst) {
    if (!tpp_check(inst))
        throw std::invalid_argument("triple product property does not hold");
    std::vector<int> degrees = inst.character_degrees;
    if (degrees.empty()) {
        if (!inst.group.is_abelian())
            throw std::invalid_argument(
                "character degrees required for a non-abelian group");
        degrees.assign(inst.group.order(), 1);
    }
    const double d = *std::max_element(degrees.begin(), degrees.end());
    const double nmp = static_cast<double>(inst.s1.size()) * inst.s2.size() * inst.s3.size();
    const double L = std::log(nmp) / 3.0;
    const double D = std::log(d);
    const double G = std::log(static_cast<double>(inst.group.order()));

    // Constraint F(w) = w L - (w-2) D - G <= 0. When F is increasing the
    // feasible set is [2, w*], certifying omega <= w*; otherwise the
    // inequality binds nothing.
    if (L <= D) return std::nullopt;
    const double w_star = (G - 2 * D) / (L - D);
    return std::max(2.0, w_star);
}

std::optional<std::array<std::vector<int>, 3>> tpp_search(const FiniteGroup& g,
                                                          int n1, int n2, int n3) {
    const int n = g.order();
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    auto gen = [&](auto&& self, int start, int k) -> void {
        if (static_cast<int>(cur.size()) == k) {
            subsets.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1, k);
            cur.pop_back();
        }
    };

    std::array<std::vector<std::vector<int>>, 3> cands;
    for (int i = 0; i < 3; ++i) {
        subsets.clear();
        gen(gen, 0, i == 0 ? n1 : i == 1 ? n2 : n3);
        cands[i] = subsets;
    }
    for (const auto& s1 : cands[0])
        for (const auto& s2 : cands[1])
            for (const auto& s3 : cands[2]) {
                TPPInstance inst{g, s1, s2, s3, {}};
                if (tpp_check(inst)) return std::array<std::vector<int>, 3>{s1, s2, s3};
            }
    return std::nullopt;
}

}  // namespace tenslab
