#include "tenslab/reptheory.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace tenslab {

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

int partition_size(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

std::vector<Partition> partitions_of(int d) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int left, int max_part) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(left, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, left - part, part);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

std::string partition_str(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i)
        s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

namespace {

std::vector<int> beta_numbers(const Partition& pi) {
    const int l = static_cast<int>(pi.size());
    std::vector<int> beta(l);
    for (int i = 0; i < l; ++i) beta[i] = pi[i] + (l - 1 - i);
    return beta;
}

// Border strips via beta-numbers: removing a strip of size t is beta_j ->
// beta_j - t with the landing value free; the height is the number of beta
// values jumped over.
long long mn_eval(const std::vector<int>& beta_in, const std::vector<int>& mu,
                  std::size_t mu_pos,
                  std::map<std::pair<std::vector<int>, std::size_t>, long long>& memo) {
    if (mu_pos == mu.size()) return 1;
    auto key = std::make_pair(beta_in, mu_pos);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const int t = mu[mu_pos];
    long long total = 0;
    for (std::size_t j = 0; j < beta_in.size(); ++j) {
        const int target = beta_in[j] - t;
        if (target < 0) continue;
        if (std::find(beta_in.begin(), beta_in.end(), target) != beta_in.end())
            continue;
        int height = 0;
        for (int b : beta_in)
            if (b > target && b < beta_in[j]) ++height;
        std::vector<int> next = beta_in;
        next[j] = target;
        std::sort(next.begin(), next.end(), std::greater<int>());
        const long long sub = mn_eval(next, mu, mu_pos + 1, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

}  // namespace

namespace {

// Full character table per degree, built once behind a lock; lookups after
// that are read-only and parallel-safe.
const std::map<std::pair<Partition, Partition>, long long>& character_table(int d) {
    static std::mutex lock;
    static std::map<int, std::map<std::pair<Partition, Partition>, long long>> tables;
    std::lock_guard<std::mutex> guard(lock);
    auto it = tables.find(d);
    if (it != tables.end()) return it->second;
    auto& table = tables[d];
    const auto parts = partitions_of(d);
    for (const auto& pi : parts)
        for (const auto& mu : parts) {
            // memo key is (beta set, position in mu), so it is per-pair
            std::map<std::pair<std::vector<int>, std::size_t>, long long> memo;
            table[{pi, mu}] = mn_eval(beta_numbers(pi), mu, 0, memo);
        }
    return table;
}

}  // namespace

long long mn_character(const Partition& pi, const Partition& mu) {
    if (!is_partition(pi) || !is_partition(mu))
        throw std::invalid_argument("not a partition");
    if (partition_size(pi) != partition_size(mu))
        throw std::invalid_argument("character needs |pi| = |mu|");
    if (pi.empty()) return 1;
    const int d = partition_size(pi);
    if (d <= 12) return character_table(d).at({pi, mu});
    std::map<std::pair<std::vector<int>, std::size_t>, long long> memo;
    return mn_eval(beta_numbers(pi), mu, 0, memo);
}

Int conjugacy_class_size(const Partition& mu) {
    const int d = partition_size(mu);
    Int z = 1;
    std::map<int, int> mult;
    for (int part : mu) ++mult[part];
    for (const auto& [part, m] : mult) {
        for (int i = 0; i < m; ++i) z *= part;
        z *= factorial(m);
    }
    return factorial(d) / z;
}

long invariant_mult(const std::vector<Partition>& labels) {
    if (labels.empty()) throw std::invalid_argument("need at least one label");
    const int d = partition_size(labels[0]);
    for (const auto& p : labels)
        if (partition_size(p) != d)
            throw std::invalid_argument("labels must partition a common d");
    if (d > 12) throw std::invalid_argument("invariant_mult budget is d <= 12");

    Int acc = 0;
    for (const auto& mu : partitions_of(d)) {
        Int prod = conjugacy_class_size(mu);
        for (const auto& p : labels) prod *= Int(static_cast<long>(mn_character(p, mu)));
        acc += prod;
    }
    const Int dfact = factorial(d);
    if (acc % dfact != 0)
        throw std::logic_error("invariant multiplicity is not an integer");
    Int q = acc / dfact;
    return q.get_si();
}

Int schur_dim(const Partition& pi, int a) {
    if (!is_partition(pi)) throw std::invalid_argument("not a partition");
    if (static_cast<int>(pi.size()) > a) return 0;
    // prod over cells (i,j) of (a + j - i) / hook(i,j), 0-based i,j.
    Rat val = 1;
    const int l = static_cast<int>(pi.size());
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < pi[i]; ++j) {
            int arm = pi[i] - j - 1;
            int leg = 0;
            for (int r = i + 1; r < l; ++r)
                if (pi[r] > j) ++leg;
            val *= Rat(a + j - i) / Rat(arm + leg + 1);
        }
    if (val.get_den() != 1) throw std::logic_error("hook-content not integral");
    return val.get_num();
}

std::vector<ModuleLabel> decompose_symd(const std::vector<int>& shape, int d) {
    if (d > 8 || shape.size() > 4)
        throw std::invalid_argument("decompose budget: d <= 8 and <= 4 factors");
    for (int a : shape)
        if (a > 4) throw std::invalid_argument("decompose budget: dims <= 4");

    const auto parts = partitions_of(d);
    std::vector<std::vector<Partition>> admissible(shape.size());
    for (std::size_t m = 0; m < shape.size(); ++m)
        for (const auto& p : parts)
            if (static_cast<int>(p.size()) <= shape[m]) admissible[m].push_back(p);

    std::vector<ModuleLabel> out;
    Int total = 0;
    std::vector<Partition> tuple(shape.size());
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == shape.size()) {
            const long mult = invariant_mult(tuple);
            if (mult <= 0) return;
            ModuleLabel lbl;
            lbl.parts = tuple;
            lbl.multiplicity = mult;
            lbl.dimension = mult;
            for (std::size_t m = 0; m < shape.size(); ++m)
                lbl.dimension *= schur_dim(tuple[m], shape[m]);
            total += lbl.dimension;
            out.push_back(std::move(lbl));
            return;
        }
        for (const auto& p : admissible[pos]) {
            tuple[pos] = p;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);

    long prod = 1;
    for (int a : shape) prod *= a;
    const Int expect = binomial(prod + d - 1, d);
    if (total != expect)
        throw std::logic_error("decompose_symd dimension identity failed: got " +
                               total.get_str() + ", expected " + expect.get_str());
    return out;
}

namespace {

void permutations_of(const std::vector<int>& positions,
                     std::vector<std::vector<int>>& perms) {
    std::vector<int> p = positions;
    std::sort(p.begin(), p.end());
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

// Applies the place permutation sending slot positions[i] -> target[i].
Tensor permute_slots(const Tensor& t, const std::vector<int>& positions,
                     const std::vector<int>& target) {
    Tensor out(t.shape());
    for (std::size_t lin = 0; lin < t.size(); ++lin) {
        if (t[lin] == 0) continue;
        auto idx = t.multi_index(lin);
        auto dst = idx;
        for (std::size_t i = 0; i < positions.size(); ++i)
            dst[target[i]] = idx[positions[i]];
        out.at(dst) += t[lin];
    }
    return out;
}

int perm_sign(const std::vector<int>& base, const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            const auto pi = std::find(base.begin(), base.end(), perm[i]) - base.begin();
            const auto pj = std::find(base.begin(), base.end(), perm[j]) - base.begin();
            if (pi > pj) ++inv;
        }
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

Tensor young_symmetrize(const Partition& pi, const Tensor& t) {
    if (!is_partition(pi)) throw std::invalid_argument("not a partition");
    const int d = partition_size(pi);
    if (static_cast<int>(t.order()) != d)
        throw std::invalid_argument("tensor order must equal |pi|");

    // Canonical tableau: rows filled 0,1,2,... left to right.
    std::vector<std::vector<int>> rows, cols;
    int next = 0;
    for (int part : pi) {
        std::vector<int> row;
        for (int j = 0; j < part; ++j) row.push_back(next++);
        rows.push_back(std::move(row));
    }
    for (int j = 0; j < pi[0]; ++j) {
        std::vector<int> col;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (j < static_cast<int>(rows[i].size())) col.push_back(rows[i][j]);
        cols.push_back(std::move(col));
    }

    // Row symmetrization.
    Tensor acc = t;
    for (const auto& row : rows) {
        if (row.size() < 2) continue;
        std::vector<std::vector<int>> perms;
        permutations_of(row, perms);
        Tensor next_acc(t.shape());
        for (const auto& perm : perms) next_acc += permute_slots(acc, row, perm);
        acc = std::move(next_acc);
    }
    // Column antisymmetrization.
    for (const auto& col : cols) {
        if (col.size() < 2) continue;
        std::vector<std::vector<int>> perms;
        permutations_of(col, perms);
        Tensor next_acc(t.shape());
        for (const auto& perm : perms) {
            Tensor moved = permute_slots(acc, col, perm);
            if (perm_sign(col, perm) < 0)
                next_acc -= moved;
            else
                next_acc += moved;
        }
        acc = std::move(next_acc);
    }
    return acc;
}

Tensor raising_operator(const Tensor& t, int from, int to) {
    Tensor out(t.shape());
    for (std::size_t lin = 0; lin < t.size(); ++lin) {
        if (t[lin] == 0) continue;
        auto idx = t.multi_index(lin);
        for (std::size_t slot = 0; slot < idx.size(); ++slot) {
            if (idx[slot] != from) continue;
            auto dst = idx;
            dst[slot] = to;
            out.at(dst) += t[lin];
        }
    }
    return out;
}

PolySpace prolong(const PolySpace& a, int p) {
    if (p < 1) throw std::invalid_argument("prolongation needs p >= 1");
    const int n = a.num_vars, k = a.degree;
    MonomialBasis low(n, k), high(n, k + p);

    PolySpace out;
    out.degree = k + p;
    out.num_vars = n;
    if (a.basis.empty()) return out;

    // Functionals cutting out A inside S^k: kernel of the basis matrix.
    RatMatrix bm(a.basis.size(), low.size());
    for (std::size_t i = 0; i < a.basis.size(); ++i)
        for (std::size_t j = 0; j < low.size(); ++j) bm(i, j) = a.basis[i][j];
    const auto complement = bm.kernel();  // covectors vanishing on A

    // Enumerate all order-p derivative operators as compositions of single
    // derivatives; D_beta maps S^{k+p} -> S^k.
    std::vector<std::vector<int>> betas;
    {
        MonomialBasis bb(n, p);
        for (std::size_t i = 0; i < bb.size(); ++i) betas.push_back(bb.exponent(i));
    }

    std::vector<std::vector<Rat>> constraint_rows;
    for (const auto& beta : betas) {
        // Matrix of D_beta in monomial coordinates.
        for (const auto& functional : complement) {
            std::vector<Rat> row(high.size(), Rat(0));
            for (std::size_t hi = 0; hi < high.size(); ++hi) {
                auto e = high.exponent(hi);
                Rat scale = 1;
                bool ok = true;
                for (int v = 0; v < n && ok; ++v) {
                    for (int rep = 0; rep < beta[v]; ++rep) {
                        if (e[v] == 0) {
                            ok = false;
                            break;
                        }
                        scale *= e[v];
                        e[v] -= 1;
                    }
                }
                if (!ok) continue;
                row[hi] = scale * functional[low.index(e)];
            }
            constraint_rows.push_back(std::move(row));
        }
    }
    if (constraint_rows.empty()) {
        // A is everything: the prolongation is all of S^{k+p}.
        for (std::size_t i = 0; i < high.size(); ++i) {
            std::vector<Rat> v(high.size(), Rat(0));
            v[i] = 1;
            out.basis.push_back(std::move(v));
        }
        return out;
    }
    RatMatrix cm(constraint_rows.size(), high.size());
    for (std::size_t i = 0; i < constraint_rows.size(); ++i)
        for (std::size_t j = 0; j < high.size(); ++j) cm(i, j) = constraint_rows[i][j];
    out.basis = cm.kernel();
    return out;
}

Int cubics_on_secant2_formula(const std::vector<int>& dims) {
    const int k = static_cast<int>(dims.size());
    const Partition p3 = {3}, p21 = {2, 1}, p111 = {1, 1, 1};

    Int total = 0;
    // Assign one of (3), (21), (111) to each factor; the coefficient depends
    // only on the counts of (21) and (111) labels.
    std::vector<int> assign(k, 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == k) {
            int j = 0, l = 0;
            for (int x : assign) {
                if (x == 1) ++j;
                if (x == 2) ++l;
            }
            Int coeff = 0;
            const Int base = (Int(1) << (j > 0 ? j - 1 : 0)) -
                             ((j - 1) % 2 == 0 ? Int(1) : Int(-1));
            if (j > 1 && l > 0)
                coeff = base / 3;
            else if (j > 3 && l == 0)
                coeff = base / 3 - 1;
            else if (j == 0 && l > 0 && l % 2 == 0)
                coeff = 1;
            if (coeff == 0) return;
            Int dim = coeff;
            for (int m = 0; m < k; ++m) {
                const Partition& pi = assign[m] == 0 ? p3 : assign[m] == 1 ? p21 : p111;
                dim *= schur_dim(pi, dims[m]);
            }
            total += dim;
            return;
        }
        for (int x = 0; x < 3; ++x) {
            assign[pos] = x;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return total;
}

}  // namespace tenslab
