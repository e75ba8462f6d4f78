#include "tenslab/varieties.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tenslab/matrix.hpp"
#include "tenslab/parallel.hpp"
#include "tenslab/poly.hpp"
#include "tenslab/tensor.hpp"

namespace tenslab {

VarietySpec VarietySpec::segre(std::vector<int> dims) {
    if (dims.size() < 2) throw std::invalid_argument("segre needs >= 2 factors");
    for (int d : dims)
        if (d < 2) throw std::invalid_argument("segre mode dims must be >= 2");
    VarietySpec v;
    v.kind = Kind::Segre;
    v.dims = std::move(dims);
    return v;
}

VarietySpec VarietySpec::veronese(int d, int n) {
    if (d < 1 || n < 1) throw std::invalid_argument("bad veronese parameters");
    VarietySpec v;
    v.kind = Kind::Veronese;
    v.d = d;
    v.n = n;
    return v;
}

VarietySpec VarietySpec::grassmann(int k, int n) {
    if (k < 1 || k > n - 1) throw std::invalid_argument("grassmann needs 1 <= k <= n-1");
    VarietySpec v;
    v.kind = Kind::Grassmann;
    v.k = k;
    v.n = n;
    return v;
}

std::optional<VarietySpec> VarietySpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) return std::nullopt;
    const std::string kind = text.substr(0, colon);
    std::vector<int> nums;
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ','))
        try {
            nums.push_back(std::stoi(item));
        } catch (...) {
            return std::nullopt;
        }
    try {
        if (kind == "segre" && nums.size() >= 2) return segre(nums);
        if (kind == "veronese" && nums.size() == 2) return veronese(nums[0], nums[1]);
        if (kind == "grassmann" && nums.size() == 2) return grassmann(nums[0], nums[1]);
    } catch (...) {
        return std::nullopt;
    }
    return std::nullopt;
}

std::size_t VarietySpec::ambient_dim() const {
    switch (kind) {
        case Kind::Segre: {
            std::size_t p = 1;
            for (int d : dims) p *= static_cast<std::size_t>(d);
            return p;
        }
        case Kind::Veronese:
            return binomial(n + d - 1, d).get_ui();
        case Kind::Grassmann:
            return binomial(n, k).get_ui();
    }
    return 0;
}

std::size_t VarietySpec::cone_dim() const {
    switch (kind) {
        case Kind::Segre: {
            std::size_t s = 1;
            for (int d : dims) s += static_cast<std::size_t>(d) - 1;
            return s;
        }
        case Kind::Veronese:
            return static_cast<std::size_t>(n);
        case Kind::Grassmann:
            return 1 + static_cast<std::size_t>(k) * (n - k);
    }
    return 0;
}

std::string VarietySpec::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Segre: {
            os << "segre:";
            for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
            break;
        }
        case Kind::Veronese: os << "veronese:" << d << "," << n; break;
        case Kind::Grassmann: os << "grassmann:" << k << "," << n; break;
    }
    return os.str();
}

namespace {

std::vector<std::vector<int>> sorted_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Plucker coordinates of v_1 ^ ... ^ v_k (k x k minors of the k x n matrix).
std::vector<Rat> plucker(const std::vector<std::vector<Rat>>& vectors, int n) {
    const int k = static_cast<int>(vectors.size());
    const auto subs = sorted_subsets(n, k);
    std::vector<Rat> out(subs.size());
    for (std::size_t s = 0; s < subs.size(); ++s) {
        RatMatrix m(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m(i, j) = vectors[i][subs[s][j]];
        out[s] = m.determinant();
    }
    return out;
}

}  // namespace

std::vector<Rat> point_coords(const VarietySpec& v,
                              const std::vector<std::vector<Rat>>& params) {
    switch (v.kind) {
        case VarietySpec::Kind::Segre: {
            Tensor t = outer(params);
            std::vector<Rat> out(t.size());
            for (std::size_t i = 0; i < t.size(); ++i) out[i] = t[i];
            return out;
        }
        case VarietySpec::Kind::Veronese: {
            MonomialBasis basis(v.n, v.d);
            return poly_linear_power(params.at(0), v.d, basis);
        }
        case VarietySpec::Kind::Grassmann:
            return plucker(params, v.n);
    }
    throw std::logic_error("unreachable");
}

std::vector<std::vector<Rat>> tangent_space(const VarietySpec& v,
                                            const std::vector<std::vector<Rat>>& params) {
    for (const auto& p : params) {
        bool nz = false;
        for (const auto& x : p) nz = nz || x != 0;
        if (!nz) throw std::invalid_argument("zero parameter vector");
    }
    std::vector<std::vector<Rat>> span;
    switch (v.kind) {
        case VarietySpec::Kind::Segre: {
            if (params.size() != v.dims.size())
                throw std::invalid_argument("segre point needs one vector per mode");
            for (std::size_t m = 0; m < params.size(); ++m) {
                for (int i = 0; i < v.dims[m]; ++i) {
                    auto moved = params;
                    moved[m].assign(v.dims[m], Rat(0));
                    moved[m][i] = 1;
                    span.push_back(point_coords(v, moved));
                }
            }
            return span;
        }
        case VarietySpec::Kind::Veronese: {
            // Tangent at alpha^d is alpha^(d-1) * V.
            if (params.size() != 1) throw std::invalid_argument("veronese point is one form");
            MonomialBasis lower(v.n, v.d - 1), full(v.n, v.d);
            const auto base = v.d == 1
                                  ? std::vector<Rat>(1, Rat(1))
                                  : poly_linear_power(params[0], v.d - 1, lower);
            for (int var = 0; var < v.n; ++var) {
                if (v.d == 1) {
                    std::vector<Rat> unit(full.size(), Rat(0));
                    std::vector<int> e(v.n, 0);
                    e[var] = 1;
                    unit[full.index(e)] = 1;
                    span.push_back(std::move(unit));
                } else {
                    span.push_back(poly_mul_var(base, lower, var, full));
                }
            }
            return span;
        }
        case VarietySpec::Kind::Grassmann: {
            if (static_cast<int>(params.size()) != v.k)
                throw std::invalid_argument("grassmann point needs k vectors");
            for (int slot = 0; slot < v.k; ++slot) {
                for (int i = 0; i < v.n; ++i) {
                    auto moved = params;
                    moved[slot].assign(v.n, Rat(0));
                    moved[slot][i] = 1;
                    span.push_back(plucker(moved, v.n));
                }
            }
            return span;
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<std::vector<Rat>> sample_point_params(const VarietySpec& v, Rng& rng) {
    auto random_vec = [&rng](int len) {
        std::vector<Rat> x(len);
        bool nz = false;
        do {
            nz = false;
            for (int i = 0; i < len; ++i) {
                x[i] = Rat(rng.uniform(-9, 9));
                nz = nz || x[i] != 0;
            }
        } while (!nz);
        return x;
    };
    std::vector<std::vector<Rat>> params;
    switch (v.kind) {
        case VarietySpec::Kind::Segre:
            for (int d : v.dims) params.push_back(random_vec(d));
            return params;
        case VarietySpec::Kind::Veronese:
            params.push_back(random_vec(v.n));
            return params;
        case VarietySpec::Kind::Grassmann:
            for (int i = 0; i < v.k; ++i) params.push_back(random_vec(v.n));
            return params;
    }
    throw std::logic_error("unreachable");
}

TerraciniReport secant_dim(const VarietySpec& v, int r, int trials,
                           std::uint64_t seed, int threads) {
    if (r < 1 || trials < 1) throw std::invalid_argument("need r >= 1 and trials >= 1");
    TerraciniReport rep;
    rep.variety = v;
    rep.r = r;
    rep.trials = trials;
    rep.seed = seed;
    rep.ambient = v.ambient_dim();
    rep.expected = std::min<std::size_t>(static_cast<std::size_t>(r) * v.cone_dim(),
                                         rep.ambient);

    std::vector<std::size_t> observed(trials, 0);
    parallel_chunks(trials, threads, [&](int, std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t trial = b; trial < e; ++trial) {
            Rng rng = Rng::derive(seed, trial);
            std::vector<std::vector<Rat>> stacked;
            for (int p = 0; p < r; ++p) {
                auto params = sample_point_params(v, rng);
                for (auto& row : tangent_space(v, params)) stacked.push_back(std::move(row));
            }
            observed[trial] = span_rank(stacked);
        }
    });
    // A degenerate sample can only undershoot; the max over trials is the
    // right estimator in exact arithmetic.
    for (auto o : observed) rep.observed = std::max(rep.observed, o);
    rep.defect = rep.expected - std::min(rep.expected, rep.observed);
    return rep;
}

long expected_fill(long a, long b, long c) {
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("dims must be >= 1");
    const long num = a * b * c;
    const long den = a + b + c - 2;
    return (num + den - 1) / den;
}

long lickteig_dim(int n, int r) {
    if (n < 1 || r < 1) throw std::invalid_argument("bad parameters");
    const long expected = std::min<long>(static_cast<long>(r) * (3L * n - 2) - 1,
                                         static_cast<long>(n) * n * n - 1);
    if (n == 3 && r == 4) return expected - 1;  // degree-nine hypersurface stratum
    return expected;
}

long waring_rank(int d, int n) {
    if (d < 1 || n < 1) throw std::invalid_argument("bad parameters");
    if (d == 2) return n;
    if (d == 3 && n == 5) return 8;
    if (d == 4 && n == 3) return 6;
    if (d == 4 && n == 4) return 10;
    if (d == 4 && n == 5) return 15;
    const Int dim = binomial(n + d - 1, d);
    Int q = (dim + n - 1) / n;
    return q.get_si();
}

long quadric_veronese_dim(int r, int n) {
    if (r == 1) return n;
    if (r < 1 || r > n) throw std::invalid_argument("need 1 <= r <= n");
    return static_cast<long>(r) * n - (static_cast<long>(r) * r - 3L * r) / 2 - 1;
}

BlockCoverReport three_block_cover_333() {
    // Block with pivot m: first matrix misses column m off the diagonal,
    // second keeps row m and column m, third keeps row m and column m.
    BlockCoverReport rep;
    std::set<std::pair<int, int>> a_cov, b_cov, c_cov;
    for (int m = 0; m < 3; ++m) {
        int triples = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) {
                    const bool a_ok = (j != m) || (i == m);
                    const bool b_ok = (j == m) || (k == m);
                    const bool c_ok = (i == m) || (k == m);
                    if (a_ok && b_ok && c_ok) {
                        ++triples;
                        a_cov.insert({i, j});
                        b_cov.insert({j, k});
                        c_cov.insert({i, k});
                    }
                }
        // Six products not involving the pivot entry plus one extra term.
        rep.block_costs.push_back(triples - 3 + 1);
    }
    rep.total_cost = rep.block_costs[0] + rep.block_costs[1] + rep.block_costs[2];
    rep.covers_entries = a_cov.size() == 9 && b_cov.size() == 9 && c_cov.size() == 9;
    return rep;
}

}  // namespace tenslab
