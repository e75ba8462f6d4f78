#include "tenslab/separation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tenslab/parallel.hpp"

namespace tenslab {

namespace {

struct TermData {
    std::vector<Rat> a, b, c;  // factor vectors at eps degree 0
};

std::vector<TermData> extract(const Decomposition& d) {
    std::vector<TermData> out;
    for (const auto& t : d.terms) {
        TermData td;
        for (const auto& x : t.factors[0]) td.a.push_back(x.coeff(0));
        for (const auto& x : t.factors[1]) td.b.push_back(x.coeff(0));
        for (const auto& x : t.factors[2]) td.c.push_back(x.coeff(0));
        out.push_back(std::move(td));
    }
    return out;
}

// Lker(phi|_U) = 0: u -> sum_i <a_i,u> b_i (x) c_i over the selected terms
// must be injective on U. Stack the images of a basis and check full rank.
bool left_kernel_trivial(const std::vector<TermData>& terms,
                         const std::vector<int>& sel,
                         const std::vector<std::vector<Rat>>& u_basis) {
    if (u_basis.empty()) return true;
    const std::size_t nb = terms.empty() ? 0 : terms[0].b.size();
    const std::size_t nc = terms.empty() ? 0 : terms[0].c.size();
    std::vector<std::vector<Rat>> rows;
    for (const auto& u : u_basis) {
        std::vector<Rat> img(nb * nc, Rat(0));
        for (int t : sel) {
            Rat w = 0;
            for (std::size_t i = 0; i < u.size(); ++i) w += terms[t].a[i] * u[i];
            if (w == 0) continue;
            for (std::size_t i = 0; i < nb; ++i) {
                if (terms[t].b[i] == 0) continue;
                const Rat wb = w * terms[t].b[i];
                for (std::size_t j = 0; j < nc; ++j)
                    img[i * nc + j] += wb * terms[t].c[j];
            }
        }
        rows.push_back(std::move(img));
    }
    return span_rank(rows) == u_basis.size();
}

bool right_kernel_trivial(const std::vector<TermData>& terms,
                          const std::vector<int>& sel,
                          const std::vector<std::vector<Rat>>& u_basis) {
    if (u_basis.empty()) return true;
    const std::size_t na = terms.empty() ? 0 : terms[0].a.size();
    const std::size_t nc = terms.empty() ? 0 : terms[0].c.size();
    std::vector<std::vector<Rat>> rows;
    for (const auto& u : u_basis) {
        std::vector<Rat> img(na * nc, Rat(0));
        for (int t : sel) {
            Rat w = 0;
            for (std::size_t i = 0; i < u.size(); ++i) w += terms[t].b[i] * u[i];
            if (w == 0) continue;
            for (std::size_t i = 0; i < na; ++i) {
                if (terms[t].a[i] == 0) continue;
                const Rat wa = w * terms[t].a[i];
                for (std::size_t j = 0; j < nc; ++j)
                    img[i * nc + j] += wa * terms[t].c[j];
            }
        }
        rows.push_back(std::move(img));
    }
    return span_rank(rows) == u_basis.size();
}

// Third-mode contraction injectivity for the all-modes variant: covectors
// from c1 pair against the value vectors c_i.
bool value_contraction_injective(const std::vector<TermData>& terms,
                                 const std::vector<int>& sel,
                                 const std::vector<std::vector<Rat>>& u_basis) {
    if (u_basis.empty()) return true;
    const std::size_t na = terms.empty() ? 0 : terms[0].a.size();
    const std::size_t nb = terms.empty() ? 0 : terms[0].b.size();
    std::vector<std::vector<Rat>> rows;
    for (const auto& u : u_basis) {
        std::vector<Rat> img(na * nb, Rat(0));
        for (int t : sel) {
            Rat w = 0;
            for (std::size_t i = 0; i < u.size(); ++i) w += terms[t].c[i] * u[i];
            if (w == 0) continue;
            for (std::size_t i = 0; i < na; ++i) {
                if (terms[t].a[i] == 0) continue;
                const Rat wa = w * terms[t].a[i];
                for (std::size_t j = 0; j < nb; ++j)
                    img[i * nb + j] += wa * terms[t].b[j];
            }
        }
        rows.push_back(std::move(img));
    }
    return span_rank(rows) == u_basis.size();
}

}  // namespace

SeparationResult separation_check(const SeparationQuery& q, int threads) {
    if (!q.phi.eps_free())
        throw std::invalid_argument("separation needs an exact computation");
    const std::size_t len = q.phi.length();
    if (len > 12) throw std::invalid_argument("separation budget exceeded (length > 12)");
    for (const auto* basis : {&q.a1, &q.b1, &q.c1})
        if (!basis->empty() && span_rank(*basis) != basis->size())
            throw std::invalid_argument("separation subspace basis is dependent");

    const auto terms = extract(q.phi);
    const int colors = q.all_modes ? 4 : 3;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= colors;
    if (total > 600000) throw std::invalid_argument("separation budget exceeded");

    std::vector<bool> valued_in_c1(len, false);
    for (std::size_t t = 0; t < len; ++t)
        valued_in_c1[t] = !q.c1.empty() && in_span(q.c1, terms[t].c);

    auto try_assignment = [&](std::uint64_t code, std::vector<int>& part) -> bool {
        part.assign(len, 1);
        for (std::size_t t = len; t-- > 0;) {
            part[t] = 1 + static_cast<int>(code % colors);
            code /= colors;
        }
        std::vector<int> s1, s2, s3;
        for (std::size_t t = 0; t < len; ++t) {
            if (part[t] == 1) s1.push_back(static_cast<int>(t));
            if (part[t] == 2) s2.push_back(static_cast<int>(t));
            if (part[t] == 3) s3.push_back(static_cast<int>(t));
        }
        if (!q.all_modes) {
            if (!q.c1.empty())
                for (std::size_t t = 0; t < len; ++t)
                    if ((part[t] == 1 || part[t] == 2) && valued_in_c1[t])
                        return false;
            return left_kernel_trivial(terms, s1, q.a1) &&
                   right_kernel_trivial(terms, s2, q.b1);
        }
        return left_kernel_trivial(terms, s1, q.a1) &&
               right_kernel_trivial(terms, s2, q.b1) &&
               value_contraction_injective(terms, s3, q.c1);
    };

    // Scan in lexicographic order (term 0 is the most significant digit);
    // each chunk reports its least hit and the global minimum wins, so the
    // answer does not depend on the schedule.
    std::vector<std::uint64_t> best(std::max(threads, 1),
                                    std::numeric_limits<std::uint64_t>::max());
    parallel_chunks(total, threads, [&](int w, std::uint64_t b, std::uint64_t e) {
        std::vector<int> scratch;
        for (std::uint64_t code = b; code < e; ++code) {
            if (try_assignment(code, scratch)) {
                best[w] = code;
                break;
            }
        }
    });

    std::uint64_t winner = std::numeric_limits<std::uint64_t>::max();
    for (auto b : best) winner = std::min(winner, b);

    SeparationResult res;
    if (winner == std::numeric_limits<std::uint64_t>::max()) return res;
    res.found = true;
    try_assignment(winner, res.part);
    for (std::size_t t = 0; t < len; ++t)
        if (res.part[t] == 3 && valued_in_c1[t]) ++res.phi3_valued_in_c1;
    res.implied_bound = q.a1.size() + q.b1.size() + res.phi3_valued_in_c1;
    if (q.all_modes) res.implied_bound = q.a1.size() + q.b1.size() + q.c1.size();
    return res;
}

}  // namespace tenslab
