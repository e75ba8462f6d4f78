#include "tenslab/cli.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tenslab/certify.hpp"
#include "tenslab/json_io.hpp"
#include "tenslab/matmul.hpp"
#include "tenslab/reptheory.hpp"
#include "tenslab/separation.hpp"
#include "tenslab/tpp.hpp"
#include "tenslab/varieties.hpp"
#include "tenslab/wedge.hpp"

namespace tenslab {

namespace {

// Built-in tensors keep the acceptance paths free of fixture files.
Tensor resolve_tensor(const std::string& arg) {
    if (arg == "w-state") return w_state();
    if (arg == "ghz") return ghz_state();
    if (arg.rfind("matmul:", 0) == 0) {
        std::stringstream ss(arg.substr(7));
        std::vector<int> dims;
        std::string item;
        while (std::getline(ss, item, ',')) dims.push_back(std::stoi(item));
        if (dims.size() != 3) throw std::invalid_argument("matmul:m,n,p expected");
        return matmul_tensor(dims[0], dims[1], dims[2]);
    }
    if (arg == "matmul-partial:2,2,2") return matmul_tensor_partial(2, 2, 2, {{1, 1}});
    return tensor_from_json(load_json_file(arg));
}

std::vector<std::vector<Rat>> vectors_from_json(const json& j) {
    std::vector<std::vector<Rat>> out;
    for (const auto& row : j) {
        std::vector<Rat> v;
        for (const auto& x : row)
            v.push_back(x.is_string() ? rat_parse(x.get<std::string>())
                                      : Rat(x.get<long>()));
        out.push_back(std::move(v));
    }
    return out;
}

struct GlobalOpts {
    bool as_json = false;
    std::uint64_t seed = 0;
    int threads = 1;
};

int cmd_verify(const std::string& alg, const std::string& target_arg, bool border,
               const GlobalOpts& g, std::ostream& out) {
    const Tensor target = resolve_tensor(target_arg);
    json rec{{"command", "verify"}, {"alg", alg}, {"target", target_arg}};

    // Split-space entries carry a multiplicative-complexity certificate.
    if (auto vs = catalog_vsplit(alg)) {
        const bool ok = mult_complexity_verify(*vs, target);
        rec["split"] = vs->split;
        rec["ok"] = ok;
        if (g.as_json)
            out << rec.dump() << "\n";
        else if (ok)
            out << "ok: computation of the target over the split space, "
                << vs->decomposition.length() << " terms\n";
        else
            out << "FAIL: split-space certificate does not match the target\n";
        return ok ? 0 : 2;
    }

    const Decomposition d = catalog(alg);
    int code;
    if (border || !d.eps_free()) {
        const auto bv = verify_border(d, target);
        code = bv.ok ? 0 : 2;
        rec["border"] = true;
        rec["ok"] = bv.ok;
        if (bv.remainder_order)
            rec["remainder_order"] = *bv.remainder_order;
        else if (bv.ok)
            rec["remainder_order"] = "inf";
        if (!bv.ok) rec["reason"] = bv.reason;
        if (g.as_json)
            out << rec.dump() << "\n";
        else if (bv.ok)
            out << "ok: approximate computation of the target, " << d.length()
                << " terms, remainder order "
                << (bv.remainder_order ? std::to_string(*bv.remainder_order) : "inf")
                << "\n";
        else
            out << "FAIL: " << bv.reason << "\n";
    } else {
        const bool ok = verify_exact(d, target);
        code = ok ? 0 : 2;
        rec["border"] = false;
        rec["ok"] = ok;
        if (g.as_json)
            out << rec.dump() << "\n";
        else
            out << (ok ? "ok: exact computation of the target, " +
                             std::to_string(d.length()) + " terms"
                       : std::string("FAIL: computation does not assemble to the target"))
                << "\n";
    }
    return code;
}

int cmd_mul(int n, const std::string& base_name, int cutoff, const std::string& mode,
            bool count_only, const GlobalOpts& g, std::ostream& out) {
    const Decomposition base = resolve_base(base_name);
    Rng rng(g.seed);

    const auto t0 = std::chrono::steady_clock::now();
    MultStats st;
    if (mode == "exact") {
        DenseMatrix<Rat> A(n, n), B(n, n);
        for (auto& x : A.a) x = Rat(rng.uniform(-9, 9));
        for (auto& x : B.a) x = Rat(rng.uniform(-9, 9));
        st = recursive_mul(A, B, base, cutoff, g.threads).second;
    } else if (mode == "machine") {
        DenseMatrix<double> A(n, n), B(n, n);
        for (auto& x : A.a) x = 2.0 * rng.uniform_real() - 1.0;
        for (auto& x : B.a) x = 2.0 * rng.uniform_real() - 1.0;
        st = recursive_mul(A, B, base, cutoff, g.threads).second;
    } else {
        throw std::invalid_argument("mode must be exact or machine");
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0)
                            .count();

    if (count_only) {
        out << st.multiplications << "\n";
        return 0;
    }
    if (g.as_json) {
        out << json{{"command", "mul"},     {"n", n},
                    {"base", base_name},    {"cutoff", cutoff},
                    {"mults", st.multiplications}, {"adds", st.additions},
                    {"wall_time", secs}}
                   .dump()
            << "\n";
    } else {
        out << n << "," << base_name << "," << cutoff << "," << st.multiplications
            << "," << st.additions << "," << secs << "\n";
    }
    return 0;
}

int cmd_certify(const std::string& tensor_arg, long r, const GlobalOpts& g,
                std::ostream& out) {
    const Tensor t = resolve_tensor(tensor_arg);
    BoundReport rep = border_rank_bounds(t, g.seed, g.threads);
    if (tensor_arg.rfind("matmul:", 0) == 0) {
        std::stringstream ss(tensor_arg.substr(7));
        std::vector<int> dims;
        std::string item;
        while (std::getline(ss, item, ',')) dims.push_back(std::stoi(item));
        if (dims.size() == 3 && dims[0] == dims[1] && dims[1] == dims[2])
            attach_matmul_literature(rep, dims[0]);
    }

    json rec{{"command", "certify"}, {"tensor", tensor_arg}, {"r", r},
             {"best", rep.best},     {"method", rep.best_method()}};
    if (rep.flattening) rec["flattening"] = *rep.flattening;
    if (rep.multilinear) rec["multilinear"] = *rep.multilinear;
    if (rep.commutator) rec["commutator"] = *rep.commutator;
    if (rep.p_matrix) rec["p_matrix"] = *rep.p_matrix;
    json lit = json::array();
    for (const auto& l : rep.literature)
        lit.push_back(json{{"label", l.label}, {"value", rat_str(l.value)},
                           {"lower_bound", l.is_lower_bound}});
    if (!lit.empty()) rec["literature"] = lit;

    const bool obstructed = rep.best > static_cast<std::size_t>(r);
    rec["obstruction"] = obstructed;
    if (g.as_json) {
        out << rec.dump() << "\n";
    } else {
        out << "border-rank lower bound " << rep.best << " via " << rep.best_method()
            << "\n";
        for (const auto& l : rep.literature)
            out << "  [literature] " << l.label << " = " << rat_str(l.value) << "\n";
        out << (obstructed ? "certified: border rank > " + std::to_string(r)
                           : "no obstruction to border rank <= " + std::to_string(r))
            << "\n";
    }
    return obstructed ? 2 : 0;
}

int cmd_tpp(const std::string& group_file, const std::string& sets_file,
            const std::string& degrees_file, const std::string& search,
            const GlobalOpts& g, std::ostream& out) {
    json gj = load_json_file(group_file);
    FiniteGroup group(gj.at("table").get<std::vector<std::vector<int>>>());
    if (gj.contains("order") && gj.at("order").get<int>() != group.order())
        throw std::invalid_argument("group order field disagrees with table");

    if (!search.empty()) {
        std::stringstream ss(search);
        std::vector<int> sizes;
        std::string item;
        while (std::getline(ss, item, ',')) sizes.push_back(std::stoi(item));
        if (sizes.size() != 3) throw std::invalid_argument("--search n,m,p expected");
        auto found = tpp_search(group, sizes[0], sizes[1], sizes[2]);
        json rec{{"command", "tpp"}, {"search", sizes}, {"found", found.has_value()}};
        if (found) rec["sets"] = json{(*found)[0], (*found)[1], (*found)[2]};
        if (g.as_json)
            out << rec.dump() << "\n";
        else if (found)
            out << "found a triple-product triple of sizes " << sizes[0] << ","
                << sizes[1] << "," << sizes[2] << "\n";
        else
            out << "no triple of the requested sizes exists\n";
        return found ? 0 : 2;
    }

    json sj = load_json_file(sets_file);
    TPPInstance inst{group, sj.at("s1").get<std::vector<int>>(),
                     sj.at("s2").get<std::vector<int>>(),
                     sj.at("s3").get<std::vector<int>>(),
                     {}};
    if (!degrees_file.empty())
        inst.character_degrees =
            load_json_file(degrees_file).at("degrees").get<std::vector<int>>();

    const bool ok = tpp_check(inst);
    json rec{{"command", "tpp"}, {"holds", ok}};
    if (ok) {
        auto bound = tpp_omega_bound(inst);
        if (bound)
            rec["omega_upper_bound"] = *bound;
        else
            rec["omega_upper_bound"] = "none";
        if (!g.as_json) {
            out << "triple product property holds\n";
            if (bound)
                out << "exponent constraint: omega <= " << *bound << "\n";
            else
                out << "no exponent constraint from this instance\n";
        }
    } else if (!g.as_json) {
        out << "triple product property FAILS\n";
    }
    if (g.as_json) out << rec.dump() << "\n";
    return ok ? 0 : 2;
}

int cmd_secant_dim(const std::string& variety, int r, int trials, const GlobalOpts& g,
                   std::ostream& out) {
    auto v = VarietySpec::parse(variety);
    if (!v) throw std::invalid_argument("cannot parse variety '" + variety + "'");
    const auto rep = secant_dim(*v, r, trials, g.seed, g.threads);
    if (g.as_json) {
        out << json{{"command", "secant-dim"},
                    {"variety", v->str()},
                    {"r", r},
                    {"trials", trials},
                    {"observed", rep.observed},
                    {"expected", rep.expected},
                    {"defect", rep.defect},
                    {"ambient", rep.ambient}}
                   .dump()
            << "\n";
    } else {
        out << v->str() << "  r=" << r << "  observed=" << rep.observed
            << "  expected=" << rep.expected << "  defect=" << rep.defect
            << "  ambient=" << rep.ambient << "\n";
    }
    return 0;
}

Partition parse_partition(const std::string& s) {
    Partition p;
    for (char c : s) {
        if (c == '-' || c == '.' || c == ' ') continue;
        if (c < '1' || c > '9') throw std::invalid_argument("bad partition digit");
        p.push_back(c - '0');
    }
    return p;
}

int cmd_modules(const std::string& shape_arg, int degree, const std::string& filter,
                const GlobalOpts& g, std::ostream& out) {
    std::vector<int> shape;
    std::stringstream ss(shape_arg);
    std::string item;
    while (std::getline(ss, item, ',')) shape.push_back(std::stoi(item));

    std::vector<Partition> want;
    if (!filter.empty()) {
        std::stringstream fs(filter);
        while (std::getline(fs, item, ',')) want.push_back(parse_partition(item));
        if (want.size() != shape.size())
            throw std::invalid_argument("filter arity mismatch");
    }

    const auto labels = decompose_symd(shape, degree);
    json rows = json::array();
    for (const auto& l : labels) {
        if (!want.empty() && l.parts != want) continue;
        if (g.as_json) {
            json parts = json::array();
            for (const auto& p : l.parts) parts.push_back(p);
            rows.push_back(json{{"partitions", parts},
                                {"multiplicity", l.multiplicity},
                                {"dimension", l.dimension.get_str()}});
        } else {
            for (std::size_t m = 0; m < l.parts.size(); ++m)
                out << (m ? ";" : "") << partition_str(l.parts[m]);
            out << ";  mult=" << l.multiplicity << ";  dim=" << l.dimension.get_str()
                << "\n";
        }
    }
    if (g.as_json)
        out << json{{"command", "modules"}, {"shape", shape}, {"degree", degree},
                    {"labels", rows}}
                   .dump()
            << "\n";
    return 0;
}

int cmd_ideal_dim(const std::string& variety, int degree, const GlobalOpts& g,
                  std::ostream& out) {
    int secant_r = 1;
    std::string vtext = variety;
    if (vtext.rfind("secant:", 0) == 0) {
        const auto rest = vtext.substr(7);
        const auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("secant:r:<variety> expected");
        secant_r = std::stoi(rest.substr(0, colon));
        vtext = rest.substr(colon + 1);
    }
    auto v = VarietySpec::parse(vtext);
    if (!v) throw std::invalid_argument("cannot parse variety '" + vtext + "'");
    const auto rep = ideal_dim_numeric(*v, secant_r, degree, 0, g.seed);
    if (g.as_json) {
        out << json{{"command", "ideal-dim"},
                    {"variety", v->str()},
                    {"secant", secant_r},
                    {"degree", degree},
                    {"monomials", rep.monomials},
                    {"dim", rep.dim_upper_bound},
                    {"note", "upper bound on the ideal dimension; equals it generically"}}
                   .dump()
            << "\n";
    } else {
        out << "dim I_" << degree << " = " << rep.dim_upper_bound << "  (monomials "
            << rep.monomials << ", certified upper bound, generically exact)\n";
    }
    return 0;
}

int cmd_classify(const std::string& tensor_arg, const GlobalOpts& g, std::ostream& out) {
    const Tensor t = resolve_tensor(tensor_arg);
    const auto cls = classify_222(t);
    if (g.as_json)
        out << json{{"command", "classify"}, {"class", to_string(cls)}}.dump() << "\n";
    else
        out << to_string(cls) << "\n";
    return 0;
}

int cmd_phylo(const std::string& tensor_arg, const std::string& topo_arg,
              const GlobalOpts& g, std::ostream& out) {
    const Tensor t = resolve_tensor(tensor_arg);
    auto topo = phylo_topology_from_string(topo_arg);
    if (!topo) throw std::invalid_argument("topology must be 12|34, 13|24 or 14|23");
    const auto rep = phylo_necessary(t, *topo);
    if (g.as_json)
        out << json{{"command", "phylo"},
                    {"topology", topo_arg},
                    {"compatible", rep.compatible},
                    {"rank", rep.rank_primary},
                    {"note", "necessary condition only"}}
                   .dump()
            << "\n";
    else
        out << (rep.compatible ? "compatible" : "INCOMPATIBLE") << " with " << topo_arg
            << " (grouped flattening rank " << rep.rank_primary
            << "; necessary condition only)\n";
    return rep.compatible ? 0 : 2;
}

int cmd_limit_plane(const std::string& family_arg, const GlobalOpts& g,
                    std::ostream& out) {
    CurveFamily fam;
    if (family_arg == "bini")
        fam = CurveFamily::from_decomposition(catalog("bini-partial-2x2"));
    else if (family_arg == "w-state")
        fam = CurveFamily::from_decomposition(catalog("w-state-eps"));
    else {
        json j = load_json_file(family_arg);
        fam = CurveFamily::from_decomposition(decomposition_from_json(j));
    }
    const auto plane = limit_plane(fam);
    if (g.as_json) {
        json basis = json::array();
        for (const auto& v : plane.basis) {
            json row = json::array();
            for (const auto& x : v) row.push_back(rat_str(x));
            basis.push_back(row);
        }
        out << json{{"command", "limit-plane"},
                    {"order", plane.order},
                    {"dim", plane.basis.size()},
                    {"basis", basis}}
                   .dump()
            << "\n";
    } else {
        out << "limiting " << plane.basis.size() << "-plane reached at order "
            << plane.order << "\n";
    }
    return 0;
}

int cmd_separation(const std::string& alg, const std::string& query_file,
                   bool all_modes, const GlobalOpts& g, std::ostream& out) {
    SeparationQuery q;
    q.phi = catalog(alg);
    q.all_modes = all_modes;
    json j = load_json_file(query_file);
    if (j.contains("a1")) q.a1 = vectors_from_json(j.at("a1"));
    if (j.contains("b1")) q.b1 = vectors_from_json(j.at("b1"));
    if (j.contains("c1")) q.c1 = vectors_from_json(j.at("c1"));

    const auto res = separation_check(q, g.threads);
    json rec{{"command", "separation"}, {"alg", alg}, {"found", res.found}};
    if (res.found) {
        rec["parts"] = res.part;
        rec["implied_bound"] = res.implied_bound;
        rec["length"] = q.phi.length();
    }
    if (g.as_json)
        out << rec.dump() << "\n";
    else if (res.found) {
        out << "separation found; implied bound " << res.implied_bound
            << " <= length " << q.phi.length() << "\nassignment:";
        for (int p : res.part) out << " " << p;
        out << "\n";
    } else {
        out << "no separation exists for this query\n";
    }
    return res.found ? 0 : 2;
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"tenslab: exact tensor-rank laboratory"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.as_json, "machine-readable output");
    app.add_option("--seed", g.seed, "seed for randomized routines")->capture_default_str();
    app.add_option("--threads", g.threads, "worker threads; results are thread-count independent")
        ->capture_default_str();

    // verify
    std::string v_alg, v_target;
    bool v_border = false;
    auto* verify = app.add_subcommand("verify", "check a cataloged computation against a target");
    verify->add_option("--alg", v_alg, "catalog name")->required();
    verify->add_option("--target", v_target, "tensor (builtin name or file)")->required();
    verify->add_flag("--border", v_border, "force the approximate check");

    // mul
    int m_n = 2, m_cutoff = 1;
    std::string m_base = "strassen-2x2", m_mode = "exact";
    bool m_count_only = false;
    auto* mul = app.add_subcommand("mul", "recursive matrix multiplication with counts");
    mul->add_option("--n", m_n, "matrix size")->required();
    mul->add_option("--base", m_base, "square base computation")->capture_default_str();
    auto* cutoff_opt =
        mul->add_option("--cutoff", m_cutoff, "classical below this size (default 1 exact, 64 machine)");
    mul->add_option("--mode", m_mode, "exact|machine")->capture_default_str();
    mul->add_flag("--count-only", m_count_only, "print just the multiplication count");

    // certify
    std::string c_tensor;
    long c_r = 0;
    auto* certify = app.add_subcommand("certify", "border-rank lower bounds");
    certify->add_option("--tensor", c_tensor, "tensor (builtin name or file)")->required();
    certify->add_option("--r", c_r, "candidate border rank")->required();

    // tpp
    std::string t_group, t_sets, t_degrees, t_search;
    auto* tpp = app.add_subcommand("tpp", "triple product property checks");
    tpp->add_option("--group", t_group, "group JSON file")->required();
    tpp->add_option("--sets", t_sets, "subsets JSON file");
    tpp->add_option("--degrees", t_degrees, "character degrees JSON file");
    tpp->add_option("--search", t_search, "search sizes n,m,p instead of checking sets");

    // secant-dim
    std::string s_variety;
    int s_r = 1, s_trials = 3;
    auto* sd = app.add_subcommand("secant-dim", "Terracini dimension sampling");
    sd->add_option("--variety", s_variety, "segre:a,b,c | veronese:d,n | grassmann:k,n")
        ->required();
    sd->add_option("--r", s_r, "secant index")->required();
    sd->add_option("--trials", s_trials, "sample trials")->capture_default_str();

    // modules
    std::string mo_shape, mo_filter;
    int mo_degree = 0;
    auto* mo = app.add_subcommand("modules", "isotypic decomposition of Sym^d");
    mo->add_option("--shape", mo_shape, "factor dimensions a,b,c")->required();
    mo->add_option("--degree", mo_degree, "symmetric power")->required();
    mo->add_option("--filter", mo_filter, "only labels matching e.g. 211,211,211");

    // ideal-dim
    std::string i_variety;
    int i_degree = 0;
    auto* id = app.add_subcommand("ideal-dim", "numeric ideal dimension");
    id->add_option("--variety", i_variety, "variety or secant:r:<variety>")->required();
    id->add_option("--degree", i_degree, "polynomial degree")->required();

    // classify
    std::string cl_tensor;
    auto* cl = app.add_subcommand("classify", "orbit class of a 2x2x2 tensor");
    cl->add_option("--tensor", cl_tensor, "tensor (builtin name or file)")->required();

    // phylo
    std::string p_tensor, p_topo;
    auto* ph = app.add_subcommand("phylo", "tree-topology necessary condition");
    ph->add_option("--tensor", p_tensor, "4x4x4x4 tensor file")->required();
    ph->add_option("--topology", p_topo, "12|34, 13|24 or 14|23")->required();

    // limit-plane
    std::string lp_family;
    auto* lp = app.add_subcommand("limit-plane", "limiting plane of a curve family");
    lp->add_option("--family", lp_family, "bini | w-state | file")->required();

    // separation
    std::string sep_alg, sep_query;
    bool sep_all = false;
    auto* sep = app.add_subcommand("separation", "splitting certificates for computations");
    sep->add_option("--alg", sep_alg, "catalog name")->required();
    sep->add_option("--query", sep_query, "subspaces JSON file")->required();
    sep->add_flag("--all-modes", sep_all, "all-modes variant");

    // Global flags are accepted after the subcommand as well.
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    std::ostringstream captured;
    try {
        // CLI11 parses reversed argv.
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        int code = app.exit(e, msg, msg);
        out << msg.str();
        return {code == 0 ? 0 : 1, msg.str()};
    }

    try {
        int code = 0;
        if (*mul && cutoff_opt->count() == 0) m_cutoff = m_mode == "machine" ? 64 : 1;
        if (*verify) code = cmd_verify(v_alg, v_target, v_border, g, captured);
        else if (*mul) code = cmd_mul(m_n, m_base, m_cutoff, m_mode, m_count_only, g, captured);
        else if (*certify) code = cmd_certify(c_tensor, c_r, g, captured);
        else if (*tpp) code = cmd_tpp(t_group, t_sets, t_degrees, t_search, g, captured);
        else if (*sd) code = cmd_secant_dim(s_variety, s_r, s_trials, g, captured);
        else if (*mo) code = cmd_modules(mo_shape, mo_degree, mo_filter, g, captured);
        else if (*id) code = cmd_ideal_dim(i_variety, i_degree, g, captured);
        else if (*cl) code = cmd_classify(cl_tensor, g, captured);
        else if (*ph) code = cmd_phylo(p_tensor, p_topo, g, captured);
        else if (*lp) code = cmd_limit_plane(lp_family, g, captured);
        else if (*sep) code = cmd_separation(sep_alg, sep_query, sep_all, g, captured);
        out << captured.str();
        return {code, captured.str()};
    } catch (const std::invalid_argument& e) {
        const std::string msg = std::string("error: ") + e.what() + "\n";
        out << msg;
        return {1, msg};
    } catch (const std::out_of_range& e) {
        const std::string msg = std::string("error: ") + e.what() + "\n";
        out << msg;
        return {1, msg};
    } catch (const std::logic_error& e) {
        const std::string msg = std::string("internal consistency failure: ") + e.what() + "\n";
        out << msg;
        return {3, msg};
    } catch (const std::exception& e) {
        const std::string msg = std::string("error: ") + e.what() + "\n";
        out << msg;
        return {1, msg};
    }
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return dispatch(args, std::cout).exit_code;
}

}  // namespace tenslab
