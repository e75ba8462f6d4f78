#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tenslab/json_io.hpp"

#ifndef TENSLAB_DATA_DIR
#define TENSLAB_DATA_DIR "data"
#endif

namespace tenslab {

json eps_to_json(const EpsScalar& e) {
    if (e.is_scalar()) return rat_str(e.coeff(0));
    json m = json::object();
    for (const auto& [d, c] : e.coeffs()) m[std::to_string(d)] = rat_str(c);
    return json{{"eps", m}};
}

EpsScalar eps_from_json(const json& j) {
    if (j.is_string()) return EpsScalar(rat_parse(j.get<std::string>()));
    if (j.is_number_integer()) return EpsScalar(Rat(j.get<long>()));
    if (j.is_object() && j.contains("eps")) {
        EpsScalar e;
        for (const auto& [k, v] : j.at("eps").items())
            e += EpsScalar::eps_power(std::stoi(k), rat_parse(v.get<std::string>()));
        return e;
    }
    throw std::invalid_argument("bad scalar encoding: " + j.dump());
}

json tensor_to_json(const Tensor& t) {
    json entries = json::array();
    for (std::size_t lin = 0; lin < t.size(); ++lin) {
        if (t[lin] == 0) continue;
        entries.push_back(json{{"idx", t.multi_index(lin)}, {"val", rat_str(t[lin])}});
    }
    return json{{"shape", t.shape()}, {"entries", entries}};
}

Tensor tensor_from_json(const json& j) {
    Tensor t(j.at("shape").get<std::vector<int>>());
    if (j.contains("entries"))
        for (const auto& e : j.at("entries"))
            t.at(e.at("idx").get<std::vector<int>>()) =
                rat_parse(e.at("val").get<std::string>());
    return t;
}

json eps_tensor_to_json(const EpsTensor& t) {
    json entries = json::array();
    for (std::size_t lin = 0; lin < t.size(); ++lin) {
        if (t[lin].is_zero()) continue;
        entries.push_back(json{{"idx", t.multi_index(lin)}, {"val", eps_to_json(t[lin])}});
    }
    return json{{"shape", t.shape()}, {"entries", entries}};
}

EpsTensor eps_tensor_from_json(const json& j) {
    EpsTensor t(j.at("shape").get<std::vector<int>>());
    if (j.contains("entries"))
        for (const auto& e : j.at("entries"))
            t.at(e.at("idx").get<std::vector<int>>()) = eps_from_json(e.at("val"));
    return t;
}

json decomposition_to_json(const Decomposition& d) {
    json terms = json::array();
    for (const auto& t : d.terms) {
        json factors = json::array();
        for (const auto& f : t.factors) {
            json vec = json::array();
            for (const auto& x : f) vec.push_back(eps_to_json(x));
            factors.push_back(vec);
        }
        terms.push_back(json{{"factors", factors}});
    }
    json j{{"shape", d.shape}, {"prefactor", eps_to_json(d.prefactor)}, {"terms", terms}};
    if (!d.name.empty()) j["name"] = d.name;
    return j;
}

Decomposition decomposition_from_json(const json& j) {
    Decomposition d;
    d.shape = j.at("shape").get<std::vector<int>>();
    if (j.contains("prefactor")) d.prefactor = eps_from_json(j.at("prefactor"));
    if (j.contains("name")) d.name = j.at("name").get<std::string>();
    for (const auto& jt : j.at("terms")) {
        RankOneTerm t;
        for (const auto& jf : jt.at("factors")) {
            std::vector<EpsScalar> f;
            for (const auto& jx : jf) f.push_back(eps_from_json(jx));
            t.factors.push_back(std::move(f));
        }
        d.terms.push_back(std::move(t));
    }
    d.validate();
    return d;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

namespace {

std::string data_dir() {
    if (const char* env = std::getenv("TENSLAB_DATA_DIR")) return env;
    return TENSLAB_DATA_DIR;
}

const std::map<std::string, std::string>& catalog_files() {
    static const std::map<std::string, std::string> files = {
        {"standard-2x2", "standard-2x2.json"},
        {"strassen-2x2", "strassen-2x2.json"},
        {"waksman-2x2x3", "waksman-2x2x3.json"},
        {"bini-partial-2x2", "bini-partial-2x2.json"},
        {"w-state-eps", "w-state-eps.json"},
    };
    return files;
}

json load_catalog_json(const std::string& name) {
    auto it = catalog_files().find(name);
    if (it == catalog_files().end()) {
        std::ostringstream msg;
        msg << "unknown catalog entry '" << name << "'; available:";
        for (const auto& [n, f] : catalog_files()) msg << " " << n;
        throw std::invalid_argument(msg.str());
    }
    const auto path = std::filesystem::path(data_dir()) / "catalog" / it->second;
    return load_json_file(path.string());
}

}  // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& [n, f] : catalog_files()) names.push_back(n);
    return names;
}

Decomposition catalog(const std::string& name) {
    auto d = decomposition_from_json(load_catalog_json(name));
    d.name = name;
    return d;
}

std::optional<VSplitDecomposition> catalog_vsplit(const std::string& name) {
    json j = load_catalog_json(name);
    if (!j.contains("split")) return std::nullopt;
    VSplitDecomposition v;
    v.decomposition = decomposition_from_json(j);
    v.decomposition.name = name;
    v.split = j.at("split").get<int>();
    return v;
}

Tensor catalog_target(const std::string& name) {
    if (name == "standard-2x2" || name == "strassen-2x2") return matmul_tensor(2, 2, 2);
    if (name == "waksman-2x2x3") return matmul_tensor(2, 2, 3);
    if (name == "bini-partial-2x2") return matmul_tensor_partial(2, 2, 2, {{1, 1}});
    if (name == "w-state-eps") return w_state();
    throw std::invalid_argument("no target registered for '" + name + "'");
}

Decomposition resolve_base(const std::string& name) {
    std::string n = name;
    if (n == "standard") n = "standard-2x2";
    if (n == "strassen") n = "strassen-2x2";
    if (n.rfind("standard-", 0) == 0) {
        const std::string dims = n.substr(9);
        auto x = dims.find('x');
        if (x != std::string::npos && dims.substr(0, x) == dims.substr(x + 1)) {
            int q = std::stoi(dims.substr(0, x));
            if (q >= 2) return standard_base(q);
        }
    }
    return catalog(n);
}

}  // namespace tenslab
