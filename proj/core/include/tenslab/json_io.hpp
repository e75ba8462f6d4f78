#pragma once

#include <string>

#include "json.hpp"
#include "tenslab/decomposition.hpp"
#include "tenslab/tensor.hpp"

namespace tenslab {

using nlohmann::json;

// Wire formats.
//
// Tensor:    {"shape":[a1,...,an],
//             "entries":[{"idx":[i1,...,in],"val":"p/q"},...]}
//            indices 0-based, omitted entries are 0, values are
//            decimal-free rational strings.
// EpsScalar: either a rational string or {"eps":{"-1":"p/q","0":"r/s",...}}.
// Decomposition:
//            {"shape":[...],"prefactor":<eps>,
//             "terms":[{"factors":[[...],[...],...]},...]}
//            plus optional "split" for computations over a split space.

json eps_to_json(const EpsScalar& e);
EpsScalar eps_from_json(const json& j);

json tensor_to_json(const Tensor& t);
Tensor tensor_from_json(const json& j);

json eps_tensor_to_json(const EpsTensor& t);
EpsTensor eps_tensor_from_json(const json& j);

json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const json& j);

json load_json_file(const std::string& path);

}  // namespace tenslab
