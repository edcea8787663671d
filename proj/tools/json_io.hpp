#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rbs/graded.hpp"
#include "rbs/hrbs.hpp"
#include "rbs/linfty.hpp"
#include "rbs/tensor.hpp"
#include "rbs/yang_baxter.hpp"

namespace rbsio {

using json = nlohmann::json;

// Malformed or inconsistent input; the CLI maps it to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_file(const std::string& path);

rbs::Scalar scalar_from(const json& j);
json to_json(const rbs::Scalar& s);

rbs::SpacePtr space_from(const json& j);
json to_json(const rbs::GradedSpace& v);

// Input names refer to `in`, output names to `out`.
rbs::MultiMap multimap_from(const json& j, const rbs::SpacePtr& in, const rbs::SpacePtr& out);
json to_json(const rbs::MultiMap& m);

struct LoadedAlgebra {
  rbs::AlgebraPtr algebra;
  std::shared_ptr<const rbs::MatrixAlgebra> matrix;  // set when the algebra is End(V)
  json spec;                                         // the input description, echoed in outputs
};
// {"matrix": n} | {"matrix": {"basis": [...]}} | {"basis": [...], "unit": {...}, "products": [...]}
LoadedAlgebra algebra_from(const json& j);

rbs::TensorElem tensor_from(const json& j, const rbs::AlgebraPtr& A);
json to_json(const rbs::TensorElem& t);

rbs::HomotopyRBS hrbs_from(const json& j);
rbs::InfinityYBPair infinity_pair_from(const json& j, const LoadedAlgebra& A);

// Cochain element on V: [{"part": "alg"|"rbo_r"|"rbo_s", "map": MultiMap}], names from V.
rbs::CochainElement cochain_from(const json& j, const rbs::LinftyContext& ctx);
json to_json(const rbs::CochainElement& e);

// Reads j[key] with a readable error when missing or of the wrong type.
const json& field(const json& j, const char* key);
int int_field(const json& j, const char* key);

}  // namespace rbsio
