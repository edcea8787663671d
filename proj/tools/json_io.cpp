#include "json_io.hpp"

#include <fstream>

namespace rbsio {

using namespace rbs;

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

Scalar scalar_from(const json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_scalar(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  throw InputError("coefficients must be integers or \"p/q\" strings, got " + j.dump());
}

json to_json(const Scalar& s) { return to_string(s); }

SpacePtr space_from(const json& j) {
  const json& b = field(j, "basis");
  if (!b.is_array() || b.empty()) throw InputError("basis must be a nonempty array");
  std::vector<BasisVector> basis;
  for (const auto& e : b) {
    if (!field(e, "name").is_string()) throw InputError("basis names must be strings");
    basis.push_back({e.at("name").get<std::string>(), int_field(e, "degree")});
  }
  try {
    return make_space(GradedSpace(std::move(basis)));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

json to_json(const GradedSpace& v) {
  json b = json::array();
  for (const auto& e : v.basis()) b.push_back({{"name", e.name}, {"degree", e.degree}});
  return {{"basis", b}};
}

namespace {

int index_in(const GradedSpace& v, const json& name) {
  if (!name.is_string()) throw InputError("basis references must be names");
  auto i = v.index_of(name.get<std::string>());
  if (!i) throw InputError("unknown basis vector \"" + name.get<std::string>() + "\"");
  return static_cast<int>(*i);
}

}  // namespace

MultiMap multimap_from(const json& j, const SpacePtr& in, const SpacePtr& out) {
  const int arity = int_field(j, "arity");
  const int degree = int_field(j, "degree");
  if (arity < 1) throw InputError("arity must be >= 1");
  MultiMap m(in, out, arity, degree);
  const json& entries = field(j, "entries");
  if (!entries.is_array()) throw InputError("entries must be an array");
  for (const auto& e : entries) {
    const json& ins = field(e, "in");
    if (!ins.is_array() || static_cast<int>(ins.size()) != arity) throw InputError("entry input list has wrong length");
    MultiMap::Key key;
    for (const auto& n : ins) key.push_back(index_in(*in, n));
    const json& outs = field(e, "out");
    if (!outs.is_object()) throw InputError("entry output must be an object {name: coefficient}");
    for (const auto& [name, c] : outs.items()) {
      try {
        m.add(key, index_in(*out, json(name)), scalar_from(c));
      } catch (const std::invalid_argument& err) {
        throw InputError(err.what());
      }
    }
  }
  return m;
}

json to_json(const MultiMap& m) {
  json entries = json::array();
  for (const auto& [key, vec] : m.entries()) {
    json ins = json::array();
    for (int x : key) ins.push_back(m.in_space()->name(x));
    json outs = json::object();
    for (const auto& [o, c] : vec) outs[m.out_space()->name(o)] = to_json(c);
    entries.push_back({{"in", ins}, {"out", outs}});
  }
  return {{"arity", m.arity()}, {"degree", m.degree()}, {"entries", entries}};
}

LoadedAlgebra algebra_from(const json& j) {
  LoadedAlgebra out;
  out.spec = j;
  if (j.is_object() && j.contains("matrix")) {
    const json& mx = j.at("matrix");
    if (mx.is_number_integer()) {
      if (mx.get<int>() < 1) throw InputError("matrix size must be >= 1");
      out.matrix = make_matrix_algebra(mx.get<int>());
    } else {
      out.matrix = make_matrix_algebra(*space_from(mx));
    }
    out.algebra = out.matrix;
    return out;
  }
  SpacePtr v = space_from(j);
  BasedAlgebra::Structure st;
  for (const auto& p : field(j, "products")) {
    const int a = index_in(*v, field(p, "left")), b = index_in(*v, field(p, "right"));
    SparseVector val;
    for (const auto& [name, c] : field(p, "out").items()) axpy(val, {{index_in(*v, json(name)), Scalar(1)}}, scalar_from(c));
    st[{a, b}] = val;
  }
  SparseVector unit;
  for (const auto& [name, c] : field(j, "unit").items()) axpy(unit, {{index_in(*v, json(name)), Scalar(1)}}, scalar_from(c));
  try {
    auto A = std::make_shared<const BasedAlgebra>(v, st, unit);
    if (!A->is_associative()) throw InputError("algebra is not associative");
    if (!A->is_unit_valid()) throw InputError("unit is not a two-sided unit");
    out.algebra = A;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return out;
}

TensorElem tensor_from(const json& j, const AlgebraPtr& A) {
  const int order = int_field(j, "order");
  if (order < 1) throw InputError("order must be >= 1");
  TensorElem t(A, order);
  const json& entries = field(j, "entries");
  if (!entries.is_array()) throw InputError("entries must be an array");
  for (const auto& e : entries) {
    const json& fs = field(e, "factors");
    if (!fs.is_array() || static_cast<int>(fs.size()) != order) throw InputError("factor list has wrong length");
    TensorElem::Key key;
    for (const auto& n : fs) key.push_back(index_in(*A->space(), n));
    t.add(key, scalar_from(field(e, "coeff")));
  }
  return t;
}

json to_json(const TensorElem& t) {
  json entries = json::array();
  for (const auto& [key, c] : t.entries()) {
    json fs = json::array();
    for (int x : key) fs.push_back(t.algebra()->space()->name(x));
    entries.push_back({{"factors", fs}, {"coeff", to_json(c)}});
  }
  return {{"order", t.order()}, {"entries", entries}};
}

namespace {

std::map<int, MultiMap> family_from(const json& j, const char* key, const SpacePtr& v) {
  std::map<int, MultiMap> out;
  if (!j.contains(key)) return out;
  const json& fam = j.at(key);
  if (!fam.is_object()) throw InputError(std::string("\"") + key + "\" must map arities to maps");
  for (const auto& [a, m] : fam.items()) {
    int n = 0;
    try {
      n = std::stoi(a);
    } catch (const std::exception&) {
      throw InputError(std::string("bad arity key \"") + a + "\" in \"" + key + "\"");
    }
    MultiMap mm = multimap_from(m, v, v);
    if (mm.arity() != n) throw InputError(std::string("arity mismatch in \"") + key + "\" at key " + a);
    out.emplace(n, std::move(mm));
  }
  return out;
}

}  // namespace

HomotopyRBS hrbs_from(const json& j) {
  HomotopyRBS h;
  h.space = space_from(field(j, "space"));
  h.truncation = int_field(j, "truncation");
  h.m = family_from(j, "m", h.space);
  h.R = family_from(j, "R", h.space);
  h.S = family_from(j, "S", h.space);
  try {
    h.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return h;
}

InfinityYBPair infinity_pair_from(const json& j, const LoadedAlgebra& A) {
  InfinityYBPair p;
  p.algebra = A.algebra;
  p.truncation = int_field(j, "truncation");
  for (const char* key : {"r", "s"}) {
    if (!j.contains(key)) continue;
    for (const auto& [a, t] : j.at(key).items()) {
      TensorElem te = tensor_from(t, A.algebra);
      if (std::to_string(te.order()) != a) throw InputError(std::string("order mismatch in \"") + key + "\" at key " + a);
      (key[0] == 'r' ? p.r : p.s).emplace(te.order(), std::move(te));
    }
  }
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return p;
}

CochainElement cochain_from(const json& j, const LinftyContext& ctx) {
  if (!j.is_array()) throw InputError("a cochain element is an array of {part, map}");
  CochainElement e;
  for (const auto& c : j) {
    if (!field(c, "part").is_string()) throw InputError("part must be a string");
    Part p;
    try {
      p = parse_part(c.at("part").get<std::string>());
    } catch (const std::invalid_argument& err) {
      throw InputError(err.what());
    }
    // names refer to V; inputs are read on sV, outputs on sV or V
    e.add(p, multimap_from(field(c, "map"), ctx.sv, ctx.out_space(p)));
  }
  try {
    e.degree();
  } catch (const std::invalid_argument& err) {
    throw InputError(err.what());
  }
  return e;
}

json to_json(const CochainElement& e) {
  json out = json::array();
  for (const auto& [k, m] : e.components()) out.push_back({{"part", to_string(k.first)}, {"map", to_json(m)}});
  return out;
}

}  // namespace rbsio
