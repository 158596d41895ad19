#include "artin/workspace.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "artin/homalg.hpp"
#include "artin/invariants.hpp"
#include "artin/resolution.hpp"

namespace artin {

namespace {

std::string child(const std::string& pointer, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') escaped += "~0";
    else if (c == '/') escaped += "~1";
    else escaped += c;
  }
  return pointer + "/" + escaped;
}

std::string child(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

const Json& field_of(const Json& j, const std::string& key, const std::string& pointer) {
  if (!j.is_object()) throw InputError("expected an object", pointer);
  auto it = j.find(key);
  if (it == j.end()) throw InputError("missing field '" + key + "'", child(pointer, key));
  return *it;
}

std::size_t count_of(const Json& j, const std::string& pointer) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError("expected a nonnegative integer", pointer);
  return j.get<std::size_t>();
}

std::size_t count_field(const Json& j, const std::string& key, const std::string& pointer) {
  return count_of(field_of(j, key, pointer), child(pointer, key));
}

std::string string_of(const Json& j, const std::string& pointer) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError("expected a string", pointer);
}

std::string string_field(const Json& j, const std::string& key, const std::string& pointer) {
  const Json& v = field_of(j, key, pointer);
  if (!v.is_string()) throw InputError("expected a string", child(pointer, key));
  return v.get<std::string>();
}

template <class F>
auto at_pointer(const std::string& pointer, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError& e) {
    if (!e.pointer().empty()) throw;
    throw InputError(e.what(), pointer);
  }
}

Target target_from(const std::string& s, const std::string& pointer) {
  if (s == "pd") return Target::PD;
  if (s == "gdim") return Target::GDIM;
  throw InputError("target must be 'pd' or 'gdim'", pointer);
}

}  // namespace

const Module& Workspace::module(const std::string& name, const std::string& pointer) const {
  auto it = modules.find(name);
  if (it == modules.end()) throw InputError("unknown module '" + name + "'", pointer);
  return it->second;
}

const ReducingSequence& Workspace::certificate(const std::string& name, const std::string& pointer) const {
  auto it = certificates.find(name);
  if (it == certificates.end()) throw InputError("unknown certificate '" + name + "'", pointer);
  return it->second;
}

AlgebraPresentation algebra_from_json(const Json& j, const std::string& pointer) {
  AlgebraPresentation p;
  std::string field = string_field(j, "field", pointer);
  if (field == "Fp") {
    std::size_t prime = count_field(j, "p", pointer);
    p.field = at_pointer(child(pointer, "p"), [&] { return Field::prime(prime); });
  } else if (field == "Q") {
    p.field = Field::rationals();
  } else {
    throw InputError("field must be 'Fp' or 'Q'", child(pointer, "field"));
  }
  const Json& vars = field_of(j, "vars", pointer);
  if (!vars.is_array() || vars.empty()) throw InputError("expected a nonempty array of names", child(pointer, "vars"));
  std::set<std::string> seen;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    std::string v = string_of(vars[i], child(child(pointer, "vars"), i));
    if (v.empty() || !seen.insert(v).second)
      throw InputError("variable names must be distinct and nonempty", child(child(pointer, "vars"), i));
    p.variables.push_back(v);
  }
  std::size_t n = count_field(j, "nilpotency", pointer);
  if (n < 1) throw InputError("nilpotency must be at least 1", child(pointer, "nilpotency"));
  p.nilpotency = static_cast<unsigned>(n);
  if (j.contains("relations")) {
    const Json& rels = j["relations"];
    if (!rels.is_array()) throw InputError("expected an array of polynomials", child(pointer, "relations"));
    for (std::size_t i = 0; i < rels.size(); ++i) {
      std::string ptr = child(child(pointer, "relations"), i);
      std::string rel = string_of(rels[i], ptr);
      at_pointer(ptr, [&] { return parse_polynomial(p.field, rel, p.variables); });
      p.relations.push_back(rel);
    }
  }
  return p;
}

Json algebra_to_json(const AlgebraPresentation& p) {
  Json j;
  if (p.field.is_rationals()) {
    j["field"] = "Q";
  } else {
    j["field"] = "Fp";
    j["p"] = p.field.characteristic();
  }
  j["vars"] = p.variables;
  j["nilpotency"] = p.nilpotency;
  j["relations"] = p.relations;
  return j;
}

Json matrix_to_json(const Matrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = m.to_strings();
  return j;
}

Matrix matrix_from_json(const Field& field, const Json& j, const std::string& pointer) {
  std::size_t rows = count_field(j, "rows", pointer), cols = count_field(j, "cols", pointer);
  const Json& e = field_of(j, "entries", pointer);
  std::string eptr = child(pointer, "entries");
  if (!e.is_array()) throw InputError("expected an array of field elements", eptr);
  if (e.size() != rows * cols)
    throw InputError("expected " + std::to_string(rows * cols) + " entries, found " + std::to_string(e.size()), eptr);
  std::vector<Scalar> values;
  values.reserve(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::string ptr = child(eptr, i);
    std::string s = string_of(e[i], ptr);
    values.push_back(at_pointer(ptr, [&] { return field.parse(s); }));
  }
  return Matrix::from_scalars(field, rows, cols, values);
}

Json module_to_json(const Module& m) {
  Json j;
  j["kind"] = "actions";
  j["dim"] = m.dim();
  Json acts = Json::array();
  for (const auto& x : m.variable_actions()) acts.push_back(matrix_to_json(x));
  j["actions"] = acts;
  return j;
}

Module module_from_json(const AlgebraRef& algebra, const Json& j, const std::string& pointer,
                        const std::map<std::string, Module>& named) {
  std::string kind = string_field(j, "kind", pointer);
  auto ref = [&](const std::string& key) -> const Module& {
    std::string name = string_field(j, key, pointer);
    auto it = named.find(name);
    if (it == named.end()) throw InputError("unknown module '" + name + "'", child(pointer, key));
    return it->second;
  };
  if (kind == "free") return free_module(algebra, count_field(j, "rank", pointer));
  if (kind == "simple") return simple_module(algebra);
  if (kind == "zero") return zero_module(algebra);
  if (kind == "canonical") return canonical_module(algebra);
  if (kind == "cyclic") {
    std::string f = string_field(j, "element", pointer);
    Matrix r = at_pointer(child(pointer, "element"), [&] { return algebra->parse_element(f); });
    return cyclic_quotient(algebra, r);
  }
  if (kind == "presentation") {
    std::size_t g = count_field(j, "generators", pointer), r = count_field(j, "relations", pointer);
    const Json& e = field_of(j, "entries", pointer);
    std::string eptr = child(pointer, "entries");
    if (!e.is_array() || e.size() != g) throw InputError("expected " + std::to_string(g) + " rows", eptr);
    std::vector<std::vector<Matrix>> entries(g);
    for (std::size_t a = 0; a < g; ++a) {
      std::string rptr = child(eptr, a);
      if (!e[a].is_array() || e[a].size() != r) throw InputError("expected " + std::to_string(r) + " entries", rptr);
      for (std::size_t b = 0; b < r; ++b) {
        std::string ptr = child(rptr, b);
        std::string s = string_of(e[a][b], ptr);
        entries[a].push_back(at_pointer(ptr, [&] { return algebra->parse_element(s); }));
      }
    }
    return from_presentation(algebra, g, r, entries);
  }
  if (kind == "actions") {
    std::size_t d = count_field(j, "dim", pointer);
    const Json& acts = field_of(j, "actions", pointer);
    std::string aptr = child(pointer, "actions");
    if (!acts.is_array() || acts.size() != algebra->num_vars())
      throw InputError("expected one matrix per variable (" + std::to_string(algebra->num_vars()) + ")", aptr);
    std::vector<Matrix> xs;
    for (std::size_t i = 0; i < acts.size(); ++i) {
      std::string ptr = child(aptr, i);
      Matrix x = matrix_from_json(algebra->field(), acts[i], ptr);
      if (x.rows() != d || x.cols() != d) throw InputError("action must be " + std::to_string(d) + " x " + std::to_string(d), ptr);
      xs.push_back(std::move(x));
    }
    return at_pointer(aptr, [&] { return Module::checked(algebra, std::move(xs)); });
  }
  if (kind == "sum") {
    const Json& parts = field_of(j, "parts", pointer);
    if (!parts.is_array()) throw InputError("expected an array of module names", child(pointer, "parts"));
    std::vector<Module> ms;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::string ptr = child(child(pointer, "parts"), i);
      std::string name = string_of(parts[i], ptr);
      auto it = named.find(name);
      if (it == named.end()) throw InputError("unknown module '" + name + "'", ptr);
      ms.push_back(it->second);
    }
    return direct_sum(ms);
  }
  if (kind == "power") return power(ref("of"), count_field(j, "copies", pointer));
  if (kind == "syzygy") return syzygy(ref("of"), j.contains("n") ? count_field(j, "n", pointer) : 1);
  if (kind == "dual") return dual(ref("of"));
  throw InputError("unknown module kind '" + kind + "'", child(pointer, "kind"));
}

Json certificate_to_json(const ReducingSequence& seq) {
  Json j;
  j["target"] = to_string(seq.target);
  j["base"] = module_to_json(seq.base);
  Json steps = Json::array();
  for (const auto& s : seq.steps) {
    Json st;
    st["a"] = s.a;
    st["b"] = s.b;
    st["n"] = s.n;
    st["module"] = module_to_json(s.module);
    st["inject"] = matrix_to_json(s.inject);
    st["quotient"] = module_to_json(s.quotient);
    st["surject"] = matrix_to_json(s.surject);
    st["iso"] = matrix_to_json(s.iso);
    steps.push_back(st);
  }
  j["steps"] = steps;
  return j;
}

ReducingSequence certificate_from_json(const AlgebraRef& algebra, const Json& j, const std::string& pointer) {
  ReducingSequence seq;
  seq.target = target_from(string_field(j, "target", pointer), child(pointer, "target"));
  seq.base = module_from_json(algebra, field_of(j, "base", pointer), child(pointer, "base"));
  const Json& steps = field_of(j, "steps", pointer);
  std::string sptr = child(pointer, "steps");
  if (!steps.is_array()) throw InputError("expected an array of steps", sptr);
  const Field& f = algebra->field();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    std::string ptr = child(sptr, i);
    const Json& st = steps[i];
    ReducingStep s;
    s.a = count_field(st, "a", ptr);
    s.b = count_field(st, "b", ptr);
    s.n = count_field(st, "n", ptr);
    s.module = module_from_json(algebra, field_of(st, "module", ptr), child(ptr, "module"));
    s.inject = matrix_from_json(f, field_of(st, "inject", ptr), child(ptr, "inject"));
    s.quotient = module_from_json(algebra, field_of(st, "quotient", ptr), child(ptr, "quotient"));
    s.surject = matrix_from_json(f, field_of(st, "surject", ptr), child(ptr, "surject"));
    s.iso = matrix_from_json(f, field_of(st, "iso", ptr), child(ptr, "iso"));
    seq.steps.push_back(std::move(s));
  }
  return seq;
}

Workspace parse_workspace(const Json& doc) {
  if (!doc.is_object()) throw InputError("workspace must be a JSON object", "");
  Workspace ws;
  if (doc.contains("version")) {
    const Json& v = doc["version"];
    if (!v.is_string() || v.get<std::string>() != kWorkspaceVersion)
      throw InputError(std::string("unsupported version, expected '") + kWorkspaceVersion + "'", "/version");
  }
  AlgebraPresentation p = algebra_from_json(field_of(doc, "algebra", ""), "/algebra");
  ws.algebra = at_pointer("/algebra", [&] { return build_algebra(p); });
  if (doc.contains("modules")) {
    const Json& mods = doc["modules"];
    if (!mods.is_object()) throw InputError("expected an object of named modules", "/modules");
    // Definitions may refer to each other in any order.
    std::set<std::string> visiting;
    std::function<void(const std::string&)> resolve = [&](const std::string& name) {
      if (ws.modules.count(name)) return;
      std::string ptr = child("/modules", name);
      if (!visiting.insert(name).second) throw InputError("cyclic module definition", ptr);
      const Json& spec = mods[name];
      for (const char* key : {"of"})
        if (spec.is_object() && spec.contains(key) && spec[key].is_string() && mods.contains(spec[key].get<std::string>()))
          resolve(spec[key].get<std::string>());
      if (spec.is_object() && spec.contains("parts") && spec["parts"].is_array())
        for (const auto& part : spec["parts"])
          if (part.is_string() && mods.contains(part.get<std::string>())) resolve(part.get<std::string>());
      ws.modules.emplace(name, module_from_json(ws.algebra, spec, ptr, ws.modules));
      visiting.erase(name);
    };
    for (auto it = mods.begin(); it != mods.end(); ++it) resolve(it.key());
  }
  if (doc.contains("certificates")) {
    const Json& certs = doc["certificates"];
    if (!certs.is_object()) throw InputError("expected an object of named certificates", "/certificates");
    for (auto it = certs.begin(); it != certs.end(); ++it)
      ws.certificates.emplace(it.key(), certificate_from_json(ws.algebra, it.value(), child("/certificates", it.key())));
  }
  return ws;
}

Workspace parse_workspace_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what(), "");
  }
  return parse_workspace(doc);
}

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open workspace file '" + path + "'", "");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_workspace_text(buf.str());
}

}  // namespace artin
