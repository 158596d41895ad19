#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "artin/algebra.hpp"
#include "artin/module.hpp"
#include "artin/reducing.hpp"

namespace artin {

using Json = nlohmann::ordered_json;

inline constexpr const char* kWorkspaceVersion = "artin-workspace/1";
inline constexpr const char* kToolVersion = "0.1.0";

/// A parsed workspace file: one algebra, named modules, named certificates.
struct Workspace {
  AlgebraRef algebra;
  std::map<std::string, Module> modules;
  std::map<std::string, ReducingSequence> certificates;

  /// Throws InputError pointing at `pointer` when the name is unknown.
  const Module& module(const std::string& name, const std::string& pointer = {}) const;
  const ReducingSequence& certificate(const std::string& name, const std::string& pointer = {}) const;
};

/// Throws InputError with a JSON pointer to the offending field.
Workspace parse_workspace(const Json& doc);
Workspace parse_workspace_text(const std::string& text);
Workspace load_workspace(const std::string& path);

AlgebraPresentation algebra_from_json(const Json& j, const std::string& pointer);
Json algebra_to_json(const AlgebraPresentation& p);

/// {"rows": r, "cols": c, "entries": [row-major field-element strings]}
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& field, const Json& j, const std::string& pointer);

/// Module as {"kind": "actions", "dim": d, "actions": [one matrix per variable]}.
Json module_to_json(const Module& m);
/// Any module kind; names refer to `named` (kinds sum, power, syzygy, dual).
Module module_from_json(const AlgebraRef& algebra, const Json& j, const std::string& pointer,
                        const std::map<std::string, Module>& named = {});

/// Self-contained certificate: base module, target and full step data.
Json certificate_to_json(const ReducingSequence& seq);
ReducingSequence certificate_from_json(const AlgebraRef& algebra, const Json& j, const std::string& pointer);

}  // namespace artin
