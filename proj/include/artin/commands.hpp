#pragma once

#include <string>

#include "artin/invariants.hpp"
#include "artin/workspace.hpp"

namespace artin {

enum class Status { Ok = 0, Rejected = 1, InputError = 2, Internal = 3 };

struct CommandResult {
  Status status = Status::Ok;
  Json report;
  std::string summary;  // one or a few human-readable lines
};

/// Runs one request such as {"command": "resolve", "module": "k", "window": 4}.
///
/// Commands: algebra_info, resolve, ext, dual, pushforward, iso, reduce_search,
/// reduce_verify, theorem, corpus_run, corpus_explore. `ws` may be null for the corpus commands.
/// Throws InputError (pointer into the request) for malformed requests.
CommandResult run_command(const Workspace* ws, const Json& request);

Json theorem_to_json(const TheoremReport& rep);
Json pinvariant_to_json(const PInvariant& p);
/// Ring-element strings of a map between free modules given by generator images.
Json free_map_to_json(const LocalAlgebra& ring, const Matrix& images, std::size_t rows, std::size_t cols);

}  // namespace artin
