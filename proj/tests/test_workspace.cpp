#include <doctest.h>

#include "artin/corpus.hpp"
#include "artin/workspace.hpp"

using namespace artin;

namespace {

std::string pointer_of(const std::string& text) {
  try {
    parse_workspace_text(text);
  } catch (const InputError& e) {
    return e.pointer();
  }
  return "<no error>";
}

const char* kPlane = R"({
  "version": "artin-workspace/1",
  "algebra": {"field": "Fp", "p": 2, "vars": ["x", "y"], "nilpotency": 2},
  "modules": {
    "sum": {"kind": "sum", "parts": ["R", "k"]},
    "R": {"kind": "free", "rank": 1},
    "k": {"kind": "simple"},
    "Ok": {"kind": "syzygy", "of": "k"},
    "M": {"kind": "presentation", "generators": 2, "relations": 1, "entries": [["x"], ["y"]]},
    "A": {"kind": "actions", "dim": 1, "actions": [{"rows": 1, "cols": 1, "entries": ["0"]},
                                                    {"rows": 1, "cols": 1, "entries": ["0"]}]}
  }
})";

}  // namespace

TEST_CASE("workspace parsing resolves names in any order") {
  Workspace ws = parse_workspace_text(kPlane);
  CHECK(ws.algebra->dim() == 3);
  CHECK(ws.module("sum").dim() == 4);
  CHECK(ws.module("Ok").dim() == 2);
  CHECK(ws.module("M").dim() == 5);
  CHECK(is_isomorphic(ws.module("A"), ws.module("k")).verdict == IsoVerdict::Yes);
  CHECK_THROWS_AS(ws.module("missing"), InputError);
}

TEST_CASE("schema violations carry JSON pointers") {
  CHECK(pointer_of("{") == "");
  CHECK(pointer_of(R"({"algebra": {"field": "Fp", "p": 6, "vars": ["x"], "nilpotency": 2}})") == "/algebra/p");
  CHECK(pointer_of(R"({"algebra": {"field": "F", "vars": ["x"], "nilpotency": 2}})") == "/algebra/field");
  CHECK(pointer_of(R"({"algebra": {"field": "Fp", "p": 2, "vars": ["x", "x"], "nilpotency": 2}})") ==
        "/algebra/vars/1");
  CHECK(pointer_of(R"({"algebra": {"field": "Fp", "p": 2, "vars": ["x"], "nilpotency": 2, "relations": ["x+"]}})") ==
        "/algebra/relations/0");
  CHECK(pointer_of(R"({"version": "other", "algebra": {}})") == "/version");
  const std::string alg = R"("algebra": {"field": "Fp", "p": 2, "vars": ["x"], "nilpotency": 3})";
  CHECK(pointer_of("{" + alg + R"(, "modules": {"a": {"kind": "dual", "of": "b"}}})") == "/modules/a/of");
  CHECK(pointer_of("{" + alg + R"(, "modules": {"a": {"kind": "power", "of": "b", "copies": 2},
                                                 "b": {"kind": "dual", "of": "a"}}})")
            .find("/modules/") == 0);
  CHECK(pointer_of("{" + alg + R"(, "modules": {"a": {"kind": "blob"}}})") == "/modules/a/kind");
  CHECK(pointer_of("{" + alg + R"(, "modules": {"a": {"kind": "cyclic", "element": "z"}}})") ==
        "/modules/a/element");
  CHECK(pointer_of("{" + alg + R"(, "modules": {"a": {"kind": "presentation", "generators": 1, "relations": 2,
                                                      "entries": [["x"]]}}})") == "/modules/a/entries/0");
  // x acting by a nonzero nilpotent-free scalar breaks x^3 = 0.
  CHECK(pointer_of("{" + alg + R"(, "modules": {"a": {"kind": "actions", "dim": 1,
                                                      "actions": [{"rows": 1, "cols": 1, "entries": ["1"]}]}}})") ==
        "/modules/a/actions");
  CHECK(pointer_of("{" + alg + R"(, "modules": {"a": {"kind": "actions", "dim": 1,
                                                      "actions": [{"rows": 1, "cols": 1, "entries": ["1/0"]}]}}})") ==
        "/modules/a/actions/0/entries/0");
  CHECK(pointer_of("{" + alg + R"(, "modules": {"a": {"kind": "actions", "dim": 2,
                                                      "actions": [{"rows": 2, "cols": 2, "entries": ["0"]}]}}})") ==
        "/modules/a/actions/0/entries");
  CHECK(pointer_of("{" + alg + R"(, "certificates": {"c": {"target": "pdx"}}})") == "/certificates/c/target");
}

TEST_CASE("matrices, modules and certificates round-trip through JSON") {
  AlgebraRef R = make_algebra(3, {"x", "y"}, 3, {"x^2"});
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Module m = random_module(R, 3, 3, seed);
    Module back = module_from_json(R, module_to_json(m), "");
    CHECK(back.variable_actions() == m.variable_actions());
  }
  Matrix q = Matrix::from_strings(Field::rationals(), 2, 2, {"1/2", "-3", "0", "7/5"});
  CHECK(matrix_from_json(Field::rationals(), matrix_to_json(q), "") == q);

  AlgebraRef P = plane_ring(2);
  ReducingSequence seq = square_zero_certificate(P);
  Json j = certificate_to_json(seq);
  ReducingSequence back = certificate_from_json(P, Json::parse(j.dump()), "/c");
  CHECK(verify(back, 10).accepted);
  CHECK(certificate_to_json(back) == j);

  Json doc;
  doc["algebra"] = algebra_to_json(P->presentation());
  doc["certificates"]["c"] = j;
  doc["certificates"]["c"]["steps"][0]["a"] = 3;
  Workspace ws = parse_workspace(doc);
  CHECK_FALSE(verify(ws.certificate("c"), 10).accepted);
}

TEST_CASE("rational algebras parse") {
  Workspace ws = parse_workspace_text(
      R"({"algebra": {"field": "Q", "vars": ["t"], "nilpotency": 4, "relations": ["t^3 - 1/2*t^3"]},
          "modules": {"k": {"kind": "simple"}}})");
  CHECK(ws.algebra->dim() == 3);
  CHECK(algebra_to_json(ws.algebra->presentation())["field"] == "Q");
}
