// artin: command-line front end over the C API.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "artin/artin.h"

namespace {

using Json = nlohmann::ordered_json;

struct Bounds {
  std::size_t max_r = 1, max_a = 4, max_b = 1, max_n = 1, budget = 16;
  std::uint64_t seed = 1;
  bool no_prune = false;

  void add_to(CLI::App* app) {
    app->add_option("--max-r", max_r, "longest sequence searched")->capture_default_str();
    app->add_option("--max-a", max_a, "largest a")->capture_default_str();
    app->add_option("--max-b", max_b, "largest b")->capture_default_str();
    app->add_option("--max-n", max_n, "largest syzygy degree n")->capture_default_str();
    app->add_option("--budget", budget, "Ext^1 classes tried per node")->capture_default_str();
    app->add_option("--seed", seed, "seed for random classes")->capture_default_str();
    app->add_flag("--no-prune", no_prune, "keep candidates that are not torsionless");
  }
  void write(Json& req) const {
    req["max_r"] = max_r;
    req["max_a"] = max_a;
    req["max_b"] = max_b;
    req["max_n"] = max_n;
    req["budget"] = budget;
    req["seed"] = seed;
    req["prune"] = !no_prune;
  }
};

int emit(artin_status st, artin_report* rep) {
  if (rep) {
    std::cout << artin_report_json(rep) << '\n';
    std::string summary = artin_report_summary(rep);
    if (!summary.empty()) std::cerr << summary << (summary.back() == '\n' ? "" : "\n");
    artin_report_free(rep);
  }
  return static_cast<int>(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homological computations over Artinian local algebras"};
  app.set_version_flag("--version", std::string(artin_version()));
  app.require_subcommand(1);
  std::string workspace;
  app.add_option("-w,--workspace", workspace, "workspace JSON file");

  Json req;
  std::size_t window = 0;
  bool window_set = false;
  auto add_window = [&](CLI::App* sub, std::size_t fallback) {
    sub->add_option_function<std::size_t>(
           "--window", [&](const std::size_t& w) { window = w, window_set = true; }, "window (default " +
                                                                                         std::to_string(fallback) + ")");
  };
  std::string a, b, id, module, certificate, with, target = "pd", filter;
  bool differentials = false;
  Bounds bounds;

  auto* algebra = app.add_subcommand("algebra", "algebra commands")->require_subcommand(1);
  auto* info = algebra->add_subcommand("info", "basis, socle and module summary");

  auto* resolve = app.add_subcommand("resolve", "minimal free resolution of a module");
  resolve->add_option("module", a, "module name")->required();
  resolve->add_flag("--differentials", differentials, "include the differentials as ring elements");
  add_window(resolve, 4);

  auto* ext = app.add_subcommand("ext", "dim Ext^i(M, N) on a window");
  ext->add_option("M", a, "first module")->required();
  ext->add_option("N", b, "second module")->required();
  add_window(ext, 10);

  auto* dual = app.add_subcommand("dual", "M* = Hom(M, R) and biduality");
  dual->add_option("module", a, "module name")->required();

  auto* push = app.add_subcommand("pushforward", "0 -> M -> F -> M_1 -> 0 from a cover of M*");
  push->add_option("module", a, "module name")->required();

  auto* iso = app.add_subcommand("iso", "isomorphism test");
  iso->add_option("M", a, "first module")->required();
  iso->add_option("N", b, "second module")->required();

  auto* reduce = app.add_subcommand("reduce", "reducing sequences")->require_subcommand(1);
  auto* search = reduce->add_subcommand("search", "bounded search for a certificate");
  search->add_option("module", a, "module name")->required();
  search->add_option("--target", target, "pd or gdim")->check(CLI::IsMember({"pd", "gdim"}))->capture_default_str();
  bounds.add_to(search);
  add_window(search, 10);
  auto* verify = reduce->add_subcommand("verify", "check a certificate");
  verify->add_option("certificate", a, "certificate name")->required();
  add_window(verify, 10);

  auto* theorem = app.add_subcommand("theorem", "run a theorem checker");
  theorem->add_option("id", id, "main, t2, prop27, cor33 or ptransfer")
      ->required()
      ->check(CLI::IsMember({"main", "t2", "prop27", "cor33", "ptransfer"}));
  theorem->add_option("--module", module, "module (prop27; optional for main and t2)");
  theorem->add_option("--certificate", certificate, "certificate (main, t2, ptransfer)");
  theorem->add_option("--with", with, "second module N (ptransfer)");
  bounds.add_to(theorem);
  add_window(theorem, 10);

  auto* corpus = app.add_subcommand("corpus", "acceptance fixtures")->require_subcommand(1);
  auto* run = corpus->add_subcommand("run", "run the fixtures");
  run->add_option("--filter", filter, "fixture name substring or criterion number");
  std::size_t samples = 20;
  auto* explore = corpus->add_subcommand("explore", "share of modules with pd certificates over small rings");
  explore->add_option("--samples", samples, "modules per ring")->capture_default_str();
  bounds.add_to(explore);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*run) {
    artin_report* rep = nullptr;
    artin_status st = artin_corpus_run(filter.empty() ? nullptr : filter.c_str(), &rep);
    return emit(st, rep);
  }

  if (*explore) {
    req = {{"command", "corpus_explore"}, {"samples", samples}};
    bounds.write(req);
    artin_report* rep = nullptr;
    artin_status st = artin_run(nullptr, req.dump().c_str(), &rep);
    return emit(st, rep);
  }

  if (*info) {
    req["command"] = "algebra_info";
  } else if (*resolve) {
    req = {{"command", "resolve"}, {"module", a}};
    if (differentials) req["differentials"] = true;
  } else if (*ext) {
    req = {{"command", "ext"}, {"left", a}, {"right", b}};
  } else if (*dual) {
    req = {{"command", "dual"}, {"module", a}};
  } else if (*push) {
    req = {{"command", "pushforward"}, {"module", a}};
  } else if (*iso) {
    req = {{"command", "iso"}, {"left", a}, {"right", b}};
  } else if (*search) {
    req = {{"command", "reduce_search"}, {"module", a}, {"target", target}};
    bounds.write(req);
  } else if (*verify) {
    req = {{"command", "reduce_verify"}, {"certificate", a}};
  } else if (*theorem) {
    req = {{"command", "theorem"}, {"id", id}};
    if (!module.empty()) req["module"] = module;
    if (!certificate.empty()) req["certificate"] = certificate;
    if (!with.empty()) req["with"] = with;
    bounds.write(req);
  }
  if (window_set) req["window"] = window;

  if (workspace.empty()) {
    std::cerr << "--workspace is required for this command\n";
    std::cout << Json{{"tool", "artin"}, {"version", artin_version()}, {"status", "input_error"},
                      {"error", "--workspace is required for this command"}, {"pointer", ""}}
                     .dump(2)
              << '\n';
    return 2;
  }
  artin_workspace* ws = nullptr;
  artin_report* err = nullptr;
  artin_status st = artin_workspace_load(workspace.c_str(), &ws, &err);
  if (st != ARTIN_OK) return emit(st, err);
  artin_report* rep = nullptr;
  st = artin_run(ws, req.dump().c_str(), &rep);
  artin_workspace_free(ws);
  return emit(st, rep);
}
