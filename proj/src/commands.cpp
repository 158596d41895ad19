#include "artin/commands.hpp"

#include <optional>

#include "artin/corpus.hpp"

namespace artin {

namespace {

std::string ptr(const std::string& key) { return "/" + key; }

const Json* find(const Json& req, const std::string& key) {
  auto it = req.find(key);
  return it == req.end() || it->is_null() ? nullptr : &*it;
}

std::string get_string(const Json& req, const std::string& key, std::optional<std::string> fallback = {}) {
  const Json* v = find(req, key);
  if (!v) {
    if (fallback) return *fallback;
    throw InputError("missing field '" + key + "'", ptr(key));
  }
  if (!v->is_string()) throw InputError("expected a string", ptr(key));
  return v->get<std::string>();
}

std::size_t get_count(const Json& req, const std::string& key, std::size_t fallback) {
  const Json* v = find(req, key);
  if (!v) return fallback;
  if (!v->is_number_integer() || v->get<long long>() < 0) throw InputError("expected a nonnegative integer", ptr(key));
  return v->get<std::size_t>();
}

bool get_bool(const Json& req, const std::string& key, bool fallback) {
  const Json* v = find(req, key);
  if (!v) return fallback;
  if (!v->is_boolean()) throw InputError("expected true or false", ptr(key));
  return v->get<bool>();
}

const Workspace& need(const Workspace* ws) {
  if (!ws) throw InputError("this command needs a workspace", "");
  return *ws;
}

const Module& module_arg(const Workspace& ws, const Json& req, const std::string& key) {
  return ws.module(get_string(req, key), ptr(key));
}

Target target_arg(const Json& req) {
  std::string t = get_string(req, "target", std::string("pd"));
  if (t == "pd") return Target::PD;
  if (t == "gdim") return Target::GDIM;
  throw InputError("target must be 'pd' or 'gdim'", ptr("target"));
}

SearchConfig search_config(const Json& req, std::size_t window) {
  SearchConfig cfg;
  cfg.max_r = get_count(req, "max_r", cfg.max_r);
  cfg.max_a = get_count(req, "max_a", cfg.max_a);
  cfg.max_b = get_count(req, "max_b", cfg.max_b);
  cfg.max_n = get_count(req, "max_n", cfg.max_n);
  cfg.budget = get_count(req, "budget", cfg.budget);
  cfg.seed = get_count(req, "seed", cfg.seed);
  cfg.prune_torsionless = get_bool(req, "prune", cfg.prune_torsionless);
  cfg.window = window;
  if (cfg.max_a == 0 || cfg.max_b == 0 || cfg.max_n == 0) throw InputError("bounds a, b, n must be at least 1", "");
  return cfg;
}

Json config_to_json(const SearchConfig& cfg) {
  return Json{{"max_r", cfg.max_r}, {"max_a", cfg.max_a}, {"max_b", cfg.max_b}, {"max_n", cfg.max_n},
              {"budget", cfg.budget}, {"seed", cfg.seed},   {"window", cfg.window}, {"prune", cfg.prune_torsionless}};
}

std::string dims_text(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

CommandResult algebra_info(const Workspace& ws) {
  const LocalAlgebra& R = *ws.algebra;
  CommandResult out;
  Json& j = out.report;
  j["algebra"] = algebra_to_json(R.presentation());
  j["dim"] = R.dim();
  Json basis = Json::array();
  for (std::size_t b = 0; b < R.dim(); ++b) basis.push_back(R.basis_label(b));
  j["basis"] = basis;
  j["embedding_dim"] = R.embedding_dim();
  j["socle_dim"] = R.socle().cols();
  j["gorenstein"] = R.is_gorenstein();
  j["maximal_ideal_squares_to_zero"] = maximal_ideal_squares_to_zero(R);
  Json mods = Json::object();
  for (const auto& [name, m] : ws.modules) mods[name] = Json{{"dim", m.dim()}, {"generators", m.minimal_generator_count()}};
  j["modules"] = mods;
  Json certs = Json::array();
  for (const auto& [name, c] : ws.certificates) certs.push_back(name);
  j["certificates"] = certs;
  out.summary = "dim R = " + std::to_string(R.dim()) + ", embedding dimension " + std::to_string(R.embedding_dim()) +
                (R.is_gorenstein() ? ", gorenstein" : ", not gorenstein");
  return out;
}

CommandResult resolve_cmd(const Workspace& ws, const Json& req) {
  const Module& m = module_arg(ws, req, "module");
  std::size_t w = get_count(req, "window", 4);
  FreeResolution res = resolve(m, w);
  CommandResult out;
  Json& j = out.report;
  j["module"] = get_string(req, "module");
  j["window"] = w;
  j["betti"] = res.betti();
  j["syzygy_dims"] = res.syzygy_dims();
  if (auto per = detect_periodicity(res))
    j["periodicity"] = Json{{"start", per->first}, {"period", per->second}};
  else
    j["periodicity"] = nullptr;
  if (auto tail = res.semisimple_tail())
    j["semisimple_tail"] = Json{{"index", tail->first}, {"multiplicity", tail->second}};
  else
    j["semisimple_tail"] = nullptr;
  if (get_bool(req, "differentials", false)) {
    Json ds = Json::array();
    for (std::size_t i = 1; i <= w; ++i)
      ds.push_back(free_map_to_json(m.ring(), res.differential(i), res.betti()[i - 1], res.betti()[i]));
    j["differentials"] = ds;
  }
  out.summary = "betti " + dims_text(res.betti());
  return out;
}

CommandResult ext_cmd(const Workspace& ws, const Json& req) {
  const Module& m = module_arg(ws, req, "left");
  const Module& n = module_arg(ws, req, "right");
  std::size_t w = get_count(req, "window", 10);
  std::vector<std::size_t> dims = ext_dims(m, n, w);
  PInvariant p = p_invariant_from_dims(dims);
  CommandResult out;
  out.report["left"] = get_string(req, "left");
  out.report["right"] = get_string(req, "right");
  out.report["window"] = w;
  out.report["dims"] = dims;
  out.report["P"] = pinvariant_to_json(p);
  out.summary = "dim Ext^i for i = 0.." + std::to_string(w) + ": " + dims_text(dims) + ", P = " + p.to_string();
  return out;
}

CommandResult dual_cmd(const Workspace& ws, const Json& req) {
  const Module& m = module_arg(ws, req, "module");
  Biduality b = biduality(m);
  const std::size_t lambda_rank = b.lambda.rank();
  CommandResult out;
  Json& j = out.report;
  j["module"] = get_string(req, "module");
  j["dim"] = b.dual.dim();
  j["generators"] = b.dual.minimal_generator_count();
  j["bidual_dim"] = b.bidual.dim();
  j["torsionless"] = lambda_rank == m.dim();
  j["reflexive"] = lambda_rank == m.dim() && b.bidual.dim() == m.dim();
  j["dual"] = module_to_json(b.dual);
  out.summary = "dim M* = " + std::to_string(b.dual.dim()) + (j["reflexive"].get<bool>() ? ", reflexive"
                                                             : j["torsionless"].get<bool>() ? ", torsionless"
                                                                                            : ", not torsionless");
  return out;
}

CommandResult pushforward_cmd(const Workspace& ws, const Json& req) {
  const Module& m = module_arg(ws, req, "module");
  CommandResult out;
  out.report["module"] = get_string(req, "module");
  if (!is_torsionless(m)) {
    out.status = Status::Rejected;
    out.report["reason"] = "module is not torsionless";
    out.summary = "rejected: module is not torsionless";
    return out;
  }
  Pushforward pf = pushforward(m);
  const ShortExactSequence& s = pf.sequence;
  auto defect = s.defect();
  std::size_t ext1 = ext(s.right, free_module(ws.algebra, 1), 1).dim();
  out.report["rank"] = pf.rank;
  out.report["cokernel_dim"] = s.right.dim();
  out.report["exact"] = !defect;
  out.report["ext1_cokernel_R"] = ext1;
  out.report["cokernel"] = module_to_json(s.right);
  out.report["inject"] = matrix_to_json(s.inject);
  if (defect || ext1 != 0) out.status = Status::Internal;
  out.summary = "0 -> M -> R^" + std::to_string(pf.rank) + " -> M_1 -> 0 with dim M_1 = " +
                std::to_string(s.right.dim());
  return out;
}

CommandResult iso_cmd(const Workspace& ws, const Json& req) {
  const Module& m = module_arg(ws, req, "left");
  const Module& n = module_arg(ws, req, "right");
  IsoOptions opt;
  opt.budget = get_count(req, "budget", opt.budget);
  opt.seed = get_count(req, "seed", opt.seed);
  IsoResult r = is_isomorphic(m, n, opt);
  CommandResult out;
  const char* verdict = r.verdict == IsoVerdict::Yes ? "yes" : r.verdict == IsoVerdict::No ? "no" : "unknown";
  out.report["left"] = get_string(req, "left");
  out.report["right"] = get_string(req, "right");
  out.report["verdict"] = verdict;
  if (!r.reason.empty()) out.report["reason"] = r.reason;
  if (r.verdict == IsoVerdict::Yes) out.report["witness"] = matrix_to_json(r.witness);
  out.status = r.verdict == IsoVerdict::Yes ? Status::Ok : Status::Rejected;
  out.summary = std::string("isomorphic: ") + verdict + (r.reason.empty() ? "" : " (" + r.reason + ")");
  return out;
}

CommandResult search_cmd(const Workspace& ws, const Json& req) {
  const Module& m = module_arg(ws, req, "module");
  Target t = target_arg(req);
  SearchConfig cfg = search_config(req, get_count(req, "window", 10));
  SearchStats stats;
  auto seq = search(m, cfg, t, &stats);
  CommandResult out;
  Json& j = out.report;
  j["module"] = get_string(req, "module");
  j["target"] = to_string(t);
  j["window"] = cfg.window;
  j["bounds"] = config_to_json(cfg);
  j["stats"] = Json{{"nodes", stats.nodes},
                    {"candidates", stats.candidates},
                    {"pruned", stats.pruned},
                    {"iso_tests", stats.iso_tests}};
  if (!seq) {
    out.status = Status::Rejected;
    j["found"] = false;
    j["reason"] = "no certificate within bounds";
    out.summary = "no certificate within bounds";
    return out;
  }
  j["found"] = true;
  j["length"] = seq->length();
  if (!stats.heuristic.empty()) j["stats"]["heuristic"] = stats.heuristic;
  Json shape = Json::array();
  for (const auto& s : seq->steps) shape.push_back(Json{{"a", s.a}, {"b", s.b}, {"n", s.n}, {"dim", s.module.dim()}});
  j["steps"] = shape;
  j["certificate"] = certificate_to_json(*seq);
  out.summary = "found a " + to_string(t) + " certificate of length " + std::to_string(seq->length());
  for (const auto& s : seq->steps)
    out.summary += " (a,b,n) = (" + std::to_string(s.a) + "," + std::to_string(s.b) + "," + std::to_string(s.n) + ")";
  return out;
}

VerifyReport run_verify(const ReducingSequence& seq, std::size_t w, Json& j) {
  VerifyReport v = verify(seq, w);
  j["window"] = w;
  j["target"] = to_string(seq.target);
  j["length"] = seq.length();
  j["accepted"] = v.accepted;
  if (!v.accepted) {
    j["failed_step"] = v.step;
    j["reason"] = v.reason;
  }
  j["terminal"] = v.terminal;
  return v;
}

CommandResult verify_cmd(const Workspace& ws, const Json& req) {
  std::string name = get_string(req, "certificate");
  const ReducingSequence& seq = ws.certificate(name, ptr("certificate"));
  CommandResult out;
  out.report["certificate"] = name;
  VerifyReport v = run_verify(seq, get_count(req, "window", 10), out.report);
  out.status = v.accepted ? Status::Ok : Status::Rejected;
  out.summary = v.accepted ? "accepted (" + v.terminal + ")"
                           : "rejected at step " + std::to_string(v.step) + ": " + v.reason;
  return out;
}

CommandResult theorem_cmd(const Workspace& ws, const Json& req) {
  std::string id = get_string(req, "id");
  std::size_t w = get_count(req, "window", 10);
  auto cert = [&]() -> const ReducingSequence& { return ws.certificate(get_string(req, "certificate"), ptr("certificate")); };
  auto module_or_base = [&](const ReducingSequence& seq) -> const Module& {
    return find(req, "module") ? module_arg(ws, req, "module") : seq.base;
  };
  TheoremReport rep;
  CommandResult out;
  if (id == "main") {
    const ReducingSequence& seq = cert();
    rep = check_main_theorem(module_or_base(seq), seq, w);
  } else if (id == "t2") {
    const ReducingSequence& seq = cert();
    std::vector<SplitInjection> splits;
    rep = check_t2(module_or_base(seq), seq, w, &splits);
    Json sj = Json::array();
    for (const auto& s : splits)
      sj.push_back(Json{{"index", s.index}, {"inclusion", matrix_to_json(s.inclusion)},
                        {"retraction", matrix_to_json(s.retraction)}});
    out.report["splits"] = sj;
  } else if (id == "prop27") {
    SearchConfig cfg = search_config(req, w);
    Prop27Outcome o;
    rep = check_prop27(module_arg(ws, req, "module"), cfg, &o);
    out.report["bounds"] = config_to_json(cfg);
    if (rep.hypotheses_hold())
      out.report["structure"] = Json{{"holds", o.structure.holds}, {"alpha", o.structure.alpha}, {"beta", o.structure.beta}};
  } else if (id == "cor33") {
    SearchConfig cfg = search_config(req, w);
    rep = check_cor33(ws.algebra, w, cfg);
    out.report["bounds"] = config_to_json(cfg);
  } else if (id == "ptransfer") {
    rep = check_P_transfer(cert(), module_arg(ws, req, "with"), w);
  } else {
    throw InputError("unknown theorem '" + id + "' (main, t2, prop27, cor33, ptransfer)", ptr("id"));
  }
  Json tj = theorem_to_json(rep);
  for (auto it = out.report.begin(); it != out.report.end(); ++it) tj[it.key()] = it.value();
  out.report = std::move(tj);
  out.status = rep.passed() ? Status::Ok : Status::Rejected;
  if (rep.passed()) {
    out.summary = id + ": passed";
  } else if (!rep.hypotheses_hold()) {
    out.summary = id + ": hypotheses do not hold";
  } else {
    out.summary = id + ": failed";
    if (!rep.counterexample.empty()) out.summary += " (" + rep.counterexample + ")";
  }
  return out;
}

CommandResult corpus_cmd(const Json& req) {
  std::string filter = get_string(req, "filter", std::string());
  std::vector<FixtureResult> results = run_fixtures(filter);
  CommandResult out;
  Json fx = Json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    fx.push_back(fixture_to_json(r));
    if (r.passed) ++passed;
    out.summary += std::string(r.passed ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.seconds).substr(0, 5) + " s)\n";
  }
  if (!filter.empty()) out.report["filter"] = filter;
  out.report["window"] = 10;
  out.report["fixtures"] = fx;
  out.report["passed"] = passed;
  out.report["total"] = results.size();
  if (results.empty()) throw InputError("no fixture matches '" + filter + "'", ptr("filter"));
  out.status = passed == results.size() ? Status::Ok : Status::Rejected;
  out.summary += std::to_string(passed) + "/" + std::to_string(results.size()) + " fixtures passed";
  return out;
}

CommandResult explore_cmd(const Json& req) {
  SearchConfig cfg = search_config(req, get_count(req, "window", 10));
  std::size_t samples = get_count(req, "samples", 20);
  std::vector<AlgebraPresentation> family;
  auto ring = [&](std::vector<std::string> vars, unsigned n, std::vector<std::string> rels) {
    AlgebraPresentation a;
    a.field = Field::prime(2);
    a.variables = std::move(vars);
    a.nilpotency = n;
    a.relations = std::move(rels);
    family.push_back(a);
  };
  ring({"x"}, 2, {});
  ring({"x"}, 3, {});
  ring({"x", "y"}, 3, {"x^2", "y^2"});
  ring({"x", "y"}, 2, {});
  ring({"x", "y"}, 3, {"x^2", "x*y"});
  CommandResult out;
  Json rows = Json::array();
  for (const auto& row : explore_pd_share(family, cfg, samples, cfg.seed)) {
    rows.push_back(Json{{"ring", row.ring}, {"samples", row.samples}, {"found", row.found}, {"fraction", row.fraction}});
    out.summary += row.ring + ": " + std::to_string(row.found) + "/" + std::to_string(row.samples) + "\n";
  }
  out.report["window"] = cfg.window;
  out.report["bounds"] = config_to_json(cfg);
  out.report["note"] = "exploratory: share of sampled modules with a pd certificate within bounds";
  out.report["rows"] = rows;
  return out;
}

}  // namespace

Json pinvariant_to_json(const PInvariant& p) {
  const char* kind = p.kind == PInvariant::Kind::Finite        ? "finite"
                     : p.kind == PInvariant::Kind::AboveWindow ? "above_window"
                                                               : "minus_infinity";
  Json j{{"kind", kind}, {"window", p.window}, {"text", p.to_string()}};
  if (p.kind == PInvariant::Kind::Finite) j["value"] = p.value;
  return j;
}

Json theorem_to_json(const TheoremReport& rep) {
  Json j;
  j["theorem"] = rep.theorem;
  j["window"] = rep.window;
  Json h = Json::array(), c = Json::array();
  for (const auto& x : rep.hypotheses) h.push_back(check_to_json(x));
  for (const auto& x : rep.conclusions) c.push_back(check_to_json(x));
  j["hypotheses"] = h;
  j["conclusions"] = c;
  j["hypotheses_hold"] = rep.hypotheses_hold();
  j["passed"] = rep.passed();
  if (!rep.counterexample.empty()) j["counterexample"] = rep.counterexample;
  return j;
}

Json free_map_to_json(const LocalAlgebra& ring, const Matrix& images, std::size_t rows, std::size_t cols) {
  const std::size_t d = ring.dim();
  Json grid = Json::array();
  for (std::size_t i = 0; i < rows; ++i) {
    Json row = Json::array();
    for (std::size_t l = 0; l < cols; ++l) row.push_back(ring.format_element(images.block(i * d, l, d, 1)));
    grid.push_back(row);
  }
  return Json{{"rows", rows}, {"cols", cols}, {"entries", grid}};
}

CommandResult run_command(const Workspace* ws, const Json& request) {
  if (!request.is_object()) throw InputError("request must be a JSON object", "");
  std::string cmd = get_string(request, "command");
  CommandResult out;
  if (cmd == "algebra_info") out = algebra_info(need(ws));
  else if (cmd == "resolve") out = resolve_cmd(need(ws), request);
  else if (cmd == "ext") out = ext_cmd(need(ws), request);
  else if (cmd == "dual") out = dual_cmd(need(ws), request);
  else if (cmd == "pushforward") out = pushforward_cmd(need(ws), request);
  else if (cmd == "iso") out = iso_cmd(need(ws), request);
  else if (cmd == "reduce_search") out = search_cmd(need(ws), request);
  else if (cmd == "reduce_verify") out = verify_cmd(need(ws), request);
  else if (cmd == "theorem") out = theorem_cmd(need(ws), request);
  else if (cmd == "corpus_run") out = corpus_cmd(request);
  else if (cmd == "corpus_explore") out = explore_cmd(request);
  else throw InputError("unknown command '" + cmd + "'", ptr("command"));

  Json head;
  head["tool"] = "artin";
  head["version"] = kToolVersion;
  head["workspace_version"] = kWorkspaceVersion;
  head["command"] = cmd;
  head["status"] = out.status == Status::Ok ? "ok" : out.status == Status::Rejected ? "rejected" : "internal_error";
  for (auto it = out.report.begin(); it != out.report.end(); ++it) head[it.key()] = it.value();
  out.report = std::move(head);
  return out;
}

}  // namespace artin
