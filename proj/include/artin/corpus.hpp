#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "artin/invariants.hpp"
#include "artin/workspace.hpp"

namespace artin {

AlgebraRef make_algebra(unsigned p, std::vector<std::string> vars, unsigned nilpotency,
                        std::vector<std::string> relations = {});
/// k[x,y]/(x,y)^2 over F_p.
AlgebraRef plane_ring(unsigned p = 2);
/// k[x_1..x_e]/m^2 over F_p.
AlgebraRef square_zero_ring(unsigned p, std::size_t e);
/// k[x]/(x^n) over F_p.
AlgebraRef truncated_line(unsigned p, unsigned n);

/// Cokernel of a seeded random matrix with entries in m: 1..max_gens generators, 0..max_rels relations.
Module random_module(const AlgebraRef& algebra, std::size_t max_gens, std::size_t max_rels, std::uint64_t seed);

/// 0 -> k^{e^2} -> R^e -> Ωk -> 0 for a ring with m^2 = 0, written out from the minimal cover.
ReducingSequence square_zero_certificate(const AlgebraRef& algebra);

struct PdShareRow {
  std::string ring;
  std::size_t samples = 0;
  std::size_t found = 0;
  double fraction = 0;
};
/// Fraction of sampled modules with a reducing pd certificate within cfg, per ring. Exploratory only.
std::vector<PdShareRow> explore_pd_share(const std::vector<AlgebraPresentation>& family, const SearchConfig& cfg,
                                std::size_t samples = 20, std::uint64_t seed = 1);

struct FixtureResult {
  std::string name;
  std::size_t criterion = 0;
  std::string title;
  bool passed = false;
  std::vector<Check> checks;
  Json details = Json::object();
  double seconds = 0;  // wall time, kept out of JSON reports
};

struct Fixture {
  std::string name;
  std::size_t criterion = 0;
  std::string title;
  std::function<void(FixtureResult&)> body;
};

/// The acceptance fixtures, ordered by criterion.
const std::vector<Fixture>& fixtures();

/// Runs the fixtures whose name contains `filter` (or whose criterion number equals it) concurrently.
/// Results are ordered by fixture name.
std::vector<FixtureResult> run_fixtures(const std::string& filter = {});

Json check_to_json(const Check& c);
Json fixture_to_json(const FixtureResult& r);

}  // namespace artin
