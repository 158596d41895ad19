#include <doctest.h>

#include <random>

#include "artin/invariants.hpp"
#include "artin/reducing.hpp"

using namespace artin;

namespace {

AlgebraRef make(unsigned p, std::vector<std::string> vars, unsigned n, std::vector<std::string> rels = {}) {
  AlgebraPresentation a;
  a.field = Field::prime(p);
  a.variables = std::move(vars);
  a.nilpotency = n;
  a.relations = std::move(rels);
  return build_algebra(a);
}

Module random_presented(const AlgebraRef& R, std::mt19937_64& rng, std::size_t max_g, std::size_t max_r) {
  std::size_t g = 1 + rng() % max_g, r = rng() % (max_r + 1);
  std::vector<std::vector<Matrix>> entries(g, std::vector<Matrix>(r));
  for (auto& row : entries)
    for (auto& e : row) {
      e = R->zero();
      if (rng() % 2) e = Matrix::random(R->field(), R->dim(), 1, rng);
    }
  return from_presentation(R, g, r, entries);
}

// 0 -> k^4 -> R^2 -> Ωk -> 0 over k[x,y]/(x,y)^2, written out by hand.
ReducingSequence plane_certificate(const AlgebraRef& R) {
  Module k = simple_module(R);
  Module ok = k.cover().syzygy;
  const FreeCover& c = ok.cover();
  IsoResult iso = is_isomorphic(power(k, 4), c.syzygy);
  REQUIRE(iso.verdict == IsoVerdict::Yes);
  ReducingSequence seq;
  seq.base = k;
  seq.target = Target::PD;
  ReducingStep s;
  s.a = 4;
  s.b = 1;
  s.n = 1;
  s.module = free_module(R, 2);
  s.inject = c.kernel * iso.witness;
  s.quotient = ok;
  s.surject = c.map;
  s.iso = Matrix::identity(R->field(), ok.dim());
  seq.steps.push_back(s);
  return seq;
}

ReducingSequence split_sequence(const Module& m, std::size_t a, std::size_t b, std::size_t n, Target t) {
  const Field& f = m.field();
  Module ka = power(m, a);
  Module x = power(syzygy(m, n), b);
  ReducingSequence seq;
  seq.base = m;
  seq.target = t;
  ReducingStep s;
  s.a = a;
  s.b = b;
  s.n = n;
  s.module = direct_sum({ka, x});
  s.inject = Matrix::vstack(std::vector<Matrix>{Matrix::identity(f, ka.dim()), Matrix(f, x.dim(), ka.dim())});
  s.quotient = x;
  s.surject = Matrix::hstack(std::vector<Matrix>{Matrix(f, x.dim(), ka.dim()), Matrix::identity(f, x.dim())});
  s.iso = Matrix::identity(f, x.dim());
  seq.steps.push_back(s);
  return seq;
}

}  // namespace

TEST_CASE("verify accepts the plane certificate and rejects corruptions") {
  auto R = make(2, {"x", "y"}, 2);
  ReducingSequence seq = plane_certificate(R);
  VerifyReport rep = verify(seq, 10);
  CHECK(rep.accepted);
  CHECK(rep.terminal == "free");

  ReducingSequence bad = seq;
  bad.steps[0].iso = Matrix(R->field(), bad.steps[0].iso.rows(), bad.steps[0].iso.cols());
  rep = verify(bad, 10);
  CHECK_FALSE(rep.accepted);
  CHECK(rep.step == 1);
  CHECK(rep.reason.find("syzygy mismatch") != std::string::npos);

  bad = seq;
  bad.steps[0].inject = Matrix(R->field(), 6, 4);
  rep = verify(bad, 10);
  CHECK_FALSE(rep.accepted);
  CHECK(rep.step == 1);

  bad = seq;
  bad.steps[0].a = 3;
  CHECK_FALSE(verify(bad, 10).accepted);

  // The same sequence with target gdim is also accepted.
  ReducingSequence g = seq;
  g.target = Target::GDIM;
  CHECK(verify(g, 10).accepted);
}

TEST_CASE("r = 0 sequences") {
  auto R = make(2, {"x", "y"}, 2);
  ReducingSequence free_seq;
  free_seq.base = free_module(R, 2);
  CHECK(verify(free_seq, 10).accepted);
  ReducingSequence k_seq;
  k_seq.base = simple_module(R);
  VerifyReport rep = verify(k_seq, 10);
  CHECK_FALSE(rep.accepted);
  CHECK(rep.step == 0);
  k_seq.target = Target::GDIM;
  CHECK_FALSE(verify(k_seq, 10).accepted);
}

TEST_CASE("search on the plane ring") {
  auto R = make(2, {"x", "y"}, 2);
  SearchConfig cfg;
  cfg.max_r = 1;
  cfg.max_a = 4;
  cfg.max_b = 1;
  cfg.max_n = 2;
  SearchStats stats;
  auto seq = search(simple_module(R), cfg, Target::PD, &stats);
  REQUIRE(seq);
  CHECK(seq->length() == 1);
  CHECK(seq->steps[0].a == 4);
  CHECK(seq->steps[0].b == 1);
  CHECK(seq->steps[0].n == 1);
  CHECK(stats.heuristic == "h1");
  CHECK(verify(*seq, 10).accepted);

  cfg.max_n = 1;
  Module rx = cyclic_quotient(R, R->variable(0));
  CHECK_FALSE(search(rx, cfg, Target::PD));
  CHECK_FALSE(search(rx, cfg, Target::GDIM));

  auto fr = search(free_module(R, 1), cfg, Target::PD);
  REQUIRE(fr);
  CHECK(fr->length() == 0);

  // R (+) k needs a free correction in the free-cover sequence.
  Module rk = direct_sum({free_module(R, 1), simple_module(R)});
  auto s2 = search(rk, cfg, Target::GDIM);
  REQUIRE(s2);
  CHECK(s2->length() == 1);
  CHECK(s2->steps[0].a == 4);
  CHECK(verify(*s2, 10).accepted);
}

TEST_CASE("search without pruning agrees on a small negative case") {
  auto R = make(2, {"x", "y"}, 2);
  SearchConfig cfg;
  cfg.max_r = 1;
  cfg.max_a = 2;
  cfg.max_b = 1;
  cfg.max_n = 1;
  cfg.budget = 4;
  cfg.prune_torsionless = false;
  SearchStats stats;
  CHECK_FALSE(search(cyclic_quotient(R, R->variable(0)), cfg, Target::PD, &stats));
  CHECK(stats.candidates > 2);
  CHECK(stats.pruned == 0);
}

TEST_CASE("embedding dimension three needs a = 9") {
  auto R = make(3, {"x", "y", "z"}, 2);
  SearchConfig cfg;
  cfg.max_r = 1;
  cfg.max_a = 9;
  auto seq = search(simple_module(R), cfg, Target::PD);
  REQUIRE(seq);
  CHECK(seq->steps[0].a == 9);
  CHECK(verify(*seq, 10).accepted);
}

TEST_CASE("retractions and dropping free summands") {
  auto R = make(2, {"x"}, 3);
  Module k = simple_module(R);
  Module m = direct_sum({k, free_module(R, 1)});
  Matrix incl = Matrix::vstack(std::vector<Matrix>{Matrix::identity(R->field(), 1), Matrix(R->field(), 3, 1)});
  auto rho = find_retraction(k, m, incl);
  REQUIRE(rho);
  CHECK(*rho * incl == Matrix::identity(R->field(), 1));
  // k -> R onto the socle does not split.
  Matrix socle_incl = R->socle();
  CHECK_FALSE(find_retraction(k, free_module(R, 1), socle_incl));

  for (std::size_t level = 1; level <= 3; ++level) {
    Matrix iso = omega_drop_free(k, 2, level);
    Module lhs = syzygy(k, level);
    Module rhs = syzygy(direct_sum({k, free_module(R, 2)}), level);
    CHECK(ModuleMap{lhs, rhs, iso}.is_isomorphism());
    CHECK(ModuleMap{lhs, rhs, iso}.is_r_linear());
  }
}

TEST_CASE("syzygy transfer of the plane certificate") {
  auto R = make(2, {"x", "y"}, 2);
  ReducingSequence seq = plane_certificate(R);
  ReducingSequence out = transform_syzygy(seq, 10);
  CHECK(out.base.dim() == 2);
  CHECK(out.length() == 1);
  CHECK(out.steps[0].a == 4);
  VerifyReport rep = verify(out, 10);
  CHECK(rep.accepted);
  if (!rep.accepted) MESSAGE(rep.reason);
}

TEST_CASE("cosyzygy transfer rejects without Ext vanishing") {
  auto R = make(2, {"x", "y"}, 2);
  ReducingSequence seq = plane_certificate(R);
  Module n = cyclic_quotient(R, R->variable(0));
  IsoResult iso = is_isomorphic(n.cover().syzygy, simple_module(R));
  REQUIRE(iso.verdict == IsoVerdict::Yes);
  CosyzygyResult res = transform_cosyzygy(seq, n, iso.witness, 10);
  CHECK_FALSE(res.accepted);
  CHECK(res.reason.find("precondition") != std::string::npos);
}

TEST_CASE("transfer round trip over a gorenstein ring") {
  auto R = make(2, {"x"}, 3);
  std::mt19937_64 rng(7);
  SearchConfig cfg;
  cfg.max_r = 1;
  cfg.max_a = 2;
  cfg.max_b = 1;
  cfg.max_n = 1;
  for (int trial = 0; trial < 8; ++trial) {
    Module n = random_presented(R, rng, 3, 3);
    for (Target t : {Target::PD, Target::GDIM}) {
      auto seq = search(n, cfg, t);
      REQUIRE(seq);
      REQUIRE(verify(*seq, 10).accepted);
      ReducingSequence down = transform_syzygy(*seq, 10);
      VerifyReport rd = verify(down, 10);
      CHECK(rd.accepted);
      if (!rd.accepted) MESSAGE(rd.reason);
      CosyzygyResult up = transform_cosyzygy(down, n, Matrix::identity(R->field(), down.base.dim()), 10);
      CHECK(up.accepted);
      if (!up.accepted) MESSAGE(up.reason);
      CHECK(up.sequence.base.dim() == n.dim());
      CHECK(up.sequence.length() == seq->length());
    }
  }
}

TEST_CASE("transfers through split steps with n = 1 and n = 2") {
  auto R = make(3, {"x"}, 2);
  auto R3 = make(2, {"x"}, 3);
  std::mt19937_64 rng(11);
  for (const auto& ring : {R, R3})
    for (int trial = 0; trial < 4; ++trial) {
      Module n = random_presented(ring, rng, 2, 2);
      for (std::size_t deg : {1, 2}) {
        ReducingSequence seq = split_sequence(n, 2, 1, deg, Target::GDIM);
        REQUIRE(verify(seq, 6).accepted);
        ReducingSequence down = transform_syzygy(seq, 6);
        VerifyReport rd = verify(down, 6);
        CHECK(rd.accepted);
        if (!rd.accepted) MESSAGE(rd.reason);
        CosyzygyResult up = transform_cosyzygy(down, n, Matrix::identity(ring->field(), down.base.dim()), 6);
        CHECK(up.accepted);
        if (!up.accepted) MESSAGE(up.reason);
        // A second round exercises free summands carried through the transfer.
        ReducingSequence down2 = transform_syzygy(up.sequence, 6);
        CHECK(verify(down2, 6).accepted);
      }
    }
}
