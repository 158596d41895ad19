#include <doctest.h>

#include <random>

#include "artin/homalg.hpp"
#include "artin/module.hpp"
#include "artin/resolution.hpp"

using namespace artin;

namespace {

AlgebraRef plane(unsigned p = 2) {
  AlgebraPresentation a;
  a.field = Field::prime(p);
  a.variables = {"x", "y"};
  a.nilpotency = 2;
  return build_algebra(a);
}

AlgebraRef truncated(unsigned p, unsigned n) {
  AlgebraPresentation a;
  a.field = Field::prime(p);
  a.variables = {"x"};
  a.nilpotency = n;
  return build_algebra(a);
}

}  // namespace

TEST_CASE("constructors") {
  auto R = plane();
  CHECK(free_module(R, 1).dim() == 3);
  Module k = simple_module(R);
  CHECK(k.dim() == 1);
  CHECK(k.is_killed_by_maximal_ideal());
  Module rx = cyclic_quotient(R, R->parse_element("x"));
  CHECK(rx.dim() == 2);
  for (const Module& m : {free_module(R, 2), k, rx}) CHECK(!m.check_action());
  CHECK(from_presentation(R, 2, 0, {{}, {}}).dim() == 6);
  CHECK(from_presentation(R, 1, 1, {{R->one()}}).dim() == 0);
  // Oracle: R/(x) has basis {1, y}; the quotient by xR = span{x} has dimension 3 - 1.
  Module p = from_presentation(R, 1, 1, {{R->parse_element("x")}});
  CHECK(p.dim() == 3 - R->multiplication_by(R->parse_element("x")).rank());
  CHECK(is_isomorphic(p, rx).verdict == IsoVerdict::Yes);
}

TEST_CASE("invalid actions are rejected") {
  auto R = plane();
  Field k = R->field();
  Matrix a = Matrix::from_strings(k, 2, 2, {"0", "1", "0", "0"});
  Matrix b = Matrix::from_strings(k, 2, 2, {"0", "0", "1", "0"});
  CHECK_THROWS_AS(Module::checked(R, {a, b}), InputError);
  auto S = truncated(2, 2);
  // x acting as a 2x2 Jordan block is fine over k[x]/(x^2); a 3x3 one is not.
  CHECK_NOTHROW(Module::checked(S, {a}));
  Matrix j3 = Matrix::from_strings(k, 3, 3, {"0", "1", "0", "0", "0", "1", "0", "0", "0"});
  CHECK_THROWS_AS(Module::checked(S, {j3}), InputError);
}

TEST_CASE("radical and generators") {
  auto R = plane();
  CHECK(free_module(R, 1).radical().cols() == 2);
  CHECK(free_module(R, 1).minimal_generator_count() == 1);
  CHECK(simple_module(R).radical().cols() == 0);
  Module rx = cyclic_quotient(R, R->parse_element("x"));
  CHECK(rx.radical().cols() == 1);
  CHECK(rx.minimal_generator_count() == 1);
}

TEST_CASE("split free summands") {
  auto R = plane();
  Module k = simple_module(R);
  auto s = split_free_summands(direct_sum({free_module(R, 1), k}));
  CHECK(s.free_rank == 1);
  CHECK(s.remainder.dim() == 1);
  auto t = split_free_summands(power(k, 5));
  CHECK(t.free_rank == 0);
  CHECK(t.remainder.dim() == 5);
  Module omega = syzygy(k, 1);
  auto u = split_free_summands(omega);
  CHECK(u.free_rank == 0);
  CHECK(is_isomorphic(u.remainder, power(k, 2)).verdict == IsoVerdict::Yes);
}

TEST_CASE("isomorphism testing") {
  auto R = plane();
  Module k = simple_module(R);
  Module m = direct_sum({free_module(R, 1), cyclic_quotient(R, R->parse_element("x"))});
  auto self = is_isomorphic(m, m);
  REQUIRE(self.verdict == IsoVerdict::Yes);
  CHECK(ModuleMap{m, m, self.witness}.is_isomorphism());
  CHECK(ModuleMap{m, m, self.witness}.is_r_linear());
  auto no = is_isomorphic(k, free_module(R, 1));
  CHECK(no.verdict == IsoVerdict::No);
  CHECK(no.reason.find("dimension") != std::string::npos);
  auto two = is_isomorphic(syzygy(k, 2), power(k, 4));
  REQUIRE(two.verdict == IsoVerdict::Yes);
  CHECK(ModuleMap{syzygy(k, 2), power(k, 4), two.witness}.is_r_linear());
  // R/(x) and R/(y) are isomorphic only up to the automorphism swapping x and y, which is not R-linear.
  auto xy = is_isomorphic(cyclic_quotient(R, R->parse_element("x")), cyclic_quotient(R, R->parse_element("y")));
  CHECK(xy.verdict == IsoVerdict::No);
}

TEST_CASE("modules killed by m over a square-zero ring are semisimple") {
  auto R = plane(3);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 5; ++t) {
    std::size_t g = 1 + rng() % 3;
    Module f = free_module(R, g);
    Quotient q = quotient(f, Matrix::hstack(std::vector<Matrix>{f.radical()}));
    CHECK(q.module.is_killed_by_maximal_ideal());
    CHECK(is_isomorphic(q.module, power(simple_module(R), g)).verdict == IsoVerdict::Yes);
  }
}

TEST_CASE("free covers") {
  auto R = plane();
  Module k = simple_module(R);
  CHECK(k.cover().rank == 1);
  CHECK(k.cover().syzygy.dim() == 2);
  CHECK(free_module(R, 2).cover().syzygy.dim() == 0);
  Module rx = cyclic_quotient(R, R->parse_element("x"));
  const FreeCover& c = rx.cover();
  CHECK(c.rank == 1);
  CHECK(c.syzygy.dim() == 1);
  CHECK(c.syzygy.is_killed_by_maximal_ideal());
  CHECK((c.map * c.kernel).is_zero());
  CHECK(c.map * c.section == Matrix::identity(R->field(), rx.dim()));
  CHECK(!c.syzygy.check_action());
}

TEST_CASE("resolutions") {
  auto R = plane();
  Module k = simple_module(R);
  CHECK(betti(k, 4) == std::vector<std::size_t>{1, 2, 4, 8, 16});
  CHECK(betti(simple_module(truncated(2, 2)), 4) == std::vector<std::size_t>{1, 1, 1, 1, 1});
  CHECK(syzygy(free_module(R, 3), 1).dim() == 0);
  auto res = resolve(direct_sum({k, cyclic_quotient(R, R->parse_element("x"))}), 6);
  auto bk = betti(k, 6), bx = betti(cyclic_quotient(R, R->parse_element("x")), 6);
  for (std::size_t i = 0; i <= 6; ++i) CHECK(res.betti()[i] == bk[i] + bx[i]);
  const auto& dims = res.syzygy_dims();
  for (std::size_t i = 0; i + 1 < dims.size(); ++i) CHECK(dims[i + 1] == res.betti()[i] * R->dim() - dims[i]);
  // Minimality: every differential entry lies in m, i.e. has zero constant coordinate.
  for (std::size_t i = 1; i <= 6; ++i) {
    Matrix d = res.differential(i);
    for (std::size_t r = 0; r < d.rows(); r += R->dim())
      for (std::size_t c = 0; c < d.cols(); ++c) CHECK(d.is_zero_at(r, c));
  }
}

TEST_CASE("explicit differentials agree with the semisimple tail") {
  auto R = plane();
  Module k = simple_module(R);
  auto res = resolve(k, 4);
  REQUIRE(res.semisimple_tail());
  for (std::size_t i = 1; i <= 4; ++i) CHECK(res.differential(i) == syzygy_generators(k, i));
}

TEST_CASE("periodicity") {
  auto S = truncated(2, 2);
  auto p = detect_periodicity(resolve(simple_module(S), 4));
  REQUIRE(p);
  CHECK(p->first == 0);
  CHECK(p->second == 1);
  CHECK(!detect_periodicity(resolve(free_module(S, 1), 4)));
  CHECK(!detect_periodicity(resolve(simple_module(plane()), 4)));
  auto T = truncated(3, 3);
  auto q = detect_periodicity(resolve(simple_module(T), 5));
  REQUIRE(q);
  CHECK(q->first == 0);
  CHECK(q->second == 2);
}
