#include <doctest.h>

#include "artin/algebra.hpp"

using namespace artin;

namespace {

AlgebraRef ring(Field k, std::vector<std::string> vars, unsigned n, std::vector<std::string> rels) {
  AlgebraPresentation p;
  p.field = k;
  p.variables = std::move(vars);
  p.nilpotency = n;
  p.relations = std::move(rels);
  return build_algebra(p);
}

// Rank of a list of integer vectors mod p by plain elimination.
std::size_t rank_mod(std::vector<std::vector<long>> rows, long p) {
  std::size_t rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && ((rows[piv][c] % p) + p) % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    long inv = 1;
    long a = ((rows[rank][c] % p) + p) % p;
    while (a * inv % p != 1) ++inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      long f = ((rows[r][c] % p) + p) % p * inv % p;
      for (std::size_t j = 0; j < cols; ++j) rows[r][j] = ((rows[r][j] - f * rows[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("square-zero plane") {
  auto r = ring(Field::prime(2), {"x", "y"}, 2, {});
  CHECK(r->dim() == 3);
  CHECK(r->basis_label(0) == "1");
  CHECK(r->basis_label(1) == "x");
  CHECK(r->basis_label(2) == "y");
  CHECK(r->embedding_dim() == 2);
  CHECK(r->socle().cols() == 2);
  CHECK(!r->is_gorenstein());
  CHECK(r->satisfies_axioms());
}

TEST_CASE("truncated polynomial rings") {
  auto r = ring(Field::prime(2), {"x"}, 3, {});
  CHECK(r->dim() == 3);
  CHECK(r->embedding_dim() == 1);
  CHECK(r->socle().cols() == 1);
  CHECK(r->socle() == r->parse_element("x^2"));
  CHECK(r->is_gorenstein());
  auto s = ring(Field::prime(3), {"x"}, 2, {});
  CHECK(s->socle() == s->parse_element("x"));
  CHECK(s->is_gorenstein());
}

TEST_CASE("relations reduce the basis") {
  auto r = ring(Field::prime(3), {"x", "y"}, 3, {"x^2", "x*y"});
  // Oracle: monomials of degree < 3 are 1,x,y,x^2,xy,y^2; the relation span is
  // generated by u*f truncated, computed here by direct enumeration.
  std::vector<std::vector<unsigned>> mons = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  std::vector<std::vector<long>> rows;
  for (const auto& rel : std::vector<std::vector<unsigned>>{{2, 0}, {1, 1}})
    for (const auto& u : mons) {
      std::vector<unsigned> prod = {u[0] + rel[0], u[1] + rel[1]};
      std::vector<long> row(6, 0);
      for (std::size_t i = 0; i < 6; ++i)
        if (mons[i] == prod) row[i] = 1;
      rows.push_back(row);
    }
  CHECK(r->dim() == 6 - rank_mod(rows, 3));
  CHECK(r->dim() == 4);
  CHECK(r->satisfies_axioms());
  CHECK(r->embedding_dim() == 2);
}

TEST_CASE("non-monomial relations") {
  auto r = ring(Field::prime(5), {"x", "y"}, 4, {"x^2 - y^2", "x*y"});
  CHECK(r->satisfies_axioms());
  // k[x,y]/(x^2-y^2, xy) is Gorenstein of length 4 with socle x^2.
  CHECK(r->dim() == 4);
  CHECK(r->is_gorenstein());
  CHECK(r->parse_element("x^2") == r->parse_element("y^2"));
  CHECK(r->parse_element("x^3").is_zero());
}

TEST_CASE("maximal ideal is nilpotent and units invert") {
  auto r = ring(Field::prime(3), {"x", "y"}, 3, {"x*y"});
  for (std::size_t a = 1; a < r->dim(); ++a)
    for (std::size_t b = 1; b < r->dim(); ++b)
      for (std::size_t c = 1; c < r->dim(); ++c)
        CHECK(r->multiply(r->multiply(r->basis_element(a), r->basis_element(b)), r->basis_element(c)).is_zero());
  Matrix u = r->parse_element("2 + x - y^2");
  CHECK(r->is_unit(u));
  CHECK(r->multiply(u, r->inverse(u)) == r->one());
  CHECK(r->format_element(u) == "2 + x + 2*y^2");
}

TEST_CASE("bad presentations are rejected") {
  CHECK_THROWS_AS(ring(Field::prime(2), {"x"}, 2, {"1 + x"}), InputError);
  CHECK_THROWS_AS(ring(Field::prime(2), {"x"}, 2, {"z"}), InputError);
  CHECK_THROWS_AS(ring(Field::prime(2), {"x", "x"}, 2, {}), InputError);
  CHECK_THROWS_AS(ring(Field::prime(2), {}, 2, {}), InputError);
}
