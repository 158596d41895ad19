#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "artin/field.hpp"
#include "artin/matrix.hpp"

namespace artin {

/// Exponent vector of a monomial in x_1..x_n.
using Monomial = std::vector<unsigned>;

struct Term {
  Monomial exponents;
  Scalar coefficient;
};

struct Polynomial {
  std::vector<Term> terms;
};

/// Parses sums of terms such as "x^2 + 2*x*y - 1/2*y^3" over the given variables.
Polynomial parse_polynomial(const Field& field, std::string_view text, const std::vector<std::string>& variables);

/// k[x_1..x_n]/I with I given by generators and the promise m^N ⊆ I.
struct AlgebraPresentation {
  Field field = Field::prime(2);
  std::vector<std::string> variables;
  unsigned nilpotency = 1;
  std::vector<std::string> relations;
};

/// A finite-dimensional commutative local algebra over an exact field.
///
/// The basis consists of standard monomials in degree-then-lexicographic
/// order, so basis[0] is always 1 and every other basis element lies in the
/// maximal ideal. Ring elements are column vectors of length dim().
class LocalAlgebra {
 public:
  const Field& field() const { return presentation_.field; }
  const AlgebraPresentation& presentation() const { return presentation_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t num_vars() const { return presentation_.variables.size(); }
  unsigned nilpotency() const { return presentation_.nilpotency; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::string basis_label(std::size_t b) const;

  /// Matrix of multiplication by the b-th basis element (the regular representation).
  const Matrix& multiplication(std::size_t b) const { return mult_[b]; }
  Matrix multiplication_by(const Matrix& element) const;
  /// The image of the variable x_i in R.
  const Matrix& variable(std::size_t i) const { return variables_[i]; }

  Matrix zero() const { return Matrix(field(), dim(), 1); }
  Matrix one() const { return Matrix::unit(field(), dim(), 0); }
  Matrix basis_element(std::size_t b) const { return Matrix::unit(field(), dim(), b); }
  Matrix multiply(const Matrix& a, const Matrix& b) const { return multiplication_by(a) * b; }
  /// Coordinates of a monomial of any degree (zero from degree N on).
  Matrix normal_form(const Monomial& m) const;

  /// dim m/m^2.
  std::size_t embedding_dim() const { return embedding_dim_; }
  /// Basis (as columns) of the annihilator of the maximal ideal.
  Matrix socle() const;
  bool is_gorenstein() const { return socle().cols() == 1; }
  bool is_unit(const Matrix& r) const { return !r.is_zero_at(0, 0); }
  Matrix inverse(const Matrix& unit) const;

  Matrix parse_element(std::string_view text) const;
  std::string format_element(const Matrix& r) const;

  /// Commutativity and associativity on all basis triples.
  bool satisfies_axioms() const;

 private:
  friend std::shared_ptr<const LocalAlgebra> build_algebra(const AlgebraPresentation&);
  LocalAlgebra() = default;

  AlgebraPresentation presentation_;
  std::vector<Monomial> basis_;
  std::vector<Monomial> all_monomials_;
  std::vector<Matrix> normal_forms_;
  std::vector<Matrix> mult_;
  std::vector<Matrix> variables_;
  std::size_t embedding_dim_ = 0;
};

using AlgebraRef = std::shared_ptr<const LocalAlgebra>;

/// R = (k[x]/m^N) / span{u f : f a relation, u a monomial of degree < N}.
/// Throws InputError for relations with a constant term or a zero algebra.
AlgebraRef build_algebra(const AlgebraPresentation& presentation);

}  // namespace artin
