#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "artin/module.hpp"
#include "artin/resolution.hpp"

namespace artin {

/// Hom_R(M, N), parametrized by the images of the generators of the minimal cover of M.
///
/// A homomorphism is a vector u in N^g (g = β_0(M)); the basis vectors are the
/// columns of `images`, which carry an identity block at the rows `free`.
struct HomSpace {
  Module source;
  Module target;
  Matrix images;
  std::vector<std::size_t> free;

  std::size_t dim() const { return images.cols(); }
  /// k-matrix (target.dim() x source.dim()) of the t-th basis map.
  Matrix map(std::size_t t) const;
  Matrix map_of(const Matrix& coordinates) const;
  /// Coordinates of an R-linear map given as a k-matrix.
  Matrix coordinates(const Matrix& phi) const;
  /// Hom(M, N) with the R-action (r phi)(x) = r phi(x), basis as above.
  Module as_module() const;
};

HomSpace hom_space(const Module& m, const Module& n);
/// M* = Hom(M, R).
Module dual(const Module& m);

struct Biduality {
  HomSpace dual_hom;
  Module dual;
  HomSpace bidual_hom;
  Module bidual;
  /// λ_M : M -> M** in the basis of bidual.
  Matrix lambda;
};

Biduality biduality(const Module& m);
bool is_torsionless(const Module& m);
bool is_reflexive(const Module& m);

/// Ext^i(M, N) as Hom(Ω^i M, N) modulo maps factoring through F_{i-1}.
struct ExtGroup {
  std::size_t degree = 0;
  Module source;
  Module target;
  /// Hom(Ω^i M, N); cocycles are its coordinate vectors.
  HomSpace cocycles;
  /// Basis of the coboundaries in cocycle coordinates.
  Matrix coboundaries;
  /// Cocycle coordinates of a basis of Ext.
  Matrix representatives;
  /// Cocycle coordinates of the coboundary of v in N^{β_{i-1}} (all of it, not a basis).
  Matrix coboundary_map;

  std::size_t dim() const { return representatives.cols(); }
  /// Ext coordinates of a cocycle.
  Matrix class_of(const Matrix& cocycle) const;
  Matrix cocycle_of(const Matrix& ext_coordinates) const { return representatives * ext_coordinates; }
  bool is_coboundary(const Matrix& cocycle) const { return class_of(cocycle).is_zero(); }

  Matrix projection;  // dim() x cocycles.dim()
};

ExtGroup ext(const Module& m, const Module& n, std::size_t i);
/// dim Ext^i(M, N) for 0 <= i <= w.
std::vector<std::size_t> ext_dims(const Module& m, const Module& n, std::size_t window);

struct PInvariant {
  enum class Kind { Finite, AboveWindow, MinusInfinity };
  Kind kind = Kind::MinusInfinity;
  std::size_t value = 0;
  std::size_t window = 0;

  bool operator==(const PInvariant& o) const { return kind == o.kind && value == o.value; }
  std::string to_string() const;
};

/// sup{i <= w : Ext^i(M, N) != 0} read on the window.
PInvariant p_invariant(const Module& m, const Module& n, std::size_t window);
PInvariant p_invariant_from_dims(const std::vector<std::size_t>& dims);

/// 0 -> A -> E -> C -> 0 realizing a class of Ext^1(C, A) given in cocycle coordinates.
ShortExactSequence extension_middle_term(const ExtGroup& ext1, const Matrix& cocycle);
/// Cocycle coordinates (in Hom(Ω C, A)) of the class of a short exact sequence.
Matrix extension_cocycle(const ShortExactSequence& ses, const ExtGroup& ext1);
/// Ext coordinates of the class of a short exact sequence.
Matrix extension_class(const ShortExactSequence& ses, const ExtGroup& ext1);

/// 0 -> M -> F -> M_1 -> 0 with F free, obtained by dualizing a minimal cover of M*.
struct Pushforward {
  ShortExactSequence sequence;
  std::size_t rank = 0;
};
/// Throws Error when M is not torsionless.
Pushforward pushforward(const Module& m);

struct HorseshoeResult {
  ShortExactSequence sequence;  // 0 -> ΩA -> ΩB (+) R^f -> ΩC -> 0
  std::size_t free_rank = 0;
  /// Middle module of the horseshoe: the kernel of F_A (+) F_C -> B.
  CoverKernelSplitting splitting;
  /// The lift F_C -> B used in the construction (k-matrix).
  Matrix lift;
};
HorseshoeResult horseshoe_syzygy(const ShortExactSequence& ses);

/// Matrix of Ext^1(M, N) -> Ext^1(ΩM, ΩN), classes in Ext coordinates.
Matrix ext_syzygy_map(const Module& m, const Module& n);
/// True when Ext^2(M, R) = 0 and the map above has full row rank.
struct SyzygyMapCheck {
  bool hypothesis = false;
  bool surjective = false;
};
SyzygyMapCheck check_surjective_when(const Module& m, const Module& n);

/// Iso f: E_1 -> E_2 with f ι_1 = ι_2 and π_2 f = π_1, for extensions with equal class.
std::optional<Matrix> extension_equivalence(const ShortExactSequence& s1, const ShortExactSequence& s2,
                                            const ExtGroup& ext1);

}  // namespace artin
