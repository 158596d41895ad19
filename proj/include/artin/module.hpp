#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "artin/algebra.hpp"
#include "artin/matrix.hpp"

namespace artin {

struct FreeCover;

/// A finitely generated R-module stored as a representation: one k-matrix
/// per variable, acting on column vectors of length dim().
///
/// Copies share their lazily computed data (basis actions, free cover).
class Module {
 public:
  Module() = default;
  /// Trusts the caller that the actions define an R-module.
  Module(AlgebraRef algebra, std::vector<Matrix> variable_actions);
  /// Validates commutativity and the relations; throws InputError otherwise.
  static Module checked(AlgebraRef algebra, std::vector<Matrix> variable_actions);

  const AlgebraRef& algebra() const;
  const LocalAlgebra& ring() const { return *algebra(); }
  const Field& field() const { return ring().field(); }
  std::size_t dim() const;
  const Matrix& variable_action(std::size_t i) const;
  const std::vector<Matrix>& variable_actions() const;
  /// Action of the b-th basis element of R.
  const Matrix& action(std::size_t b) const;
  Matrix act(const Matrix& ring_element) const;

  bool is_zero() const { return dim() == 0; }
  bool is_killed_by_maximal_ideal() const;
  /// Basis (columns) of mM.
  Matrix radical() const;
  std::size_t minimal_generator_count() const;
  /// Basis (columns) of the elements killed by m.
  Matrix socle() const;
  /// Empty if the actions form a unital representation of R, otherwise the first defect.
  std::optional<std::string> check_action() const;
  /// Canonical minimal free cover, computed once per module value.
  const FreeCover& cover() const;
  bool is_free() const;

 private:
  struct Data;
  std::shared_ptr<Data> data_;
};

/// A k-linear map between modules of the same algebra.
struct ModuleMap {
  Module source;
  Module target;
  Matrix matrix;  // target.dim() x source.dim()

  bool is_r_linear() const;
  bool is_injective() const { return matrix.rank() == source.dim(); }
  bool is_surjective() const { return matrix.rank() == target.dim(); }
  bool is_isomorphism() const { return is_injective() && is_surjective(); }
};

ModuleMap identity_map(const Module& m);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

struct ShortExactSequence {
  Module left;
  Module middle;
  Module right;
  Matrix inject;   // middle x left
  Matrix surject;  // right x middle

  /// Empty if the sequence is an exact sequence of R-modules, otherwise the defect.
  std::optional<std::string> defect() const;
};

/// R^g with basis e_{j,b} = (generator j) * (basis element b) at index j*dim R + b.
struct FreeCover {
  std::size_t rank = 0;
  /// Indices of basis vectors of M used as generators.
  std::vector<std::size_t> generators;
  /// The cover R^rank -> M as a k-matrix.
  Matrix map;
  /// A k-linear section of `map`.
  Matrix section;
  /// Columns span the kernel; identity at the rows listed in kernel_free.
  Matrix kernel;
  std::vector<std::size_t> kernel_free;
  /// The kernel with its basis given by the columns of `kernel`.
  Module syzygy;
};

Module free_module(const AlgebraRef& algebra, std::size_t rank);
Module simple_module(const AlgebraRef& algebra);
Module zero_module(const AlgebraRef& algebra);
/// R/(f).
Module cyclic_quotient(const AlgebraRef& algebra, const Matrix& f);
/// Cokernel of R^r -> R^g; entries[j][l] is the (j,l) entry as a ring element.
Module from_presentation(const AlgebraRef& algebra, std::size_t g, std::size_t r,
                         const std::vector<std::vector<Matrix>>& entries);
Module direct_sum(const std::vector<Module>& parts);
Module power(const Module& m, std::size_t copies);
/// Offsets of each summand inside a direct sum.
std::vector<std::size_t> summand_offsets(const std::vector<Module>& parts);

/// Submodule spanned by the R-stable subspace with basis `columns`.
Module submodule(const Module& m, const Matrix& columns);

struct Quotient {
  Module module;
  /// quotient.dim() x m.dim()
  Matrix projection;
  /// m.dim() x quotient.dim(); projection * lift = identity.
  Matrix lift;
};
/// M/S for an R-stable subspace S given by spanning columns.
Quotient quotient(const Module& m, const Matrix& span);

/// k-linear map R^g -> N sending generator j to the j-th block of the column `images` (g*dim N rows).
Matrix free_to_module_map(const Module& target, const Matrix& images, std::size_t generators);
/// Matrix of the R-linear map R^g -> R^h given by generator images (h*dim R x g).
Matrix free_map_matrix(const LocalAlgebra& ring, const Matrix& images);

struct SplitResult {
  std::size_t free_rank = 0;
  Module remainder;
  /// Isomorphism R^free_rank (+) remainder -> M.
  Matrix embedding;
};
SplitResult split_free_summands(const Module& m);

enum class IsoVerdict { Yes, No, Unknown };

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Unknown;
  /// Invertible R-linear N x M matrix when verdict is Yes.
  Matrix witness;
  std::string reason;
};

struct IsoOptions {
  std::size_t budget = 64;
  std::uint64_t seed = 1;
};

IsoResult is_isomorphic(const Module& m, const Module& n, const IsoOptions& options = {});

}  // namespace artin
