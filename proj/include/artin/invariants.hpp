#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "artin/homalg.hpp"
#include "artin/module.hpp"
#include "artin/reducing.hpp"

namespace artin {

struct PdReport {
  bool finite = false;
  std::size_t rank = 0;  // free rank when finite
};

/// Over an Artinian local ring, finite projective dimension means free.
PdReport pd_is_finite(const Module& m);

struct ReflexivityReport {
  enum class Verdict { Certified, WindowPass, Fail };
  Verdict verdict = Verdict::Fail;
  /// For Fail: "reflexive", "Ext(M,R)" or "Ext(M*,R)".
  std::string stage;
  std::size_t degree = 0;
  std::size_t window = 0;

  bool passed() const { return verdict != Verdict::Fail; }
  std::string to_string() const;
};

ReflexivityReport is_totally_reflexive(const Module& m, std::size_t window);

struct GdimReport {
  bool hypothesis = false;
  std::string hypothesis_source;  // "gorenstein ring" or "verified reducing sequence"
  PInvariant value;
  std::string note;
};

/// sup{i <= w : Ext^i(M, R) != 0}; refuses (hypothesis = false) unless R is Gorenstein
/// or `seq` is a verified GDIM sequence whose base is isomorphic to M.
GdimReport gdim(const Module& m, std::size_t window, const ReducingSequence* seq = nullptr);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct TheoremReport {
  std::string theorem;
  std::size_t window = 0;
  std::vector<Check> hypotheses;
  std::vector<Check> conclusions;
  std::string counterexample;

  bool hypotheses_hold() const;
  bool passed() const;
};

/// Free complex F_w -> ... -> F_0 -> F^1 -> ... -> F^w through M, as k-matrices of R-linear maps.
struct CompleteResolution {
  std::size_t window = 0;
  /// Ranks of the free modules from F_w up to F^w, left to right.
  std::vector<std::size_t> ranks;
  /// maps[j] goes from position j to position j+1.
  std::vector<Matrix> maps;
  /// Index of F_0 in `ranks`.
  std::size_t splice = 0;
  bool exact = false;
  bool dual_exact = false;
  std::string defect;
};

/// Requires M torsionless along a pushforward chain of length w; throws Error otherwise.
CompleteResolution complete_resolution(const Module& m, std::size_t window);

/// Dual of an R-linear map between free modules, given as a k-matrix.
Matrix dual_free_map(const LocalAlgebra& ring, const Matrix& f);

TheoremReport check_main_theorem(const Module& m, const ReducingSequence& seq, std::size_t window);

struct SplitInjection {
  std::size_t index = 0;
  Matrix inclusion;   // M -> K_i
  Matrix retraction;  // K_i -> M
};

TheoremReport check_t2(const Module& m, const ReducingSequence& seq, std::size_t window,
                       std::vector<SplitInjection>* splits = nullptr);

/// Hom_k(R, k) with (r f)(s) = f(rs).
Module canonical_module(const AlgebraRef& algebra);
bool is_semidualizing(const Module& c, std::size_t window);
TheoremReport check_cor33(const AlgebraRef& algebra, std::size_t window, const SearchConfig& cfg);

struct StructureTest {
  bool holds = false;  // M ≅ R^α (+) k^β
  std::size_t alpha = 0, beta = 0;
};
/// Requires m^2 = 0.
StructureTest structure_test(const Module& m);
bool maximal_ideal_squares_to_zero(const LocalAlgebra& ring);

struct Prop27Outcome {
  StructureTest structure;
  std::optional<ReducingSequence> pd, gdim;
};

TheoremReport check_prop27(const Module& m, const SearchConfig& cfg, Prop27Outcome* outcome = nullptr,
                           const ReducingSequence* submitted = nullptr);

TheoremReport check_P_transfer(const ReducingSequence& seq, const Module& n, std::size_t window);

}  // namespace artin
