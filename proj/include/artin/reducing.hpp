#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "artin/homalg.hpp"
#include "artin/module.hpp"

namespace artin {

enum class Target { PD, GDIM };

std::string to_string(Target t);

/// One short exact sequence 0 -> K_{i-1}^a -> K_i -> T -> 0 with T ≅ (Ω^n K_{i-1})^b.
struct ReducingStep {
  std::size_t a = 1, b = 1, n = 1;
  Module module;   // K_i
  Matrix inject;   // K_{i-1}^a -> K_i
  Module quotient; // T
  Matrix surject;  // K_i -> T
  /// T -> (Ω^n K_{i-1})^b, with the syzygy computed canonically.
  Matrix iso;
};

struct ReducingSequence {
  Module base;  // K_0 = M
  std::vector<ReducingStep> steps;
  Target target = Target::PD;

  std::size_t length() const { return steps.size(); }
  const Module& module(std::size_t i) const { return i == 0 ? base : steps[i - 1].module; }
  const Module& last() const { return module(length()); }
};

struct VerifyReport {
  bool accepted = false;
  /// Step index (1-based) of the first failure; 0 for the base or terminal condition.
  std::size_t step = 0;
  std::string reason;
  std::string terminal;  // verdict text for K_r
  std::size_t window = 0;
};

VerifyReport verify(const ReducingSequence& seq, std::size_t window);

/// Whether K satisfies the terminal condition of the target.
bool terminal_holds(const Module& k, Target target, std::size_t window, std::string* verdict = nullptr);

struct SearchConfig {
  std::size_t max_r = 1, max_a = 4, max_b = 1, max_n = 1;
  /// Ext^1 classes tried per (node, a, b, n): the zero class, basis classes, then seeded random ones.
  std::size_t budget = 16;
  std::size_t window = 10;
  std::uint64_t seed = 1;
  /// Skip candidates that are not torsionless; they cannot occur in a sequence.
  bool prune_torsionless = true;
};

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t candidates = 0;
  std::size_t pruned = 0;
  std::size_t iso_tests = 0;
  std::string heuristic;  // of the first step of the certificate found
};

std::optional<ReducingSequence> search(const Module& m, const SearchConfig& cfg, Target target,
                                       SearchStats* stats = nullptr);

/// From a sequence for N, a sequence for ΩN with middle modules ΩK_i (+) R^{f_i}.
ReducingSequence transform_syzygy(const ReducingSequence& seq, std::size_t window);

struct CosyzygyResult {
  bool accepted = false;
  std::string reason;
  ReducingSequence sequence;  // for N when accepted
};

/// From a sequence for M and an isomorphism ΩN -> M, a sequence for N.
/// Rejects unless Ext^i(M, R) = 0 for 1 <= i <= window.
CosyzygyResult transform_cosyzygy(const ReducingSequence& seq, const Module& n, const Matrix& omega_n_to_m,
                                  std::size_t window);

/// Isomorphism Ω^k X -> Ω^k(X (+) R^f) for k >= 1.
Matrix omega_drop_free(const Module& x, std::size_t f, std::size_t k);

/// Retraction ρ: B -> A (R-linear, ρ ∘ incl = id) of an R-linear injection A -> B, if one exists.
std::optional<Matrix> find_retraction(const Module& a, const Module& b, const Matrix& incl);

}  // namespace artin
