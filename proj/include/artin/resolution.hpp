#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "artin/module.hpp"

namespace artin {

/// Minimal syzygy: the kernel of the canonical minimal free cover, iterated n times.
Module syzygy(const Module& m, std::size_t n);

/// A window F_w -> ... -> F_0 of the minimal free resolution.
///
/// Once some syzygy Ω^s M (s >= 1) is killed by m, Ω^s M = k^t in the
/// canonical basis and every later syzygy is literally (Ω^j k)^t, so only
/// the part before s is stored explicitly.
class FreeResolution {
 public:
  FreeResolution(Module m, std::size_t window);

  const Module& module() const { return module_; }
  std::size_t window() const { return window_; }
  const std::vector<std::size_t>& betti() const { return betti_; }
  /// dim Ω^i M for 0 <= i <= window + 1.
  const std::vector<std::size_t>& syzygy_dims() const { return dims_; }
  /// Images of the generators of F_i in F_{i-1} (β_{i-1} dim R x β_i), 1 <= i <= window.
  Matrix differential(std::size_t i) const;
  /// Index s >= 1 and multiplicity t with Ω^s M = k^t, if reached inside the window.
  std::optional<std::pair<std::size_t, std::size_t>> semisimple_tail() const { return tail_; }

 private:
  Module module_;
  std::size_t window_;
  std::vector<std::size_t> betti_;
  std::vector<std::size_t> dims_;
  std::optional<std::pair<std::size_t, std::size_t>> tail_;
};

FreeResolution resolve(const Module& m, std::size_t window);
std::vector<std::size_t> betti(const Module& m, std::size_t window);

/// Smallest (start, period) with Ω^{start+period} M ≅ Ω^start M, both nonzero, inside the window.
std::optional<std::pair<std::size_t, std::size_t>> detect_periodicity(const FreeResolution& res);

/// Generators of Ω^{i} M as elements of F_{i-1} (the columns of differential(i)), computed directly.
Matrix syzygy_generators(const Module& m, std::size_t i);

/// Lift of an R-linear f: M -> N to the syzygies, Ω M -> Ω N (an isomorphism when f is).
Matrix induced_syzygy_map(const Module& m, const Module& n, const Matrix& f);
/// Iterated lift Ω^k M -> Ω^k N.
Matrix induced_syzygy_map(const Module& m, const Module& n, const Matrix& f, std::size_t k);

struct CoverKernelSplitting {
  /// ker q with basis given by the columns of `kernel` (identity at `kernel_free`).
  Module kernel_module;
  Matrix kernel;
  std::vector<std::size_t> kernel_free;
  /// Rank of the free complement R^f.
  std::size_t free_rank = 0;
  /// Ω B (+) R^f as a module.
  Module split;
  /// Isomorphism split -> kernel_module.
  Matrix iso;
};

/// For a surjective R-linear q: R^h -> B, writes ker q as Ω B (+) R^{h - β_0(B)} explicitly.
CoverKernelSplitting decompose_cover_kernel(const Module& b, const Matrix& q);

/// Isomorphism Ω M_1 (+) ... (+) Ω M_s -> Ω(M_1 (+) ... (+) M_s).
Matrix syzygy_of_direct_sum(const std::vector<Module>& parts);
/// Isomorphism (Ω^n M)^b -> Ω^n(M^b).
Matrix syzygy_of_power(const Module& m, std::size_t copies, std::size_t n);

}  // namespace artin
