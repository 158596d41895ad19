#include "artin/resolution.hpp"

#include "artin/homalg.hpp"

namespace artin {

Module syzygy(const Module& m, std::size_t n) {
  Module cur = m;
  for (std::size_t i = 0; i < n; ++i) cur = cur.cover().syzygy;
  return cur;
}

Matrix syzygy_generators(const Module& m, std::size_t i) {
  if (i == 0) throw Error("syzygy generators start at degree 1");
  Module prev = syzygy(m, i - 1);
  const FreeCover& c = prev.cover();
  return c.kernel.select_columns(c.syzygy.cover().generators);
}

FreeResolution::FreeResolution(Module m, std::size_t window) : module_(std::move(m)), window_(window) {
  const std::size_t d = module_.ring().dim();
  Module cur = module_;
  dims_.push_back(cur.dim());
  for (std::size_t i = 0; i <= window_; ++i) {
    if (!tail_ && i >= 1 && cur.dim() > 0 && cur.is_killed_by_maximal_ideal()) tail_ = {{i, cur.dim()}};
    if (tail_) break;
    betti_.push_back(cur.cover().rank);
    cur = cur.cover().syzygy;
    dims_.push_back(cur.dim());
  }
  if (tail_) {
    auto [s, t] = *tail_;
    if (s <= window_) {
      FreeResolution k(simple_module(module_.algebra()), window_ - s);
      for (std::size_t j = 0; s + j <= window_; ++j) {
        betti_.push_back(t * k.betti()[j]);
        dims_.push_back(t * k.syzygy_dims()[j + 1]);
      }
    }
  }
  (void)d;
}

Matrix FreeResolution::differential(std::size_t i) const {
  if (i == 0 || i > window_) throw Error("differential index outside the window");
  if (!tail_ || i <= tail_->first) return syzygy_generators(module_, i);
  auto [s, t] = *tail_;
  FreeResolution k(simple_module(module_.algebra()), window_ - s);
  Matrix dk = k.differential(i - s);
  return Matrix::kron(Matrix::identity(module_.field(), t), dk);
}

FreeResolution resolve(const Module& m, std::size_t window) { return FreeResolution(m, window); }

std::vector<std::size_t> betti(const Module& m, std::size_t window) { return FreeResolution(m, window).betti(); }

std::optional<std::pair<std::size_t, std::size_t>> detect_periodicity(const FreeResolution& res) {
  const auto& dims = res.syzygy_dims();
  const std::size_t top = res.window();
  for (std::size_t s = 0; s <= top; ++s) {
    if (dims[s] == 0) break;
    for (std::size_t p = 1; s + p <= top; ++p) {
      if (dims[s + p] == 0) break;
      if (dims[s + p] != dims[s]) continue;
      auto r = is_isomorphic(syzygy(res.module(), s + p), syzygy(res.module(), s));
      if (r.verdict == IsoVerdict::Yes) return std::pair{s, p};
    }
  }
  return std::nullopt;
}

Matrix induced_syzygy_map(const Module& m, const Module& n, const Matrix& f) {
  const FreeCover& cm = m.cover();
  const FreeCover& cn = n.cover();
  const LocalAlgebra& R = m.ring();
  Matrix targets = f.select_columns(cm.generators);
  auto lifted = cn.map.solve(targets);
  if (!lifted) throw Error("map cannot be lifted through the cover");
  // lifted columns are elements of F_N; they are the generator images of the lift F_M -> F_N.
  Matrix images(m.field(), cn.rank * R.dim(), cm.rank);
  for (std::size_t j = 0; j < cm.rank; ++j) images.set_block(0, j, lifted->column(j));
  Matrix lift = free_map_matrix(R, images);
  return (lift * cm.kernel).select_rows(cn.kernel_free);
}

Matrix induced_syzygy_map(const Module& m, const Module& n, const Matrix& f, std::size_t k) {
  Matrix cur = f;
  Module a = m, b = n;
  for (std::size_t i = 0; i < k; ++i) {
    cur = induced_syzygy_map(a, b, cur);
    a = a.cover().syzygy;
    b = b.cover().syzygy;
  }
  return cur;
}

CoverKernelSplitting decompose_cover_kernel(const Module& b, const Matrix& q) {
  const LocalAlgebra& R = b.ring();
  const Field& k = b.field();
  const std::size_t d = R.dim();
  const std::size_t h = q.cols() / d;
  const FreeCover& cb = b.cover();
  const std::size_t g = cb.rank;
  if (q.rank() != b.dim()) throw Error("map onto the module is not surjective");

  CoverKernelSplitting out;
  auto ker = q.kernel();
  out.kernel = std::move(ker.basis);
  out.kernel_free = std::move(ker.free);
  std::vector<Matrix> kx;
  for (std::size_t i = 0; i < R.num_vars(); ++i)
    kx.push_back(
        block_diagonal_product(R.multiplication_by(R.variable(i)), h, out.kernel).select_rows(out.kernel_free));
  out.kernel_module = Module(b.algebra(), std::move(kx));

  std::vector<std::size_t> q_gens, b_gens;
  for (std::size_t t = 0; t < h; ++t) q_gens.push_back(t * d);
  for (std::size_t j = 0; j < g; ++j) b_gens.push_back(j * d);
  // alpha: F_B -> R^h with q alpha = pi_B; gamma: R^h -> F_B with pi_B gamma = q.
  Matrix alpha_images = *q.solve(cb.map.select_columns(b_gens));
  Matrix gamma_images = *cb.map.solve(q.select_columns(q_gens));
  Matrix alpha = free_map_matrix(R, alpha_images);
  Matrix gamma = free_map_matrix(R, gamma_images);
  Matrix mu = gamma * alpha;
  auto mu_inv = mu.inverse();
  if (!mu_inv) throw Error("cover comparison is not invertible");
  Matrix alpha_adj = alpha * *mu_inv;
  Matrix projector = Matrix::identity(k, h * d) - alpha_adj * gamma;

  // Generators of ker gamma: projector images of unit generators, independent modulo m.
  Matrix candidates = projector.select_columns(q_gens);
  std::vector<std::size_t> const_rows = q_gens;
  Matrix constants = candidates.select_rows(const_rows);
  std::vector<std::size_t> chosen = constants.independent_columns();
  out.free_rank = chosen.size();
  if (out.free_rank + g != h) throw Error("free complement has unexpected rank");

  Matrix omega_part = alpha_adj * cb.kernel;
  Matrix free_part = free_map_matrix(R, candidates.select_columns(chosen));
  Matrix embed = Matrix::hstack(std::vector<Matrix>{omega_part, free_part});
  out.iso = embed.select_rows(out.kernel_free);
  out.split = direct_sum({cb.syzygy, free_module(b.algebra(), out.free_rank)});
  return out;
}

Matrix syzygy_of_direct_sum(const std::vector<Module>& parts) {
  Module total = direct_sum(parts);
  const LocalAlgebra& R = total.ring();
  std::vector<Matrix> maps, kernels;
  for (const auto& p : parts) {
    maps.push_back(p.cover().map);
    kernels.push_back(p.cover().kernel);
  }
  Matrix q = Matrix::direct_sum(maps);
  (void)R;
  CoverKernelSplitting split = decompose_cover_kernel(total, q);
  // Coordinates of the summand syzygies inside ker q, then back through the splitting.
  Matrix summands = Matrix::direct_sum(kernels).select_rows(split.kernel_free);
  Matrix back = *split.iso.inverse();
  return back * summands;
}

Matrix syzygy_of_power(const Module& m, std::size_t copies, std::size_t n) {
  const Field& k = m.field();
  if (copies == 0) return Matrix(k, 0, 0);
  Module base = m;
  Matrix iso = Matrix::identity(k, m.dim() * copies);  // (Ω^0 M)^b -> Ω^0(M^b)
  Module power_mod = power(m, copies);
  for (std::size_t i = 0; i < n; ++i) {
    // (Ω^{i+1} M)^b -> Ω((Ω^i M)^b) -> Ω(Ω^i(M^b))
    Matrix step = syzygy_of_direct_sum(std::vector<Module>(copies, base));
    Module inner = power(base, copies);
    Matrix lifted = induced_syzygy_map(inner, power_mod, iso);
    iso = lifted * step;
    base = base.cover().syzygy;
    power_mod = power_mod.cover().syzygy;
  }
  return iso;
}

}  // namespace artin
