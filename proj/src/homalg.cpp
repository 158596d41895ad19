#include "artin/homalg.hpp"

namespace artin {

namespace {

Matrix stack_generator_images(const Matrix& phi, const std::vector<std::size_t>& generators) {
  const std::size_t n = phi.rows();
  Matrix u(phi.field(), generators.size() * n, 1);
  for (std::size_t j = 0; j < generators.size(); ++j) u.set_block(j * n, 0, phi.column(generators[j]));
  return u;
}

// Block (l, j) is the action on N of the j-th coordinate of column l of `elements` (elements of R^g).
Matrix act_blocks(const Module& n, const Matrix& elements) {
  const std::size_t d = n.ring().dim(), dn = n.dim();
  const std::size_t g = elements.rows() / d;
  Matrix out(n.field(), elements.cols() * dn, g * dn);
  for (std::size_t l = 0; l < elements.cols(); ++l)
    for (std::size_t j = 0; j < g; ++j) {
      Matrix r = elements.block(j * d, l, d, 1);
      if (r.is_zero()) continue;
      out.set_block(l * dn, j * dn, n.act(r));
    }
  return out;
}

}  // namespace

Matrix HomSpace::map(std::size_t t) const { return map_of(Matrix::unit(source.field(), dim(), t)); }

Matrix HomSpace::map_of(const Matrix& coordinates) const {
  const FreeCover& c = source.cover();
  if (c.rank == 0 || target.dim() == 0) return Matrix(source.field(), target.dim(), source.dim());
  return free_to_module_map(target, images * coordinates, c.rank) * c.section;
}

Matrix HomSpace::coordinates(const Matrix& phi) const {
  return stack_generator_images(phi, source.cover().generators).select_rows(free);
}

Module HomSpace::as_module() const {
  std::vector<Matrix> xs;
  const std::size_t g = source.cover().rank;
  for (const auto& x : target.variable_actions())
    xs.push_back(block_diagonal_product(x, g, images).select_rows(free));
  return Module(source.algebra(), std::move(xs));
}

HomSpace hom_space(const Module& m, const Module& n) {
  const FreeCover& c = m.cover();
  HomSpace h{m, n, Matrix(), {}};
  const std::size_t dn = n.dim();
  const Module& omega = c.syzygy;
  Matrix relations = c.kernel.select_columns(omega.cover().generators);
  Matrix constraints = relations.cols() ? act_blocks(n, relations) : Matrix(m.field(), 0, c.rank * dn);
  auto ker = constraints.kernel();
  h.images = std::move(ker.basis);
  h.free = std::move(ker.free);
  return h;
}

Module dual(const Module& m) { return hom_space(m, free_module(m.algebra(), 1)).as_module(); }

Biduality biduality(const Module& m) {
  Module r = free_module(m.algebra(), 1);
  Biduality b;
  b.dual_hom = hom_space(m, r);
  b.dual = b.dual_hom.as_module();
  b.bidual_hom = hom_space(b.dual, r);
  b.bidual = b.bidual_hom.as_module();
  const auto& gens = b.dual.cover().generators;
  std::vector<Matrix> evals;
  for (std::size_t j : gens) evals.push_back(b.dual_hom.map(j));
  Matrix full = evals.empty() ? Matrix(m.field(), 0, m.dim()) : Matrix::vstack(evals);
  b.lambda = full.select_rows(b.bidual_hom.free);
  return b;
}

bool is_torsionless(const Module& m) {
  if (m.dim() == 0 || m.is_free()) return true;
  return biduality(m).lambda.rank() == m.dim();
}

bool is_reflexive(const Module& m) {
  if (m.dim() == 0 || m.is_free()) return true;
  Biduality b = biduality(m);
  return b.bidual.dim() == m.dim() && b.lambda.rank() == m.dim();
}

Matrix ExtGroup::class_of(const Matrix& cocycle) const { return projection * cocycle; }

ExtGroup ext(const Module& m, const Module& n, std::size_t i) {
  ExtGroup e;
  e.degree = i;
  e.source = m;
  e.target = n;
  Module x = syzygy(m, i);
  e.cocycles = hom_space(x, n);
  const std::size_t h = e.cocycles.dim();
  const Field& k = m.field();
  if (i == 0) {
    e.coboundary_map = Matrix(k, h, 0);
  } else {
    Module y = syzygy(m, i - 1);
    Matrix gens = y.cover().kernel.select_columns(x.cover().generators);
    Matrix full = gens.cols() ? act_blocks(n, gens) : Matrix(k, 0, y.cover().rank * n.dim());
    e.coboundary_map = full.select_rows(e.cocycles.free);
  }
  e.coboundaries = e.coboundary_map.cols() ? e.coboundary_map.select_columns(e.coboundary_map.independent_columns())
                                           : Matrix(k, h, 0);
  auto reps = e.coboundaries.extending_columns(Matrix::identity(k, h));
  e.representatives = Matrix::identity(k, h).select_columns(reps);
  Matrix basis = Matrix::hstack(std::vector<Matrix>{e.coboundaries, e.representatives});
  Matrix inv = h ? *basis.inverse() : Matrix(k, 0, 0);
  e.projection = inv.block(e.coboundaries.cols(), 0, reps.size(), h);
  return e;
}

std::vector<std::size_t> ext_dims(const Module& m, const Module& n, std::size_t window) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= window; ++i) {
    Module x = syzygy(m, i);
    if (x.dim() == 0) {
      out.resize(window + 1, 0);
      return out;
    }
    out.push_back(ext(m, n, i).dim());
    // Ω^i M = k^t: Ext^{i+j}(M, N) = Ext^j(k^t, N) for j >= 1.
    if (i >= 1 && x.is_killed_by_maximal_ideal() && i < window) {
      std::size_t t = x.dim();
      auto kd = ext_dims(simple_module(m.algebra()), n, window - i);
      for (std::size_t j = 1; j < kd.size(); ++j) out.push_back(t * kd[j]);
      return out;
    }
  }
  return out;
}

std::string PInvariant::to_string() const {
  switch (kind) {
    case Kind::Finite:
      return std::to_string(value);
    case Kind::AboveWindow:
      return "above window " + std::to_string(window);
    case Kind::MinusInfinity:
      return "-infinity";
  }
  return "";
}

PInvariant p_invariant_from_dims(const std::vector<std::size_t>& dims) {
  PInvariant p;
  p.window = dims.empty() ? 0 : dims.size() - 1;
  if (!dims.empty() && dims.back() != 0) {
    p.kind = PInvariant::Kind::AboveWindow;
    p.value = p.window;
    return p;
  }
  for (std::size_t i = dims.size(); i-- > 0;)
    if (dims[i] != 0) {
      p.kind = PInvariant::Kind::Finite;
      p.value = i;
      return p;
    }
  return p;
}

PInvariant p_invariant(const Module& m, const Module& n, std::size_t window) {
  return p_invariant_from_dims(ext_dims(m, n, window));
}

ShortExactSequence extension_middle_term(const ExtGroup& ext1, const Matrix& cocycle) {
  if (ext1.degree != 1) throw Error("extensions are classified by Ext^1");
  if (cocycle.rows() != ext1.cocycles.dim() || cocycle.cols() != 1)
    throw InputError("cocycle has the wrong length for this Ext group");
  const Module& c = ext1.source;
  const Module& a = ext1.target;
  const FreeCover& cc = c.cover();
  const Field& k = c.field();
  Matrix f = ext1.cocycles.map_of(cocycle);
  Module big = direct_sum({a, free_module(c.algebra(), cc.rank)});
  Matrix rel = Matrix::vstack(std::vector<Matrix>{f, -cc.kernel});
  Quotient e = quotient(big, rel);
  ShortExactSequence ses;
  ses.left = a;
  ses.middle = e.module;
  ses.right = c;
  ses.inject = e.projection.block(0, 0, e.module.dim(), a.dim());
  Matrix outer = Matrix::hstack(std::vector<Matrix>{Matrix(k, c.dim(), a.dim()), cc.map});
  ses.surject = outer * e.lift;
  return ses;
}

namespace {

// Lift of the canonical cover of C through the surjection of the sequence, as a map F_C -> E.
Matrix lift_cover(const ShortExactSequence& ses, const Module& c) {
  const FreeCover& cc = c.cover();
  Matrix targets = Matrix::identity(c.field(), c.dim()).select_columns(cc.generators);
  auto pre = ses.surject.solve(targets);
  if (!pre) throw Error("sequence is not surjective onto its right term");
  Matrix u(c.field(), cc.rank * ses.middle.dim(), 1);
  for (std::size_t j = 0; j < cc.rank; ++j) u.set_block(j * ses.middle.dim(), 0, pre->column(j));
  return free_to_module_map(ses.middle, u, cc.rank);
}

}  // namespace

Matrix extension_cocycle(const ShortExactSequence& ses, const ExtGroup& ext1) {
  const Module& c = ext1.source;
  Matrix h = lift_cover(ses, c);
  auto f = ses.inject.solve(h * c.cover().kernel);
  if (!f) throw Error("sequence is not exact in the middle");
  return ext1.cocycles.coordinates(*f);
}

Matrix extension_class(const ShortExactSequence& ses, const ExtGroup& ext1) {
  return ext1.class_of(extension_cocycle(ses, ext1));
}

std::optional<Matrix> extension_equivalence(const ShortExactSequence& s1, const ShortExactSequence& s2,
                                            const ExtGroup& ext1) {
  const Module& c = ext1.source;
  const Module& a = ext1.target;
  Matrix h1 = lift_cover(s1, c), h2 = lift_cover(s2, c);
  Matrix z1 = ext1.cocycles.coordinates(*s1.inject.solve(h1 * c.cover().kernel));
  Matrix z2 = ext1.cocycles.coordinates(*s2.inject.solve(h2 * c.cover().kernel));
  auto w = ext1.coboundary_map.solve(z1 - z2);
  if (!w) return std::nullopt;
  Matrix wmap = free_to_module_map(a, *w, c.cover().rank);
  Matrix psi1 = Matrix::hstack(std::vector<Matrix>{s1.inject, h1});
  Matrix psi2 = Matrix::hstack(std::vector<Matrix>{s2.inject, s2.inject * wmap + h2});
  auto section = psi1.solve(Matrix::identity(c.field(), s1.middle.dim()));
  if (!section) return std::nullopt;
  return psi2 * *section;
}

Pushforward pushforward(const Module& m) {
  Module r = free_module(m.algebra(), 1);
  HomSpace dh = hom_space(m, r);
  Module d = dh.as_module();
  const auto& gens = d.cover().generators;
  std::vector<Matrix> evals;
  for (std::size_t j : gens) evals.push_back(dh.map(j));
  Matrix lambda = evals.empty() ? Matrix(m.field(), 0, m.dim()) : Matrix::vstack(evals);
  if (lambda.rank() != m.dim()) throw Error("module is not torsionless");
  Module f = free_module(m.algebra(), gens.size());
  Quotient q = quotient(f, lambda);
  Pushforward p;
  p.rank = gens.size();
  p.sequence = {m, f, q.module, lambda, q.projection};
  return p;
}

HorseshoeResult horseshoe_syzygy(const ShortExactSequence& ses) {
  const Module& a = ses.left;
  const Module& b = ses.middle;
  const Module& c = ses.right;
  const FreeCover& ca = a.cover();
  const FreeCover& cc = c.cover();
  const Field& k = a.field();
  const std::size_t d = a.ring().dim();

  HorseshoeResult out;
  out.lift = lift_cover(ses, c);
  Matrix q = Matrix::hstack(std::vector<Matrix>{ses.inject * ca.map, out.lift});
  out.splitting = decompose_cover_kernel(b, q);
  const auto& sp = out.splitting;
  out.free_rank = sp.free_rank;

  Matrix back = *sp.iso.inverse();
  Matrix from_a = Matrix::vstack(std::vector<Matrix>{ca.kernel, Matrix(k, cc.rank * d, ca.kernel.cols())});
  Matrix to_c = sp.kernel.block(ca.rank * d, 0, cc.rank * d, sp.kernel.cols()).select_rows(cc.kernel_free);
  out.sequence.left = ca.syzygy;
  out.sequence.middle = sp.split;
  out.sequence.right = cc.syzygy;
  out.sequence.inject = back * from_a.select_rows(sp.kernel_free);
  out.sequence.surject = to_c * sp.iso;
  return out;
}

Matrix ext_syzygy_map(const Module& m, const Module& n) {
  ExtGroup e1 = ext(m, n, 1);
  ExtGroup e2 = ext(m.cover().syzygy, n.cover().syzygy, 1);
  Matrix out(m.field(), e2.dim(), e1.dim());
  for (std::size_t t = 0; t < e1.dim(); ++t) {
    ShortExactSequence ses = extension_middle_term(e1, e1.representatives.column(t));
    HorseshoeResult hs = horseshoe_syzygy(ses);
    out.set_block(0, t, extension_class(hs.sequence, e2));
  }
  return out;
}

SyzygyMapCheck check_surjective_when(const Module& m, const Module& n) {
  SyzygyMapCheck r;
  r.hypothesis = ext(m, free_module(m.algebra(), 1), 2).dim() == 0;
  Matrix f = ext_syzygy_map(m, n);
  r.surjective = f.rank() == f.rows();
  return r;
}

}  // namespace artin
