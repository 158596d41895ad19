#include <random>

#include "artin/homalg.hpp"
#include "artin/module.hpp"
#include "artin/resolution.hpp"

namespace artin {

SplitResult split_free_summands(const Module& m) {
  const LocalAlgebra& R = m.ring();
  const Field& k = m.field();
  SplitResult out;
  if (m.dim() == 0) {
    out.remainder = m;
    out.embedding = Matrix(k, 0, 0);
    return out;
  }
  HomSpace h = hom_space(m, free_module(m.algebra(), 1));
  for (std::size_t t = 0; t < h.dim(); ++t) {
    Matrix phi = h.map(t);
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (phi.is_zero_at(0, c)) continue;
      // phi(e_c) is a unit; normalize so that phi(v) = 1 and split off R v.
      Matrix v = Matrix::unit(k, m.dim(), c);
      Matrix u = phi * v;
      Matrix normalized = R.multiplication_by(R.inverse(u)) * phi;
      std::vector<Matrix> cols;
      for (std::size_t b = 0; b < R.dim(); ++b) cols.push_back(m.action(b) * v);
      Matrix rv = Matrix::hstack(cols);
      Matrix kernel = normalized.kernel_basis();
      Module rest = submodule(m, kernel);
      SplitResult inner = split_free_summands(rest);
      out.free_rank = inner.free_rank + 1;
      out.remainder = inner.remainder;
      out.embedding = Matrix::hstack(std::vector<Matrix>{rv, kernel * inner.embedding});
      return out;
    }
  }
  out.remainder = m;
  out.embedding = Matrix::identity(k, m.dim());
  return out;
}

namespace {

// Coordinates modulo the radical, with respect to the cover generators.
Matrix top_projection(const Module& m) {
  const Field& k = m.field();
  Matrix rad = m.radical();
  Matrix gens = Matrix::identity(k, m.dim()).select_columns(m.cover().generators);
  Matrix basis = Matrix::hstack(std::vector<Matrix>{rad, gens});
  Matrix inv = *basis.inverse();
  return inv.block(rad.cols(), 0, gens.cols(), m.dim());
}

std::optional<std::string> invariant_mismatch(const Module& m, const Module& n) {
  auto cmp = [](const char* what, std::size_t a, std::size_t b) -> std::optional<std::string> {
    if (a == b) return std::nullopt;
    return std::string(what) + " differs (" + std::to_string(a) + " vs " + std::to_string(b) + ")";
  };
  if (auto r = cmp("dimension", m.dim(), n.dim())) return r;
  if (m.dim() == 0) return std::nullopt;
  if (auto r = cmp("radical dimension", m.radical().cols(), n.radical().cols())) return r;
  if (auto r = cmp("socle dimension", m.socle().cols(), n.socle().cols())) return r;
  if (auto r = cmp("minimal generator count", m.minimal_generator_count(), n.minimal_generator_count())) return r;
  auto bm = betti(m, 2), bn = betti(n, 2);
  for (std::size_t i = 0; i < bm.size(); ++i)
    if (auto r = cmp(("Betti number " + std::to_string(i)).c_str(), bm[i], bn[i])) return r;
  Module r = free_module(m.algebra(), 1);
  if (auto d = cmp("dim Hom(-, R)", hom_space(m, r).dim(), hom_space(n, r).dim())) return d;
  std::size_t mm = hom_space(m, m).dim();
  if (auto d = cmp("dim Hom(M, M) vs dim Hom(N, M)", mm, hom_space(n, m).dim())) return d;
  if (auto d = cmp("dim Hom(M, M) vs dim Hom(M, N)", mm, hom_space(m, n).dim())) return d;
  if (auto d = cmp("dim Hom(M, M) vs dim Hom(N, N)", mm, hom_space(n, n).dim())) return d;
  return std::nullopt;
}

bool invertible(const Matrix& a) { return a.rows() == a.cols() && a.rank() == a.rows(); }

// Search for an isomorphism between modules without free summands (or any pair of
// equal-invariant modules); works on the span of the induced maps on M/mM -> N/mN.
IsoResult search_iso(const Module& m, const Module& n, const IsoOptions& opt) {
  const Field& k = m.field();
  IsoResult res;
  if (m.dim() == 0) {
    res.verdict = IsoVerdict::Yes;
    res.witness = Matrix(k, 0, 0);
    return res;
  }
  if (m.is_killed_by_maximal_ideal() && n.is_killed_by_maximal_ideal()) {
    res.verdict = IsoVerdict::Yes;
    res.witness = Matrix::identity(k, m.dim());
    return res;
  }
  HomSpace h = hom_space(m, n);
  Matrix top_n = top_projection(n);
  Matrix gens_m = Matrix::identity(k, m.dim()).select_columns(m.cover().generators);
  const std::size_t g = gens_m.cols();
  std::vector<Matrix> maps, tops;
  for (std::size_t t = 0; t < h.dim(); ++t) {
    maps.push_back(h.map(t));
    tops.push_back(top_n * maps.back() * gens_m);
  }
  // Reduce to maps whose tops are linearly independent; others only add radical noise.
  Matrix flat(k, g * g, tops.size());
  for (std::size_t t = 0; t < tops.size(); ++t)
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) flat.set(i * g + j, t, tops[t].at(i, j));
  std::vector<std::size_t> keep = tops.empty() ? std::vector<std::size_t>{} : flat.independent_columns();
  if (keep.empty()) {
    res.verdict = IsoVerdict::No;
    res.reason = "no homomorphism is surjective modulo the radical";
    return res;
  }
  auto combine = [&](const std::vector<Scalar>& c, bool top_only) {
    Matrix acc(k, top_only ? g : n.dim(), top_only ? g : m.dim());
    for (std::size_t s = 0; s < keep.size(); ++s)
      if (!k.is_zero(c[s])) acc += (top_only ? tops[keep[s]] : maps[keep[s]]).scaled(c[s]);
    return acc;
  };
  auto found = [&](const std::vector<Scalar>& c) {
    res.verdict = IsoVerdict::Yes;
    res.witness = combine(c, false);
    return res;
  };
  std::vector<Scalar> coeffs(keep.size(), k.zero());
  for (std::size_t s = 0; s < keep.size(); ++s) {
    coeffs.assign(keep.size(), k.zero());
    coeffs[s] = k.one();
    if (invertible(combine(coeffs, true))) return found(coeffs);
  }
  std::mt19937_64 rng(opt.seed);
  for (std::size_t trial = 0; trial < opt.budget; ++trial) {
    Matrix c = Matrix::random(k, keep.size(), 1, rng);
    for (std::size_t s = 0; s < keep.size(); ++s) coeffs[s] = c.at(s, 0);
    if (invertible(combine(coeffs, true))) return found(coeffs);
  }
  if (k.is_rationals()) {
    res.verdict = IsoVerdict::Unknown;
    res.reason = "randomized search exhausted its budget";
    return res;
  }
  const std::uint64_t q = k.characteristic();
  double space = 1;
  for (std::size_t s = 0; s < keep.size(); ++s) space *= static_cast<double>(q);
  if (space > double(1 << 20)) {
    res.verdict = IsoVerdict::Unknown;
    res.reason = "randomized search exhausted its budget";
    return res;
  }
  std::vector<std::uint64_t> digits(keep.size(), 0);
  while (true) {
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
    if (pos == digits.size()) break;
    for (std::size_t s = 0; s < keep.size(); ++s) coeffs[s] = k.from_int(static_cast<std::int64_t>(digits[s]));
    if (invertible(combine(coeffs, true))) return found(coeffs);
  }
  res.verdict = IsoVerdict::No;
  res.reason = "exhaustive search: no homomorphism is bijective modulo the radical";
  return res;
}

}  // namespace

IsoResult is_isomorphic(const Module& m, const Module& n, const IsoOptions& options) {
  IsoResult res;
  if (m.algebra() != n.algebra() && !(m.ring().presentation().relations == n.ring().presentation().relations &&
                                      m.ring().dim() == n.ring().dim()))
    throw Error("modules over different algebras");
  if (auto why = invariant_mismatch(m, n)) {
    res.verdict = IsoVerdict::No;
    res.reason = *why;
    return res;
  }
  if (m.dim() == 0) {
    res.verdict = IsoVerdict::Yes;
    res.witness = Matrix(m.field(), 0, 0);
    return res;
  }
  SplitResult sm = split_free_summands(m), sn = split_free_summands(n);
  if (sm.free_rank != sn.free_rank) {
    res.verdict = IsoVerdict::No;
    res.reason = "free ranks differ (" + std::to_string(sm.free_rank) + " vs " + std::to_string(sn.free_rank) + ")";
    return res;
  }
  IsoResult inner = search_iso(sm.remainder, sn.remainder, options);
  if (inner.verdict != IsoVerdict::Yes) {
    res.verdict = inner.verdict;
    res.reason = inner.reason;
    return res;
  }
  const Field& k = m.field();
  Matrix middle = Matrix::direct_sum(
      std::vector<Matrix>{Matrix::identity(k, sm.free_rank * m.ring().dim()), inner.witness});
  res.verdict = IsoVerdict::Yes;
  res.witness = sn.embedding * middle * *sm.embedding.inverse();
  return res;
}

}  // namespace artin
