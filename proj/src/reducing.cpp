#include "artin/reducing.hpp"

#include <random>

#include "artin/invariants.hpp"
#include "artin/resolution.hpp"

namespace artin {

std::string to_string(Target t) { return t == Target::PD ? "pd" : "gdim"; }

namespace {

bool r_linear(const Module& s, const Module& t, const Matrix& f) {
  if (f.rows() != t.dim() || f.cols() != s.dim()) return false;
  return ModuleMap{s, t, f}.is_r_linear();
}

Matrix copies_of(const Matrix& m, std::size_t copies) {
  return Matrix::kron(Matrix::identity(m.field(), copies), m);
}

}  // namespace

bool terminal_holds(const Module& k, Target target, std::size_t window, std::string* verdict) {
  if (target == Target::PD) {
    bool ok = k.is_free();
    if (verdict) *verdict = ok ? "free" : "not free";
    return ok;
  }
  ReflexivityReport r = is_totally_reflexive(k, window);
  if (verdict) *verdict = r.to_string();
  return r.passed();
}

VerifyReport verify(const ReducingSequence& seq, std::size_t window) {
  VerifyReport rep;
  rep.window = window;
  auto reject = [&](std::size_t step, std::string why) {
    rep.accepted = false;
    rep.step = step;
    rep.reason = std::move(why);
    return rep;
  };
  if (auto d = seq.base.check_action()) return reject(0, "base module: " + *d);
  for (std::size_t i = 1; i <= seq.length(); ++i) {
    const ReducingStep& s = seq.steps[i - 1];
    const Module& prev = seq.module(i - 1);
    if (s.a == 0 || s.b == 0 || s.n == 0) return reject(i, "a, b and n must be positive");
    if (s.module.algebra() != seq.base.algebra() && s.module.ring().dim() != seq.base.ring().dim())
      return reject(i, "module over a different algebra");
    if (auto d = s.module.check_action()) return reject(i, "middle module: " + *d);
    if (auto d = s.quotient.check_action()) return reject(i, "quotient module: " + *d);
    ShortExactSequence ses{power(prev, s.a), s.module, s.quotient, s.inject, s.surject};
    if (auto d = ses.defect()) return reject(i, "sequence: " + *d);
    Module expected = power(syzygy(prev, s.n), s.b);
    if (!r_linear(s.quotient, expected, s.iso)) return reject(i, "syzygy mismatch: witness is not an R-linear map");
    if (s.iso.rank() != expected.dim() || expected.dim() != s.quotient.dim())
      return reject(i, "syzygy mismatch: witness is not an isomorphism");
  }
  if (!terminal_holds(seq.last(), seq.target, window, &rep.terminal))
    return reject(0, "terminal module fails the " + to_string(seq.target) + " condition: " + rep.terminal);
  rep.accepted = true;
  return rep;
}

Matrix omega_drop_free(const Module& x, std::size_t f, std::size_t k) {
  if (k == 0) throw Error("omega_drop_free needs k >= 1");
  const Module omega = x.cover().syzygy;
  Module total = direct_sum({x, free_module(x.algebra(), f)});
  Matrix first = f == 0 ? Matrix::identity(x.field(), omega.dim())
                        : syzygy_of_direct_sum({x, free_module(x.algebra(), f)});
  if (k == 1) return first;
  return induced_syzygy_map(omega, total.cover().syzygy, first, k - 1);
}

std::optional<Matrix> find_retraction(const Module& a, const Module& b, const Matrix& incl) {
  const Field& k = a.field();
  if (a.dim() == 0) return Matrix(k, 0, b.dim());
  HomSpace h = hom_space(b, a);
  const auto& gens = a.cover().generators;
  const std::size_t g = gens.size(), da = a.dim();
  Matrix eqs(k, g * da, h.dim());
  Matrix rhs(k, g * da, 1);
  Matrix at_gens = incl.select_columns(gens);
  for (std::size_t t = 0; t < h.dim(); ++t) {
    Matrix v = h.map(t) * at_gens;
    for (std::size_t j = 0; j < g; ++j) eqs.set_block(j * da, t, v.column(j));
  }
  for (std::size_t j = 0; j < g; ++j) rhs.set(j * da + gens[j], 0, k.one());
  auto c = eqs.solve(rhs);
  if (!c) return std::nullopt;
  return h.map_of(*c);
}

namespace {

struct Candidate {
  ReducingStep step;
  std::string heuristic;
};

class Searcher {
 public:
  Searcher(const SearchConfig& cfg, Target target, SearchStats* stats)
      : cfg_(cfg), target_(target), stats_(stats ? stats : &local_) {}

  std::optional<std::vector<Candidate>> run(const Module& k, std::size_t depth) {
    ++stats_->nodes;
    if (terminal_holds(k, target_, cfg_.window)) return std::vector<Candidate>{};
    if (depth == 0 || k.dim() == 0) return std::nullopt;
    std::optional<std::vector<Candidate>> found;
    auto consider = [&](Candidate&& c) {
      ++stats_->candidates;
      if (cfg_.prune_torsionless && !is_torsionless(c.step.module)) {
        ++stats_->pruned;
        return false;
      }
      auto rest = run(c.step.module, depth - 1);
      if (!rest) return false;
      rest->insert(rest->begin(), std::move(c));
      found = std::move(rest);
      return true;
    };
    if (h1(k, consider) || h2(k, consider) || h3(k, consider)) return found;
    return std::nullopt;
  }

 private:
  template <class F>
  bool h1(const Module& k, F& consider) {
    const std::size_t d = k.ring().dim();
    for (std::size_t n = 1; n <= cfg_.max_n; ++n)
      for (std::size_t b = 1; b <= cfg_.max_b; ++b) {
        Module x = power(syzygy(k, n), b);
        const FreeCover& cx = x.cover();
        const Module& ox = cx.syzygy;
        for (std::size_t a = 1; a <= cfg_.max_a; ++a) {
          std::size_t total = a * k.dim();
          if (total < ox.dim() || (total - ox.dim()) % d != 0) continue;
          std::size_t c = (total - ox.dim()) / d;
          Module ka = power(k, a);
          Module y = direct_sum({ox, free_module(k.algebra(), c)});
          ++stats_->iso_tests;
          IsoResult iso = is_isomorphic(ka, y, {cfg_.budget, cfg_.seed});
          if (iso.verdict != IsoVerdict::Yes) continue;
          const Field& f = k.field();
          Candidate cand;
          cand.heuristic = "h1";
          cand.step.a = a;
          cand.step.b = b;
          cand.step.n = n;
          cand.step.module = free_module(k.algebra(), cx.rank + c);
          cand.step.inject =
              Matrix::direct_sum(std::vector<Matrix>{cx.kernel, Matrix::identity(f, c * d)}) * iso.witness;
          cand.step.quotient = x;
          cand.step.surject = Matrix::hstack(std::vector<Matrix>{cx.map, Matrix(f, x.dim(), c * d)});
          cand.step.iso = Matrix::identity(f, x.dim());
          if (consider(std::move(cand))) return true;
        }
      }
    return false;
  }

  template <class F>
  bool h2(const Module& k, F& consider) {
    const Field& f = k.field();
    for (std::size_t n = 1; n <= cfg_.max_n; ++n)
      for (std::size_t b = 1; b <= cfg_.max_b; ++b) {
        Module x = power(syzygy(k, n), b);
        for (std::size_t a = 1; a <= cfg_.max_a; ++a) {
          Module ka = power(k, a);
          Candidate cand;
          cand.heuristic = "h2";
          cand.step.a = a;
          cand.step.b = b;
          cand.step.n = n;
          cand.step.module = direct_sum({ka, x});
          cand.step.inject = Matrix::vstack(std::vector<Matrix>{Matrix::identity(f, ka.dim()), Matrix(f, x.dim(), ka.dim())});
          cand.step.quotient = x;
          cand.step.surject = Matrix::hstack(std::vector<Matrix>{Matrix(f, x.dim(), ka.dim()), Matrix::identity(f, x.dim())});
          cand.step.iso = Matrix::identity(f, x.dim());
          if (consider(std::move(cand))) return true;
        }
      }
    return false;
  }

  template <class F>
  bool h3(const Module& k, F& consider) {
    if (cfg_.budget <= 1) return false;
    const Field& f = k.field();
    const std::size_t node = stats_->nodes;
    for (std::size_t n = 1; n <= cfg_.max_n; ++n)
      for (std::size_t b = 1; b <= cfg_.max_b; ++b) {
        Module x = power(syzygy(k, n), b);
        for (std::size_t a = 1; a <= cfg_.max_a; ++a) {
          Module ka = power(k, a);
          ExtGroup e = ext(x, ka, 1);
          if (e.dim() == 0) continue;
          std::seed_seq seq{cfg_.seed, std::uint64_t(node), std::uint64_t(a), std::uint64_t(b), std::uint64_t(n)};
          std::mt19937_64 rng(seq);
          // The zero class is the split extension tried by h2.
          for (std::size_t t = 1; t < cfg_.budget; ++t) {
            Matrix cls;
            if (t <= e.dim()) {
              cls = Matrix::unit(f, e.dim(), t - 1);
            } else {
              cls = Matrix::random(f, e.dim(), 1, rng);
              if (cls.is_zero()) continue;
            }
            ShortExactSequence ses = extension_middle_term(e, e.cocycle_of(cls));
            Candidate cand;
            cand.heuristic = "h3";
            cand.step.a = a;
            cand.step.b = b;
            cand.step.n = n;
            cand.step.module = ses.middle;
            cand.step.inject = ses.inject;
            cand.step.quotient = x;
            cand.step.surject = ses.surject;
            cand.step.iso = Matrix::identity(f, x.dim());
            if (consider(std::move(cand))) return true;
          }
        }
      }
    return false;
  }

  SearchConfig cfg_;
  Target target_;
  SearchStats local_;
  SearchStats* stats_;
};

}  // namespace

std::optional<ReducingSequence> search(const Module& m, const SearchConfig& cfg, Target target, SearchStats* stats) {
  SearchStats local;
  SearchStats* st = stats ? stats : &local;
  if (cfg.prune_torsionless && !is_torsionless(m)) {
    ++st->pruned;
    return std::nullopt;
  }
  Searcher s(cfg, target, st);
  for (std::size_t r = 0; r <= cfg.max_r; ++r) {
    auto found = s.run(m, r);
    if (!found) continue;
    ReducingSequence seq;
    seq.base = m;
    seq.target = target;
    for (auto& c : *found) seq.steps.push_back(std::move(c.step));
    st->heuristic = found->empty() ? "terminal" : (*found)[0].heuristic;
    return seq;
  }
  return std::nullopt;
}

ReducingSequence transform_syzygy(const ReducingSequence& seq, std::size_t window) {
  VerifyReport rep = verify(seq, window);
  if (!rep.accepted) throw InputError("input sequence does not verify: " + rep.reason);
  const AlgebraRef& alg = seq.base.algebra();
  const Field& k = seq.base.field();
  const std::size_t d = alg->dim();

  ReducingSequence out;
  out.target = seq.target;
  out.base = seq.base.cover().syzygy;
  std::size_t f = 0;
  for (std::size_t i = 1; i <= seq.length(); ++i) {
    const ReducingStep& s = seq.steps[i - 1];
    const Module& prev = seq.module(i - 1);
    const Module& omega_prev = prev.cover().syzygy;
    const std::size_t dO = omega_prev.dim(), fd = f * d;

    HorseshoeResult hs = horseshoe_syzygy({power(prev, s.a), s.module, s.quotient, s.inject, s.surject});
    const std::size_t g = hs.free_rank;
    const std::size_t hs_dim = hs.sequence.middle.dim();
    Module z = direct_sum({s.module.cover().syzygy, free_module(alg, g + s.a * f)});

    Matrix into_hs = hs.sequence.inject * syzygy_of_power(prev, s.a, 1);
    Matrix inject(k, z.dim(), s.a * (dO + fd));
    for (std::size_t c = 0; c < s.a; ++c) {
      inject.set_block(0, c * (dO + fd), into_hs.block(0, c * dO, hs_dim, dO));
      if (fd) inject.set_block(hs_dim + c * fd, c * (dO + fd) + dO, Matrix::identity(k, fd));
    }
    Matrix surject = Matrix::hstack(std::vector<Matrix>{hs.sequence.surject, Matrix(k, hs.sequence.right.dim(), s.a * fd)});

    Module omega_n = syzygy(prev, s.n);
    Module pw = power(omega_n, s.b);
    Matrix lifted = induced_syzygy_map(s.quotient, pw, s.iso);
    Matrix regroup = *syzygy_of_power(omega_n, s.b, 1).inverse();
    Matrix drop = copies_of(omega_drop_free(omega_prev, f, s.n), s.b);

    ReducingStep t;
    t.a = s.a;
    t.b = s.b;
    t.n = s.n;
    t.module = z;
    t.inject = std::move(inject);
    t.quotient = s.quotient.cover().syzygy;
    t.surject = std::move(surject);
    t.iso = drop * regroup * lifted;
    out.steps.push_back(std::move(t));
    f = g + s.a * f;
  }
  return out;
}

CosyzygyResult transform_cosyzygy(const ReducingSequence& seq, const Module& n, const Matrix& omega_n_to_m,
                                  std::size_t window) {
  CosyzygyResult res;
  const Module& m = seq.base;
  const AlgebraRef& alg = m.algebra();
  const Field& k = m.field();
  const std::size_t d = alg->dim();

  auto dims = ext_dims(m, free_module(alg, 1), window);
  for (std::size_t i = 1; i < dims.size(); ++i)
    if (dims[i] != 0) {
      res.reason = "precondition fails: Ext^" + std::to_string(i) + "(M, R) != 0";
      return res;
    }
  VerifyReport rep = verify(seq, window);
  if (!rep.accepted) {
    res.reason = "input sequence does not verify: " + rep.reason;
    return res;
  }
  const Module& omega_n = n.cover().syzygy;
  if (!r_linear(omega_n, m, omega_n_to_m) || omega_n_to_m.rank() != m.dim() || omega_n.dim() != m.dim()) {
    res.reason = "witness is not an isomorphism from the syzygy of N to M";
    return res;
  }

  ReducingSequence out;
  out.base = n;
  out.target = seq.target;
  Module w = n;
  std::size_t f = 0;
  Matrix kappa = omega_n_to_m;  // Ω W (+) R^f -> K_{i-1}

  for (std::size_t i = 1; i <= seq.length(); ++i) {
    const ReducingStep& s = seq.steps[i - 1];
    const Module& prev = seq.module(i - 1);
    const Module& ki = s.module;
    const Module ow = w.cover().syzygy;
    const std::size_t dO = ow.dim(), fd = f * d, a = s.a, b = s.b;

    Matrix kinv = *kappa.inverse();
    Matrix proj_o = kinv.block(0, 0, dO, prev.dim());
    Matrix proj_f = kinv.block(dO, 0, fd, prev.dim());
    Matrix incl_o = kappa.block(0, 0, prev.dim(), dO);
    Matrix incl_f = kappa.block(0, dO, prev.dim(), fd);

    // Pushout along the split epimorphism K^a -> (ΩW)^a.
    Matrix free_part = s.inject * copies_of(incl_f, a);
    Quotient lq = quotient(ki, free_part);
    const Module& l = lq.module;
    Matrix l_inject = lq.projection * s.inject * copies_of(incl_o, a);
    Matrix l_surject = s.surject * lq.lift;

    Matrix theta_split;  // K_i -> L (+) R^{af}
    if (a * fd != 0) {
      auto rho = find_retraction(free_module(alg, a * f), ki, free_part);
      if (!rho) throw Error("free part of the pushout does not split off");
      theta_split = Matrix::vstack(std::vector<Matrix>{lq.projection, *rho});
    } else {
      theta_split = lq.projection;
    }
    Matrix theta_inv = *theta_split.inverse();

    // Transport 0 -> (ΩW)^a -> L -> T -> 0 to canonical syzygies and lift its class.
    Module z = syzygy(prev, s.n - 1);
    Module y = power(z, b);
    Module wa = power(w, a);
    const Module& oy = y.cover().syzygy;
    const Module& owa = wa.cover().syzygy;
    Matrix tau_l = syzygy_of_power(w, a, 1);
    Matrix tau_r = syzygy_of_power(z, b, 1) * s.iso;
    ShortExactSequence lseq{owa, l, oy, l_inject * *tau_l.inverse(), tau_r * l_surject};
    if (auto why = lseq.defect()) throw Error("pushout sequence: " + *why);
    ExtGroup e_omega = ext(oy, owa, 1);
    Matrix cls = extension_class(lseq, e_omega);
    Matrix fmap = ext_syzygy_map(y, wa);
    auto pre = fmap.solve(cls);
    if (!pre) throw Error("class does not lift along Ext^1(Y, W^a) -> Ext^1(ΩY, ΩW^a)");
    ExtGroup e1 = ext(y, wa, 1);
    ShortExactSequence pseq = extension_middle_term(e1, e1.cocycle_of(*pre));
    const Module& p = pseq.middle;
    HorseshoeResult hs = horseshoe_syzygy(pseq);
    auto eps = extension_equivalence(hs.sequence, lseq, e_omega);
    if (!eps) throw Error("horseshoe sequence is not equivalent to the pushout sequence");
    const std::size_t g = hs.free_rank;
    const Module& op = p.cover().syzygy;

    ReducingStep t;
    t.a = a;
    t.b = b;
    t.n = s.n;
    Matrix nu;  // Ω W_i -> Ω P
    Module wi;
    if (s.n == 1) {
      // Pull back along the split mono (ΩW)^b -> K^b.
      const std::size_t bf = b * f;
      Matrix c = copies_of(proj_f, b) * pseq.surject;
      Matrix basis = bf ? c.kernel_basis() : Matrix::identity(k, p.dim());
      wi = submodule(p, basis);
      t.inject = *basis.solve(pseq.inject);
      t.quotient = power(ow, b);
      t.surject = copies_of(proj_o, b) * pseq.surject * basis;
      t.iso = Matrix::identity(k, t.quotient.dim());
      if (bf) {
        Module fb = free_module(alg, bf);
        Matrix unit_gens(k, bf * d, bf);
        for (std::size_t j = 0; j < bf; ++j) unit_gens.set(j * d, j, k.one());
        Matrix pre_gens = *c.solve(unit_gens);
        Matrix stacked(k, bf * p.dim(), 1);
        for (std::size_t j = 0; j < bf; ++j) stacked.set_block(j * p.dim(), 0, pre_gens.column(j));
        Matrix section = free_to_module_map(p, stacked, bf);
        Matrix u = Matrix::hstack(std::vector<Matrix>{basis, section});
        Module sum = direct_sum({wi, fb});
        nu = induced_syzygy_map(sum, p, u) * omega_drop_free(wi, bf, 1);
      } else {
        nu = induced_syzygy_map(wi, p, basis);
      }
    } else {
      wi = p;
      t.inject = pseq.inject;
      t.quotient = y;
      t.surject = pseq.surject;
      Module sum = direct_sum({ow, free_module(alg, f)});
      Matrix zeta = copies_of(induced_syzygy_map(sum, prev, kappa, s.n - 1) * omega_drop_free(ow, f, s.n - 1), b);
      t.iso = *zeta.inverse();
      nu = Matrix::identity(k, op.dim());
    }
    t.module = wi;
    const std::size_t hs_free = g * d;
    Matrix to_l = Matrix::direct_sum(std::vector<Matrix>{*eps, Matrix::identity(k, a * fd)});
    Matrix widen = Matrix::direct_sum(std::vector<Matrix>{nu, Matrix::identity(k, hs_free + a * fd)});
    kappa = theta_inv * to_l * widen;
    out.steps.push_back(std::move(t));
    w = wi;
    f = g + a * f;
  }
  VerifyReport fin = verify(out, window);
  res.sequence = std::move(out);
  res.accepted = fin.accepted;
  if (!fin.accepted) res.reason = "constructed sequence does not verify: " + fin.reason;
  return res;
}

}  // namespace artin
