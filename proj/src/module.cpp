#include "artin/module.hpp"

#include <map>
#include <mutex>

namespace artin {

struct Module::Data {
  AlgebraRef algebra;
  std::size_t dim = 0;
  std::vector<Matrix> variables;
  std::once_flag actions_once;
  std::vector<Matrix> actions;
  std::once_flag cover_once;
  std::unique_ptr<FreeCover> cover;
};

Module::Module(AlgebraRef algebra, std::vector<Matrix> variable_actions) : data_(std::make_shared<Data>()) {
  if (!algebra) throw Error("module without an algebra");
  if (variable_actions.size() != algebra->num_vars())
    throw InputError("expected " + std::to_string(algebra->num_vars()) + " variable actions, got " +
                     std::to_string(variable_actions.size()));
  std::size_t dim = variable_actions.empty() ? 0 : variable_actions[0].rows();
  for (const auto& x : variable_actions)
    if (x.rows() != dim || x.cols() != dim) throw InputError("variable actions must be square of equal size");
  data_->algebra = std::move(algebra);
  data_->dim = dim;
  data_->variables = std::move(variable_actions);
}

Module Module::checked(AlgebraRef algebra, std::vector<Matrix> variable_actions) {
  Module m(std::move(algebra), std::move(variable_actions));
  if (auto defect = m.check_action()) throw InputError(*defect);
  return m;
}

const AlgebraRef& Module::algebra() const {
  if (!data_) throw Error("use of an empty module value");
  return data_->algebra;
}

std::size_t Module::dim() const { return data_ ? data_->dim : 0; }
const Matrix& Module::variable_action(std::size_t i) const { return data_->variables[i]; }
const std::vector<Matrix>& Module::variable_actions() const { return data_->variables; }

const Matrix& Module::action(std::size_t b) const {
  std::call_once(data_->actions_once, [this] {
    const LocalAlgebra& R = ring();
    std::map<Monomial, Matrix> powers;
    auto power_of = [&](auto&& self, const Monomial& u) -> Matrix {
      if (auto it = powers.find(u); it != powers.end()) return it->second;
      Matrix result = Matrix::identity(field(), dim());
      for (std::size_t v = 0; v < u.size(); ++v) {
        if (u[v] == 0) continue;
        Monomial rest = u;
        --rest[v];
        result = data_->variables[v] * self(self, rest);
        break;
      }
      powers.emplace(u, result);
      return result;
    };
    for (const auto& u : R.basis()) data_->actions.push_back(power_of(power_of, u));
  });
  return data_->actions[b];
}

Matrix Module::act(const Matrix& r) const {
  Matrix out(field(), dim(), dim());
  for (std::size_t b = 0; b < ring().dim(); ++b)
    if (!r.is_zero_at(b, 0)) out += action(b).scaled(r.at(b, 0));
  return out;
}

bool Module::is_killed_by_maximal_ideal() const {
  for (const auto& x : variable_actions())
    if (!x.is_zero()) return false;
  return true;
}

Matrix Module::radical() const {
  if (dim() == 0) return Matrix(field(), 0, 0);
  Matrix all = Matrix::hstack(variable_actions());
  return all.select_columns(all.independent_columns());
}

std::size_t Module::minimal_generator_count() const {
  if (dim() == 0) return 0;
  return dim() - Matrix::hstack(variable_actions()).rank();
}

Matrix Module::socle() const {
  if (dim() == 0) return Matrix(field(), 0, 0);
  return Matrix::vstack(variable_actions()).kernel_basis();
}

std::optional<std::string> Module::check_action() const {
  const LocalAlgebra& R = ring();
  const auto& xs = variable_actions();
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!(xs[i] * xs[j] == xs[j] * xs[i]))
        return "actions of " + R.presentation().variables[i] + " and " + R.presentation().variables[j] +
               " do not commute";
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t b = 0; b < R.dim(); ++b) {
      Monomial u = R.basis()[b];
      ++u[i];
      if (!(xs[i] * action(b) == act(R.normal_form(u))))
        return "action violates the relations of the algebra at " + R.presentation().variables[i] + "*" +
               R.basis_label(b);
    }
  return std::nullopt;
}

const FreeCover& Module::cover() const {
  std::call_once(data_->cover_once, [this] {
    const LocalAlgebra& R = ring();
    const std::size_t d = R.dim(), m = dim();
    auto c = std::make_unique<FreeCover>();
    if (m == 0) {
      c->map = Matrix(field(), 0, 0);
      c->section = Matrix(field(), 0, 0);
      c->kernel = Matrix(field(), 0, 0);
      c->syzygy = zero_module(algebra());
      data_->cover = std::move(c);
      return;
    }
    Matrix rad = Matrix::hstack(variable_actions());
    c->generators = rad.extending_columns(Matrix::identity(field(), m));
    c->rank = c->generators.size();
    c->map = Matrix(field(), m, c->rank * d);
    for (std::size_t j = 0; j < c->rank; ++j)
      for (std::size_t b = 0; b < d; ++b) c->map.set_block(0, j * d + b, action(b).column(c->generators[j]));
    auto ker = c->map.kernel();
    c->kernel = std::move(ker.basis);
    c->kernel_free = std::move(ker.free);
    c->section = *c->map.solve(Matrix::identity(field(), m));
    std::vector<Matrix> syz;
    for (std::size_t i = 0; i < R.num_vars(); ++i)
      syz.push_back(block_diagonal_product(R.multiplication_by(R.variable(i)), c->rank, c->kernel)
                        .select_rows(c->kernel_free));
    c->syzygy = Module(algebra(), std::move(syz));
    data_->cover = std::move(c);
  });
  return *data_->cover;
}

bool Module::is_free() const { return cover().rank * ring().dim() == dim(); }

bool ModuleMap::is_r_linear() const {
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) return false;
  for (std::size_t i = 0; i < source.ring().num_vars(); ++i)
    if (!(target.variable_action(i) * matrix == matrix * source.variable_action(i))) return false;
  return true;
}

ModuleMap identity_map(const Module& m) { return {m, m, Matrix::identity(m.field(), m.dim())}; }

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) { return {f.source, g.target, g.matrix * f.matrix}; }

std::optional<std::string> ShortExactSequence::defect() const {
  if (inject.rows() != middle.dim() || inject.cols() != left.dim()) return "injection has the wrong shape";
  if (surject.rows() != right.dim() || surject.cols() != middle.dim()) return "surjection has the wrong shape";
  if (!ModuleMap{left, middle, inject}.is_r_linear()) return "injection is not R-linear";
  if (!ModuleMap{middle, right, surject}.is_r_linear()) return "surjection is not R-linear";
  if (inject.rank() != left.dim()) return "injection is not injective";
  if (surject.rank() != right.dim()) return "surjection is not surjective";
  if (!(surject * inject).is_zero()) return "composite is not zero";
  if (middle.dim() != left.dim() + right.dim()) return "not exact in the middle";
  return std::nullopt;
}

Module zero_module(const AlgebraRef& algebra) {
  return Module(algebra, std::vector<Matrix>(algebra->num_vars(), Matrix(algebra->field(), 0, 0)));
}

Module free_module(const AlgebraRef& algebra, std::size_t rank) {
  std::vector<Matrix> xs;
  for (std::size_t i = 0; i < algebra->num_vars(); ++i)
    xs.push_back(Matrix::kron(Matrix::identity(algebra->field(), rank), algebra->multiplication_by(algebra->variable(i))));
  return Module(algebra, std::move(xs));
}

Module simple_module(const AlgebraRef& algebra) {
  return Module(algebra, std::vector<Matrix>(algebra->num_vars(), Matrix(algebra->field(), 1, 1)));
}

Module cyclic_quotient(const AlgebraRef& algebra, const Matrix& f) {
  return quotient(free_module(algebra, 1), algebra->multiplication_by(f)).module;
}

Module from_presentation(const AlgebraRef& algebra, std::size_t g, std::size_t r,
                         const std::vector<std::vector<Matrix>>& entries) {
  const LocalAlgebra& R = *algebra;
  const std::size_t d = R.dim();
  Matrix images(R.field(), g * d, r);
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t l = 0; l < r; ++l) images.set_block(j * d, l, entries[j][l]);
  Matrix span = free_map_matrix(R, images);
  return quotient(free_module(algebra, g), span).module;
}

std::vector<std::size_t> summand_offsets(const std::vector<Module>& parts) {
  std::vector<std::size_t> off;
  std::size_t acc = 0;
  for (const auto& p : parts) {
    off.push_back(acc);
    acc += p.dim();
  }
  off.push_back(acc);
  return off;
}

Module direct_sum(const std::vector<Module>& parts) {
  if (parts.empty()) throw Error("direct sum of no modules needs an algebra");
  std::vector<Matrix> xs;
  for (std::size_t i = 0; i < parts[0].ring().num_vars(); ++i) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.variable_action(i));
    xs.push_back(Matrix::direct_sum(blocks));
  }
  return Module(parts[0].algebra(), std::move(xs));
}

Module power(const Module& m, std::size_t copies) {
  if (copies == 0) return zero_module(m.algebra());
  return direct_sum(std::vector<Module>(copies, m));
}

Module submodule(const Module& m, const Matrix& columns) {
  std::vector<Matrix> xs;
  for (const auto& x : m.variable_actions()) {
    auto s = columns.solve(x * columns);
    if (!s) throw Error("subspace is not stable under the action");
    xs.push_back(std::move(*s));
  }
  return Module(m.algebra(), std::move(xs));
}

Quotient quotient(const Module& m, const Matrix& span) {
  const Field& k = m.field();
  const std::size_t n = m.dim();
  Matrix basis = span.cols() ? span.select_columns(span.independent_columns()) : Matrix(k, n, 0);
  std::vector<std::size_t> comp = basis.extending_columns(Matrix::identity(k, n));
  Matrix lift(k, n, comp.size());
  for (std::size_t c = 0; c < comp.size(); ++c) lift.set(comp[c], c, k.one());
  Matrix full = Matrix::hstack(std::vector<Matrix>{basis, lift});
  Matrix inv = *full.inverse();
  Matrix projection = inv.block(basis.cols(), 0, comp.size(), n);
  std::vector<Matrix> xs;
  for (const auto& x : m.variable_actions()) xs.push_back(projection * x * lift);
  return {Module(m.algebra(), std::move(xs)), std::move(projection), std::move(lift)};
}

Matrix free_to_module_map(const Module& target, const Matrix& images, std::size_t g) {
  const std::size_t d = target.ring().dim(), n = target.dim();
  Matrix out(target.field(), n, g * d);
  for (std::size_t j = 0; j < g; ++j) {
    Matrix u = images.block(j * n, 0, n, 1);
    for (std::size_t b = 0; b < d; ++b) out.set_block(0, j * d + b, target.action(b) * u);
  }
  return out;
}

Matrix free_map_matrix(const LocalAlgebra& R, const Matrix& images) {
  const std::size_t d = R.dim();
  Matrix out(R.field(), images.rows(), images.cols() * d);
  for (std::size_t t = 0; t < images.cols(); ++t) {
    Matrix col = images.column(t);
    for (std::size_t b = 0; b < d; ++b)
      out.set_block(0, t * d + b, block_diagonal_product(R.multiplication(b), images.rows() / d, col));
  }
  return out;
}

}  // namespace artin
