#include "artin/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace artin {

namespace {

unsigned degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

// All exponent vectors of total degree `deg` in n variables, x_1-heavy first.
void monomials_of_degree(std::size_t n, unsigned deg, std::vector<Monomial>& out) {
  Monomial cur(n, 0);
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == n) {
      cur[var] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[var] = e;
      self(self, var + 1, left - e);
    }
  };
  if (n == 0) {
    if (deg == 0) out.push_back(cur);
    return;
  }
  rec(rec, 0, deg);
}

class PolyParser {
 public:
  PolyParser(const Field& field, std::string_view text, const std::vector<std::string>& vars)
      : field_(field), text_(text), vars_(vars) {}

  Polynomial parse() {
    std::map<Monomial, Scalar> acc;
    skip();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < text_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [mono, coeff] = term();
      if (negative) coeff = field_.neg(coeff);
      auto it = acc.find(mono);
      if (it == acc.end())
        acc.emplace(mono, coeff);
      else
        it->second = field_.add(it->second, coeff);
      skip();
    }
    Polynomial p;
    for (auto& [m, c] : acc)
      if (!field_.is_zero(c)) p.terms.push_back({m, c});
    return p;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("cannot parse polynomial '" + std::string(text_) + "': " + why + " at offset " +
                     std::to_string(pos_));
  }

  std::pair<Monomial, Scalar> term() {
    Monomial mono(vars_.size(), 0);
    Scalar coeff = field_.one();
    while (true) {
      skip();
      factor(mono, coeff);
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    return {mono, coeff};
  }

  void factor(Monomial& mono, Scalar& coeff) {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (peek() == '/') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("bad fraction");
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
      coeff = field_.mul(coeff, field_.parse(text_.substr(start, pos_ - start)));
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) fail("unknown variable '" + name + "'");
      unsigned exp = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        skip();
        std::size_t es = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (es == pos_) fail("missing exponent");
        exp = static_cast<unsigned>(std::stoul(std::string(text_.substr(es, pos_ - es))));
      }
      mono[static_cast<std::size_t>(it - vars_.begin())] += exp;
      return;
    }
    fail("unexpected character");
  }

  const Field& field_;
  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const Field& field, std::string_view text, const std::vector<std::string>& variables) {
  return PolyParser(field, text, variables).parse();
}

AlgebraRef build_algebra(const AlgebraPresentation& p) {
  if (p.variables.empty()) throw InputError("an algebra needs at least one variable", "/algebra/vars");
  if (p.nilpotency < 1) throw InputError("nilpotency degree must be at least 1", "/algebra/nilpotency");
  for (std::size_t i = 0; i < p.variables.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (p.variables[i] == p.variables[j])
        throw InputError("duplicate variable name '" + p.variables[i] + "'", "/algebra/vars");

  const Field& k = p.field;
  const std::size_t n = p.variables.size();
  const unsigned N = p.nilpotency;

  std::vector<Monomial> mons;
  for (unsigned deg = 0; deg < N; ++deg) monomials_of_degree(n, deg, mons);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < mons.size(); ++i) index.emplace(mons[i], i);

  // Columns are ordered largest-first (highest degree, then lex) so that rref
  // pivots land on leading monomials and the complement is a set of standard monomials.
  const std::size_t D = mons.size();
  std::vector<std::size_t> col_of(D), mon_of_col(D);
  {
    std::size_t c = 0;
    std::size_t end = D;
    for (unsigned deg = N; deg-- > 0;) {
      std::size_t begin = end;
      while (begin > 0 && degree(mons[begin - 1]) == deg) --begin;
      for (std::size_t i = begin; i < end; ++i) {
        col_of[i] = c;
        mon_of_col[c] = i;
        ++c;
      }
      end = begin;
    }
  }

  std::vector<Matrix> rows;
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    Polynomial f;
    try {
      f = parse_polynomial(k, p.relations[r], p.variables);
    } catch (const InputError& e) {
      throw InputError(e.what(), "/algebra/relations/" + std::to_string(r));
    }
    for (const auto& t : f.terms)
      if (degree(t.exponents) == 0)
        throw InputError("relation '" + p.relations[r] + "' has a nonzero constant term",
                         "/algebra/relations/" + std::to_string(r));
    for (const auto& u : mons) {
      Matrix row(k, 1, D);
      bool any = false;
      for (const auto& t : f.terms) {
        Monomial prod = u;
        for (std::size_t v = 0; v < n; ++v) prod[v] += t.exponents[v];
        if (degree(prod) >= N) continue;
        std::size_t c = col_of[index.at(prod)];
        row.set(0, c, k.add(row.at(0, c), t.coefficient));
        any = true;
      }
      if (any) rows.push_back(std::move(row));
    }
  }

  Matrix span = rows.empty() ? Matrix(k, 0, D) : Matrix::vstack(rows);
  auto [red, pivots] = span.rref();
  std::vector<std::ptrdiff_t> pivot_row(D, -1);
  for (std::size_t i = 0; i < pivots.size(); ++i) pivot_row[pivots[i]] = static_cast<std::ptrdiff_t>(i);
  if (pivot_row[col_of[0]] >= 0) throw InputError("the relations generate the unit ideal", "/algebra/relations");

  auto alg = std::shared_ptr<LocalAlgebra>(new LocalAlgebra());
  alg->presentation_ = p;
  alg->all_monomials_ = mons;
  std::vector<std::ptrdiff_t> basis_index(D, -1);
  for (std::size_t i = 0; i < D; ++i)
    if (pivot_row[col_of[i]] < 0) {
      basis_index[i] = static_cast<std::ptrdiff_t>(alg->basis_.size());
      alg->basis_.push_back(mons[i]);
    }
  const std::size_t d = alg->basis_.size();

  alg->normal_forms_.reserve(D);
  for (std::size_t i = 0; i < D; ++i) {
    Matrix nf(k, d, 1);
    if (basis_index[i] >= 0) {
      nf.set(static_cast<std::size_t>(basis_index[i]), 0, k.one());
    } else {
      auto r = static_cast<std::size_t>(pivot_row[col_of[i]]);
      for (std::size_t j = 0; j < D; ++j) {
        if (basis_index[j] < 0 || red.is_zero_at(r, col_of[j])) continue;
        nf.set(static_cast<std::size_t>(basis_index[j]), 0, k.neg(red.at(r, col_of[j])));
      }
    }
    alg->normal_forms_.push_back(std::move(nf));
  }

  alg->mult_.reserve(d);
  for (std::size_t b = 0; b < d; ++b) {
    Matrix L(k, d, d);
    for (std::size_t c = 0; c < d; ++c) {
      Monomial prod = alg->basis_[b];
      for (std::size_t v = 0; v < n; ++v) prod[v] += alg->basis_[c][v];
      L.set_block(0, c, alg->normal_form(prod));
    }
    alg->mult_.push_back(std::move(L));
  }
  for (std::size_t v = 0; v < n; ++v) {
    Monomial x(n, 0);
    x[v] = 1;
    alg->variables_.push_back(alg->normal_form(x));
  }

  std::vector<Matrix> squares;
  for (std::size_t b = 1; b < d; ++b) squares.push_back(alg->mult_[b].block(0, 1, d, d - 1));
  std::size_t sq_rank = squares.empty() ? 0 : Matrix::hstack(squares).rank();
  alg->embedding_dim_ = (d - 1) - sq_rank;
  return alg;
}

std::string LocalAlgebra::basis_label(std::size_t b) const {
  const Monomial& m = basis_[b];
  std::string out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += presentation_.variables[v];
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

Matrix LocalAlgebra::multiplication_by(const Matrix& element) const {
  Matrix L(field(), dim(), dim());
  for (std::size_t b = 0; b < dim(); ++b) {
    if (element.is_zero_at(b, 0)) continue;
    L += mult_[b].scaled(element.at(b, 0));
  }
  return L;
}

Matrix LocalAlgebra::normal_form(const Monomial& m) const {
  if (degree(m) >= nilpotency()) return zero();
  auto it = std::find(all_monomials_.begin(), all_monomials_.end(), m);
  return normal_forms_[static_cast<std::size_t>(it - all_monomials_.begin())];
}

Matrix LocalAlgebra::socle() const {
  std::vector<Matrix> parts;
  for (const auto& x : variables_) parts.push_back(multiplication_by(x));
  return Matrix::vstack(parts).kernel_basis();
}

Matrix LocalAlgebra::inverse(const Matrix& unit) const {
  auto x = multiplication_by(unit).solve(one());
  if (!x) throw Error("element is not a unit");
  return *x;
}

Matrix LocalAlgebra::parse_element(std::string_view text) const {
  Polynomial f = parse_polynomial(field(), text, presentation_.variables);
  Matrix r = zero();
  for (const auto& t : f.terms) r += normal_form(t.exponents).scaled(t.coefficient);
  return r;
}

std::string LocalAlgebra::format_element(const Matrix& r) const {
  std::string out;
  for (std::size_t b = 0; b < dim(); ++b) {
    if (r.is_zero_at(b, 0)) continue;
    std::string coeff = field().format(r.at(b, 0));
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    std::string label = basis_label(b);
    std::string term;
    if (label == "1")
      term = coeff;
    else if (coeff == "1")
      term = label;
    else
      term = coeff + "*" + label;
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

bool LocalAlgebra::satisfies_axioms() const {
  const std::size_t d = dim();
  if (!(mult_[0] == Matrix::identity(field(), d))) return false;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      if (!(mult_[a] * basis_element(b) == mult_[b] * basis_element(a))) return false;
      // (e_a e_b) e_c = e_a (e_b e_c) for all c  <=>  L_{e_a e_b} = L_a L_b
      if (!(multiplication_by(mult_[a] * basis_element(b)) == mult_[a] * mult_[b])) return false;
    }
  return true;
}

}  // namespace artin
