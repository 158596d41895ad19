#include "artin/matrix.hpp"

#include <algorithm>
#include <utility>

namespace artin {

namespace {

struct FpOps {
  using E = std::uint32_t;
  std::uint32_t p;

  E zero() const { return 0; }
  E one() const { return 1; }
  bool is_zero(E a) const { return a == 0; }
  bool is_one(E a) const { return a == 1; }
  E add(E a, E b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  E sub(E a, E b) const { return a >= b ? a - b : a + (p - b); }
  E mul(E a, E b) const { return static_cast<E>(std::uint64_t{a} * b % p); }
  E neg(E a) const { return a == 0 ? 0 : p - a; }
  E inv(E a) const {
    std::uint64_t result = 1, base = a, exp = p - 2;
    while (exp > 0) {
      if (exp & 1) result = result * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    return static_cast<E>(result);
  }
  E from(const Scalar& s) const { return s.residue(); }
  Scalar to(E a) const { return Scalar(a); }
};

struct QOps {
  using E = mpq_class;

  E zero() const { return 0; }
  E one() const { return 1; }
  bool is_zero(const E& a) const { return sgn(a) == 0; }
  bool is_one(const E& a) const { return a == 1; }
  E add(const E& a, const E& b) const { return a + b; }
  E sub(const E& a, const E& b) const { return a - b; }
  E mul(const E& a, const E& b) const { return a * b; }
  E neg(const E& a) const { return -a; }
  E inv(const E& a) const { return 1 / a; }
  E from(const Scalar& s) const { return s.rational(); }
  Scalar to(const E& a) const { return Scalar(a); }
};

template <class Fn>
decltype(auto) with_ops(const Field& f, Fn&& fn) {
  if (f.is_rationals()) return fn(QOps{});
  return fn(FpOps{f.characteristic()});
}

template <class Ops>
std::vector<typename Ops::E>& storage(std::variant<std::vector<std::uint32_t>, std::vector<mpq_class>>& d) {
  return std::get<std::vector<typename Ops::E>>(d);
}

template <class Ops>
const std::vector<typename Ops::E>& storage(
    const std::variant<std::vector<std::uint32_t>, std::vector<mpq_class>>& d) {
  return std::get<std::vector<typename Ops::E>>(d);
}

// Gauss-Jordan elimination in place. Only rows with a nonzero entry in the
// pivot column are touched, and only on the nonzero columns of the pivot row,
// so sparse inputs stay cheap. With full == false rows above the pivot are
// left alone (row echelon form, enough for rank).
template <class Ops>
std::vector<std::size_t> eliminate(const Ops& ops, std::vector<typename Ops::E>& a, std::size_t rows,
                                   std::size_t cols, bool full, std::size_t col_limit) {
  using E = typename Ops::E;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> nz;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < col_limit && rank < rows; ++c) {
    std::size_t r = rank;
    while (r < rows && ops.is_zero(a[r * cols + c])) ++r;
    if (r == rows) continue;
    if (r != rank)
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(r * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * cols));
    E* prow = &a[rank * cols];
    if (!ops.is_one(prow[c])) {
      E inv = ops.inv(prow[c]);
      for (std::size_t j = c; j < cols; ++j)
        if (!ops.is_zero(prow[j])) prow[j] = ops.mul(prow[j], inv);
    }
    nz.clear();
    for (std::size_t j = c; j < cols; ++j)
      if (!ops.is_zero(prow[j])) nz.push_back(j);
    std::size_t start = full ? 0 : rank + 1;
    for (std::size_t i = start; i < rows; ++i) {
      if (i == rank) continue;
      E* row = &a[i * cols];
      if (ops.is_zero(row[c])) continue;
      E f = row[c];
      if constexpr (std::is_same_v<Ops, FpOps>) {
        if (ops.p == 2) {
          for (std::size_t j : nz) row[j] ^= prow[j];
          continue;
        }
      }
      for (std::size_t j : nz) row[j] = ops.sub(row[j], ops.mul(f, prow[j]));
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix() : field_(Field::prime(2)), data_(std::vector<std::uint32_t>{}) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols) : field_(field), rows_(rows), cols_(cols) {
  if (field.is_rationals())
    data_ = std::vector<mpq_class>(rows * cols);
  else
    data_ = std::vector<std::uint32_t>(rows * cols, 0);
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
  return m;
}

Matrix Matrix::from_scalars(Field field, std::size_t rows, std::size_t cols,
                            const std::vector<Scalar>& row_major) {
  if (row_major.size() != rows * cols)
    throw InputError("matrix data has " + std::to_string(row_major.size()) + " entries, expected " +
                     std::to_string(rows * cols));
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, row_major[i * cols + j]);
  return m;
}

Matrix Matrix::from_strings(Field field, std::size_t rows, std::size_t cols,
                            const std::vector<std::string>& row_major) {
  std::vector<Scalar> values;
  values.reserve(row_major.size());
  for (const auto& s : row_major) values.push_back(field.parse(s));
  return from_scalars(field, rows, cols, values);
}

Matrix Matrix::random(Field field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (field.is_rationals())
        m.set(i, j, field.from_int(static_cast<std::int64_t>(rng() % 7) - 3));
      else
        m.set(i, j, Scalar(static_cast<std::uint32_t>(rng() % field.characteristic())));
    }
  return m;
}

Matrix Matrix::unit(Field field, std::size_t n, std::size_t i) {
  Matrix m(field, n, 1);
  m.set(i, 0, field.one());
  return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  return with_ops(field_, [&](auto ops) { return ops.to(storage<decltype(ops)>(data_)[i * cols_ + j]); });
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  with_ops(field_, [&](auto ops) { storage<decltype(ops)>(data_)[i * cols_ + j] = ops.from(v); });
}

bool Matrix::is_zero_at(std::size_t i, std::size_t j) const {
  return with_ops(field_, [&](auto ops) { return ops.is_zero(storage<decltype(ops)>(data_)[i * cols_ + j]); });
}

bool Matrix::is_zero() const {
  return with_ops(field_, [&](auto ops) {
    for (const auto& e : storage<decltype(ops)>(data_))
      if (!ops.is_zero(e)) return false;
    return true;
  });
}

bool Matrix::operator==(const Matrix& other) const {
  return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

Matrix Matrix::operator+(const Matrix& other) const {
  Matrix r = *this;
  r += other;
  return r;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix sum shape mismatch");
  with_ops(field_, [&](auto ops) {
    auto& a = storage<decltype(ops)>(data_);
    const auto& b = storage<decltype(ops)>(other.data_);
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!ops.is_zero(b[k])) a[k] = ops.add(a[k], b[k]);
  });
  return *this;
}

Matrix Matrix::operator-(const Matrix& other) const { return *this + (-other); }

Matrix Matrix::operator-() const {
  Matrix r = *this;
  with_ops(field_, [&](auto ops) {
    for (auto& e : storage<decltype(ops)>(r.data_)) e = ops.neg(e);
  });
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  with_ops(field_, [&](auto ops) {
    auto f = ops.from(s);
    for (auto& e : storage<decltype(ops)>(r.data_)) e = ops.mul(e, f);
  });
  return r;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_)
    throw InputError("matrix product shape mismatch: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                     " times " + std::to_string(other.rows_) + "x" + std::to_string(other.cols_));
  Matrix r(field_, rows_, other.cols_);
  with_ops(field_, [&](auto ops) {
    const auto& a = storage<decltype(ops)>(data_);
    const auto& b = storage<decltype(ops)>(other.data_);
    auto& c = storage<decltype(ops)>(r.data_);
    const std::size_t n = other.cols_;
    for (std::size_t i = 0; i < rows_; ++i) {
      auto* crow = &c[i * n];
      for (std::size_t k = 0; k < cols_; ++k) {
        const auto& f = a[i * cols_ + k];
        if (ops.is_zero(f)) continue;
        const auto* brow = &b[k * n];
        if constexpr (std::is_same_v<decltype(ops), FpOps>) {
          if (ops.p == 2) {
            for (std::size_t j = 0; j < n; ++j) crow[j] ^= brow[j];
            continue;
          }
        }
        for (std::size_t j = 0; j < n; ++j)
          if (!ops.is_zero(brow[j])) crow[j] = ops.add(crow[j], ops.mul(f, brow[j]));
      }
    }
  });
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  with_ops(field_, [&](auto ops) {
    const auto& a = storage<decltype(ops)>(data_);
    auto& t = storage<decltype(ops)>(r.data_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t[j * rows_ + i] = a[i * cols_ + j];
  });
  return r;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InputError("matrix block out of range");
  Matrix r(field_, nr, nc);
  with_ops(field_, [&](auto ops) {
    const auto& a = storage<decltype(ops)>(data_);
    auto& b = storage<decltype(ops)>(r.data_);
    for (std::size_t i = 0; i < nr; ++i)
      std::copy_n(a.begin() + static_cast<std::ptrdiff_t>((r0 + i) * cols_ + c0), nc,
                  b.begin() + static_cast<std::ptrdiff_t>(i * nc));
  });
  return r;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& blk) {
  if (r0 + blk.rows_ > rows_ || c0 + blk.cols_ > cols_) throw InputError("matrix block out of range");
  with_ops(field_, [&](auto ops) {
    auto& a = storage<decltype(ops)>(data_);
    const auto& b = storage<decltype(ops)>(blk.data_);
    for (std::size_t i = 0; i < blk.rows_; ++i)
      std::copy_n(b.begin() + static_cast<std::ptrdiff_t>(i * blk.cols_), blk.cols_,
                  a.begin() + static_cast<std::ptrdiff_t>((r0 + i) * cols_ + c0));
  });
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix r(field_, idx.size(), cols_);
  for (std::size_t t = 0; t < idx.size(); ++t) r.set_block(t, 0, row(idx[t]));
  return r;
}

Matrix Matrix::select_columns(std::span<const std::size_t> idx) const {
  Matrix r(field_, rows_, idx.size());
  with_ops(field_, [&](auto ops) {
    const auto& a = storage<decltype(ops)>(data_);
    auto& b = storage<decltype(ops)>(r.data_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t t = 0; t < idx.size(); ++t) b[i * idx.size() + t] = a[i * cols_ + idx[t]];
  });
  return r;
}

Matrix Matrix::hstack(std::span<const Matrix> parts) {
  if (parts.empty()) return Matrix();
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows_ != parts[0].rows_) throw InputError("hstack row mismatch");
    cols += p.cols_;
  }
  Matrix r(parts[0].field_, parts[0].rows_, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    r.set_block(0, c, p);
    c += p.cols_;
  }
  return r;
}

Matrix Matrix::vstack(std::span<const Matrix> parts) {
  if (parts.empty()) return Matrix();
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols_ != parts[0].cols_) throw InputError("vstack column mismatch");
    rows += p.rows_;
  }
  Matrix r(parts[0].field_, rows, parts[0].cols_);
  std::size_t at = 0;
  for (const auto& p : parts) {
    r.set_block(at, 0, p);
    at += p.rows_;
  }
  return r;
}

Matrix Matrix::direct_sum(std::span<const Matrix> parts) {
  if (parts.empty()) return Matrix();
  std::size_t rows = 0, cols = 0;
  for (const auto& p : parts) {
    rows += p.rows_;
    cols += p.cols_;
  }
  Matrix r(parts[0].field_, rows, cols);
  std::size_t ri = 0, ci = 0;
  for (const auto& p : parts) {
    r.set_block(ri, ci, p);
    ri += p.rows_;
    ci += p.cols_;
  }
  return r;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (a.is_zero_at(i, j)) continue;
      r.set_block(i * b.rows_, j * b.cols_, b.scaled(a.at(i, j)));
    }
  return r;
}

std::vector<std::string> Matrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(field_.format(at(i, j)));
  return out;
}

Matrix::Echelon Matrix::rref() const {
  Matrix r = *this;
  std::vector<std::size_t> pivots = with_ops(field_, [&](auto ops) {
    return eliminate(ops, storage<decltype(ops)>(r.data_), rows_, cols_, true, cols_);
  });
  return {std::move(r), std::move(pivots)};
}

std::size_t Matrix::rank() const {
  Matrix r = *this;
  return with_ops(field_, [&](auto ops) {
    return eliminate(ops, storage<decltype(ops)>(r.data_), rows_, cols_, false, cols_).size();
  });
}

Matrix::Kernel Matrix::kernel() const {
  auto [red, pivots] = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  Kernel k;
  for (std::size_t j = 0; j < cols_; ++j)
    if (!is_pivot[j]) k.free.push_back(j);
  k.basis = Matrix(field_, cols_, k.free.size());
  for (std::size_t t = 0; t < k.free.size(); ++t) {
    std::size_t f = k.free[t];
    k.basis.set(f, t, field_.one());
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (!red.is_zero_at(i, f)) k.basis.set(pivots[i], t, field_.neg(red.at(i, f)));
  }
  return k;
}

std::optional<Matrix> Matrix::solve(const Matrix& rhs) const {
  if (rhs.rows_ != rows_)
    throw InputError("solve shape mismatch: " + std::to_string(rows_) + " rows vs rhs " +
                     std::to_string(rhs.rows_));
  Matrix aug(field_, rows_, cols_ + rhs.cols_);
  aug.set_block(0, 0, *this);
  aug.set_block(0, cols_, rhs);
  std::vector<std::size_t> pivots = with_ops(field_, [&](auto ops) {
    return eliminate(ops, storage<decltype(ops)>(aug.data_), rows_, aug.cols_, true, aug.cols_);
  });
  Matrix x(field_, cols_, rhs.cols_);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= cols_) return std::nullopt;
    x.set_block(pivots[i], 0, aug.block(i, cols_, 1, rhs.cols_));
  }
  return x;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  auto x = solve(identity(field_, rows_));
  if (!x) return std::nullopt;
  if (rank() != rows_) return std::nullopt;
  return x;
}

std::vector<std::size_t> Matrix::independent_columns() const {
  Matrix r = *this;
  return with_ops(field_, [&](auto ops) {
    return eliminate(ops, storage<decltype(ops)>(r.data_), rows_, cols_, false, cols_);
  });
}

std::vector<std::size_t> Matrix::extending_columns(const Matrix& extra) const {
  Matrix aug = hstack(std::vector<Matrix>{*this, extra});
  std::vector<std::size_t> out;
  for (auto p : aug.independent_columns())
    if (p >= cols_) out.push_back(p - cols_);
  return out;
}

Matrix block_diagonal_product(const Matrix& block, std::size_t copies, const Matrix& x) {
  const std::size_t d = block.cols();
  if (x.rows() != copies * d || block.rows() != d) throw InputError("block diagonal product shape mismatch");
  Matrix r(x.field(), copies * d, x.cols());
  for (std::size_t c = 0; c < copies; ++c) {
    Matrix part = x.block(c * d, 0, d, x.cols());
    if (part.is_zero()) continue;
    r.set_block(c * d, 0, block * part);
  }
  return r;
}

}  // namespace artin
