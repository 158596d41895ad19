#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace artin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input (bad field element string, bad polynomial, shape mismatch).
class InputError : public Error {
 public:
  explicit InputError(const std::string& what, std::string pointer = {})
      : Error(what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

/// An element of F_p (stored as its canonical residue) or of Q.
class Scalar {
 public:
  Scalar() : value_(std::uint32_t{0}) {}
  explicit Scalar(std::uint32_t residue) : value_(residue) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  bool operator==(const Scalar& other) const { return value_ == other.value_; }

 private:
  std::variant<std::uint32_t, mpq_class> value_;
};

/// Exact coefficient field: a prime field F_p (p < 2^31) or the rationals.
class Field {
 public:
  /// Throws InputError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  static Field rationals() { return Field(0); }

  bool is_rationals() const { return p_ == 0; }
  /// 0 for Q.
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Throws Error on zero.
  Scalar inv(const Scalar& a) const;
  bool is_zero(const Scalar& a) const;

  /// Decimal strings: "3", "-1", "-1/2". Fractions are reduced mod p over F_p.
  Scalar parse(std::string_view text) const;
  std::string format(const Scalar& a) const;

  bool operator==(const Field& other) const { return p_ == other.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

}  // namespace artin
