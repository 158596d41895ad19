#include "artin/field.hpp"

#include <cctype>

namespace artin {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw InputError("malformed field element '" + std::string(whole) + "'");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InputError("malformed field element '" + std::string(whole) + "'");
  mpz_class v(std::string(s), 10);
  return negative ? mpz_class(-v) : v;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw InputError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  return Field(static_cast<std::uint32_t>(p));
}

std::string Field::name() const {
  return is_rationals() ? std::string("Q") : "F_" + std::to_string(p_);
}

Scalar Field::zero() const { return is_rationals() ? Scalar(mpq_class(0)) : Scalar(0u); }
Scalar Field::one() const { return is_rationals() ? Scalar(mpq_class(1)) : Scalar(1u); }

Scalar Field::from_int(std::int64_t v) const {
  if (is_rationals()) return Scalar(mpq_class(mpz_class(std::to_string(v), 10)));
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Scalar(static_cast<std::uint32_t>(r));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_rationals()) return Scalar(mpq_class(a.rational() + b.rational()));
  std::uint64_t s = std::uint64_t{a.residue()} + b.residue();
  return Scalar(static_cast<std::uint32_t>(s % p_));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_rationals()) return Scalar(mpq_class(a.rational() - b.rational()));
  std::uint64_t s = std::uint64_t{a.residue()} + p_ - b.residue();
  return Scalar(static_cast<std::uint32_t>(s % p_));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_rationals()) return Scalar(mpq_class(a.rational() * b.rational()));
  return Scalar(static_cast<std::uint32_t>(std::uint64_t{a.residue()} * b.residue() % p_));
}

Scalar Field::neg(const Scalar& a) const {
  if (is_rationals()) return Scalar(mpq_class(-a.rational()));
  return Scalar(a.residue() == 0 ? 0u : p_ - a.residue());
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw Error("division by zero in " + name());
  if (is_rationals()) return Scalar(mpq_class(1 / a.rational()));
  return Scalar(pow_mod(a.residue(), p_ - 2, p_));
}

bool Field::is_zero(const Scalar& a) const {
  return is_rationals() ? sgn(a.rational()) == 0 : a.residue() == 0;
}

Scalar Field::parse(std::string_view text) const {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  mpz_class num = parse_integer(s.substr(0, slash), text);
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  }
  if (is_rationals()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
  }
  mpz_class pz(p_);
  mpz_class n = num % pz;
  if (n < 0) n += pz;
  mpz_class d = den % pz;
  if (d < 0) d += pz;
  if (d == 0) throw InputError("denominator of '" + std::string(text) + "' vanishes in " + name());
  Scalar ns(static_cast<std::uint32_t>(n.get_ui()));
  Scalar ds(static_cast<std::uint32_t>(d.get_ui()));
  return mul(ns, inv(ds));
}

std::string Field::format(const Scalar& a) const {
  if (is_rationals()) return a.rational().get_str(10);
  return std::to_string(a.residue());
}

}  // namespace artin
