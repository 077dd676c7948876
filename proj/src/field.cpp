#include "quivermod/field.hpp"

#include <charconv>
#include <limits>

namespace quivermod {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (p >= (1u << 16)) throw std::invalid_argument("characteristic must be below 65536");
  return {Kind::PrimeField, static_cast<std::uint32_t>(p)};
}

std::string FieldSpec::name() const {
  return is_finite() ? "F" + std::to_string(characteristic) : "Q";
}

Fp Fp::reciprocal() const {
  if (!modulus_) {
    if (value_ == 1 || value_ == -1) return *this;
    throw std::domain_error("Fp: reciprocal of unbound literal");
  }
  if (value_ == 0) throw std::domain_error("division by zero");
  // extended Euclid on (value, p)
  std::int64_t a = value_, m = modulus_, x0 = 1, x1 = 0;
  while (m != 0) {
    const auto q = a / m;
    a -= q * m;
    std::swap(a, m);
    x0 -= q * x1;
    std::swap(x0, x1);
  }
  return Fp(x0, modulus_);
}

std::string to_string(const Fp& x, const FieldSpec& field) {
  if (field.is_finite()) return std::to_string(x.residue(field.characteristic));
  return std::to_string(x.value());
}

std::string to_string(const Rational& x, const FieldSpec&) { return x.str(); }

namespace {

std::int64_t parse_int(const std::string& text) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last)
    throw std::invalid_argument("not an integer: '" + text + "'");
  return v;
}

std::pair<std::string, std::string> split_fraction(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return {text, "1"};
  return {text.substr(0, slash), text.substr(slash + 1)};
}

}  // namespace

template <>
Fp parse_scalar<Fp>(const FieldSpec& field, const std::string& text) {
  auto [num, den] = split_fraction(text);
  const auto n = make_scalar<Fp>(field, parse_int(num));
  const auto d = make_scalar<Fp>(field, parse_int(den));
  if (d.is_zero()) throw std::invalid_argument("zero denominator in '" + text + "'");
  return n / d;
}

template <>
Rational parse_scalar<Rational>(const FieldSpec&, const std::string& text) {
  auto [num, den] = split_fraction(text);
  const auto d = parse_int(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(parse_int(num)) / Rational(d);
}

}  // namespace quivermod
