// Exact scalars: prime fields F_p (p < 2^16) and arbitrary-precision rationals.
#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

// Eigen dense expressions declare `const_iterator` as void for matrices, which
// Boost's byte-container probe cannot digest when Eigen asks whether a matrix
// converts to a multiprecision scalar.
namespace boost::multiprecision::detail {
template <class C>
  requires requires { typename C::StorageKind; typename C::Scalar; }
struct is_byte_container<C> : std::false_type {};
}  // namespace boost::multiprecision::detail

namespace quivermod {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::cpp_int;

bool is_prime(std::uint64_t n);

struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  /// Throws std::invalid_argument unless p is a prime below 2^16.
  static FieldSpec prime(std::uint64_t p);

  bool is_finite() const { return kind == Kind::PrimeField; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Element of F_p.
///
/// The modulus travels with the value. An element built from a plain integer
/// (`Fp(1)`, as Eigen does for `Scalar(0)` and `Scalar(1)`) is an unbound
/// integer literal; it adopts the modulus of the first bound operand it meets.
class Fp {
 public:
  Fp() = default;
  Fp(int literal) : value_(literal), modulus_(0) {}  // NOLINT: Eigen needs implicit conversion
  Fp(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
    if (modulus == 0) throw std::invalid_argument("Fp: modulus must be nonzero");
    value_ = reduce(value, modulus);
  }

  std::int64_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_bound() const { return modulus_ != 0; }

  /// Canonical representative in [0, p) under modulus p.
  std::uint32_t residue(std::uint32_t p) const {
    return static_cast<std::uint32_t>(modulus_ ? value_ : reduce(value_, p));
  }
  Fp bound_to(std::uint32_t p) const { return modulus_ ? *this : Fp(value_, p); }

  bool is_zero() const { return value_ == 0; }

  Fp reciprocal() const;

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    const auto p = common(a, b);
    if (!p) return literal(a.value_ + b.value_);
    return Fp(static_cast<std::int64_t>(a.residue(p)) + b.residue(p), p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    const auto p = common(a, b);
    if (!p) return literal(a.value_ - b.value_);
    return Fp(static_cast<std::int64_t>(a.residue(p)) - b.residue(p), p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    const auto p = common(a, b);
    if (!p) return literal(a.value_ * b.value_);
    return Fp(static_cast<std::int64_t>(a.residue(p)) * b.residue(p), p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.reciprocal(); }
  Fp operator-() const { return modulus_ ? Fp(-value_, modulus_) : literal(-value_); }
  Fp operator+() const { return *this; }

  friend bool operator==(const Fp& a, const Fp& b) {
    const auto p = common(a, b);
    if (!p) return a.value_ == b.value_;
    return a.residue(p) == b.residue(p);
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value_; }

 private:
  static std::int64_t reduce(std::int64_t v, std::uint32_t p) {
    const auto r = v % static_cast<std::int64_t>(p);
    return r < 0 ? r + p : r;
  }
  static std::uint32_t common(const Fp& a, const Fp& b) {
    if (a.modulus_ && b.modulus_ && a.modulus_ != b.modulus_)
      throw std::domain_error("Fp: mixing elements of different prime fields");
    return a.modulus_ ? a.modulus_ : b.modulus_;
  }
  static Fp literal(std::int64_t v) {
    Fp r;
    r.value_ = v;
    return r;
  }

  std::int64_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

// Scalar vocabulary shared by the generic algorithms.

template <class S>
S make_scalar(const FieldSpec& field, std::int64_t n);

template <>
inline Fp make_scalar<Fp>(const FieldSpec& field, std::int64_t n) {
  if (!field.is_finite()) throw std::invalid_argument("Fp scalar requires a prime field");
  return Fp(n, field.characteristic);
}

template <>
inline Rational make_scalar<Rational>(const FieldSpec&, std::int64_t n) {
  return Rational(n);
}

inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline Fp reciprocal(const Fp& x) { return x.reciprocal(); }
inline Rational reciprocal(const Rational& x) {
  if (x.is_zero()) throw std::domain_error("division by zero");
  return Rational(1) / x;
}

/// Normalized scalar: canonical residue for F_p (literals reduced), identity for Q.
inline Fp bind_scalar(const Fp& x, const FieldSpec& field) {
  return field.is_finite() ? x.bound_to(field.characteristic) : x;
}
inline Rational bind_scalar(const Rational& x, const FieldSpec&) { return x; }

std::string to_string(const Fp& x, const FieldSpec& field);
std::string to_string(const Rational& x, const FieldSpec& field = FieldSpec::rationals());

/// Parses an integer or "a/b" literal into the field.
template <class S>
S parse_scalar(const FieldSpec& field, const std::string& text);

template <>
Fp parse_scalar<Fp>(const FieldSpec& field, const std::string& text);
template <>
Rational parse_scalar<Rational>(const FieldSpec& field, const std::string& text);

}  // namespace quivermod

namespace Eigen {

template <>
struct NumTraits<quivermod::Fp> : GenericNumTraits<quivermod::Fp> {
  using Real = quivermod::Fp;
  using NonInteger = quivermod::Fp;
  using Literal = quivermod::Fp;
  using Nested = quivermod::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<quivermod::Rational> : GenericNumTraits<quivermod::Rational> {
  using Real = quivermod::Rational;
  using NonInteger = quivermod::Rational;
  using Literal = quivermod::Rational;
  using Nested = quivermod::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 32
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
