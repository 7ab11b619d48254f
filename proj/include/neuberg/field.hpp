#pragma once

/// Exact arithmetic in the prime field F_p for odd primes p.
///
/// A `Num` carries its modulus so that expressions read like ordinary
/// arithmetic (`a * b + c`). Mixing elements of different fields throws
/// `Errc::FieldMismatch`. `Field` is the validated factory: constructing one
/// checks that p is an odd prime.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "neuberg/error.hpp"

namespace neuberg {

/// Default cap on the field size for operations that enumerate F_p or F_p^2.
inline constexpr std::uint64_t kDefaultMaxEnum = 100000;

/// Largest supported modulus; keeps every product of two residues in 64 bits.
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

class Num {
 public:
  /// Placeholder value (modulus 0). Only assignable; arithmetic on it throws.
  constexpr Num() = default;

  /// Reduces `v` into [0, p-1]. `p` is assumed already validated.
  Num(std::int64_t v, std::uint64_t p);

  std::uint64_t value() const noexcept { return v_; }
  std::uint64_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return v_ == 0; }

  /// Signed representative in (-p/2, p/2], used only for human-readable text.
  std::int64_t signed_value() const noexcept;

  Num operator+(Num rhs) const;
  Num operator-(Num rhs) const;
  Num operator*(Num rhs) const;
  Num operator/(Num rhs) const;
  Num operator-() const;
  Num& operator+=(Num rhs) { return *this = *this + rhs; }
  Num& operator-=(Num rhs) { return *this = *this - rhs; }
  Num& operator*=(Num rhs) { return *this = *this * rhs; }
  Num& operator/=(Num rhs) { return *this = *this / rhs; }

  Num operator+(std::int64_t rhs) const { return *this + Num(rhs, p_); }
  Num operator-(std::int64_t rhs) const { return *this - Num(rhs, p_); }
  Num operator*(std::int64_t rhs) const { return *this * Num(rhs, p_); }

  Num pow(std::uint64_t e) const;
  Num inverse() const;

  bool operator==(const Num& rhs) const noexcept { return v_ == rhs.v_ && p_ == rhs.p_; }
  bool operator==(std::int64_t rhs) const { return *this == Num(rhs, p_); }
  std::strong_ordering operator<=>(const Num& rhs) const noexcept {
    if (auto c = p_ <=> rhs.p_; c != 0) return c;
    return v_ <=> rhs.v_;
  }

 private:
  void check_same(Num rhs) const;

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

inline Num operator*(std::int64_t lhs, Num rhs) { return rhs * lhs; }
inline Num operator+(std::int64_t lhs, Num rhs) { return rhs + lhs; }
inline Num operator-(std::int64_t lhs, Num rhs) { return Num(lhs, rhs.modulus()) - rhs; }

std::ostream& operator<<(std::ostream& os, Num a);
std::string to_string(Num a);

/// Inverse of a nonzero element. Throws `Errc::ZeroInverse` for 0.
Num inverse(Num a);

/// Euler's criterion; 0 counts as a square.
bool is_square(Num a);

/// Square roots of `a` sorted ascending: two roots {t, -t}, the single root
/// {0} when a = 0, or empty when `a` is a nonsquare. Tonelli–Shanks.
std::vector<Num> sqrt(Num a);

/// Deterministic trial-division primality test.
bool is_prime(std::uint64_t n);

class Field {
 public:
  /// Throws `Errc::NotPrime` unless p is an odd prime not exceeding kMaxModulus.
  explicit Field(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }

  Num operator()(std::int64_t v) const { return Num(v, p_); }
  Num zero() const { return Num(0, p_); }
  Num one() const { return Num(1, p_); }

  /// All residues 0..p-1 in increasing order. Bounded by `max_enum`.
  std::vector<Num> elements(std::uint64_t max_enum = kDefaultMaxEnum) const;

  /// The set {t^2 : t != 0}, sorted ascending. Bounded by `max_enum`.
  std::vector<Num> squares(std::uint64_t max_enum = kDefaultMaxEnum) const;

  /// Smallest nonsquare residue.
  Num nonsquare() const;

  bool operator==(const Field&) const = default;

 private:
  std::uint64_t p_;
};

/// Throws `Errc::EnumerationBound` when p exceeds `max_enum`.
void check_enumeration_bound(std::uint64_t p, std::uint64_t max_enum);

}  // namespace neuberg
