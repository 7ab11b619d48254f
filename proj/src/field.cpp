#include "neuberg/field.hpp"

#include <algorithm>
#include <ostream>
#include <tuple>
#include <utility>

namespace neuberg {

namespace {

std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = v % sp;
  if (r < 0) r += sp;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

Num::Num(std::int64_t v, std::uint64_t p) : v_(p == 0 ? 0 : reduce(v, p)), p_(p) {}

void Num::check_same(Num rhs) const {
  if (p_ != rhs.p_ || p_ == 0) {
    throw Error(Errc::FieldMismatch, "operands from F_" + std::to_string(p_) + " and F_" +
                                         std::to_string(rhs.p_));
  }
}

std::int64_t Num::signed_value() const noexcept {
  const auto v = static_cast<std::int64_t>(v_);
  return v_ > p_ / 2 ? v - static_cast<std::int64_t>(p_) : v;
}

Num Num::operator+(Num rhs) const {
  check_same(rhs);
  Num r = *this;
  r.v_ = (v_ + rhs.v_) % p_;
  return r;
}

Num Num::operator-(Num rhs) const {
  check_same(rhs);
  Num r = *this;
  r.v_ = (v_ + p_ - rhs.v_) % p_;
  return r;
}

Num Num::operator*(Num rhs) const {
  check_same(rhs);
  Num r = *this;
  r.v_ = (v_ * rhs.v_) % p_;
  return r;
}

Num Num::operator/(Num rhs) const { return *this * rhs.inverse(); }

Num Num::operator-() const {
  Num r = *this;
  r.v_ = v_ == 0 ? 0 : p_ - v_;
  return r;
}

Num Num::pow(std::uint64_t e) const {
  Num result(1, p_);
  Num base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

Num Num::inverse() const {
  if (p_ == 0) throw Error(Errc::FieldMismatch, "inverse of placeholder value");
  if (v_ == 0) throw Error(Errc::ZeroInverse, "0 has no inverse in F_" + std::to_string(p_));
  // Extended Euclid on (v, p).
  std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = static_cast<std::int64_t>(v_);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  return Num(t0, p_);
}

std::ostream& operator<<(std::ostream& os, Num a) { return os << a.value(); }

std::string to_string(Num a) { return std::to_string(a.value()); }

Num inverse(Num a) { return a.inverse(); }

bool is_square(Num a) {
  if (a.is_zero()) return true;
  return a.pow((a.modulus() - 1) / 2) == Num(1, a.modulus());
}

std::vector<Num> sqrt(Num a) {
  const std::uint64_t p = a.modulus();
  if (a.is_zero()) return {a};
  if (!is_square(a)) return {};

  Num root;
  if (p % 4 == 3) {
    root = a.pow((p + 1) / 4);
  } else {
    // Tonelli–Shanks: p - 1 = q * 2^s with q odd.
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++s;
    }
    Num z(2, p);
    while (is_square(z)) z += Num(1, p);

    unsigned m = s;
    Num c = z.pow(q);
    Num t = a.pow(q);
    root = a.pow((q + 1) / 2);
    const Num one(1, p);
    while (!(t == one)) {
      unsigned i = 0;
      for (Num t2 = t; !(t2 == one); t2 *= t2) ++i;
      Num b = c;
      for (unsigned j = 0; j + 1 + i < m; ++j) b *= b;
      m = i;
      c = b * b;
      t *= c;
      root *= b;
    }
  }
  Num other = -root;
  if (other < root) std::swap(root, other);
  return {root, other};
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(std::uint64_t p) : p_(p) {
  if (p == 2 || p > kMaxModulus || !is_prime(p)) {
    throw Error(Errc::NotPrime, std::to_string(p) + " is not an odd prime");
  }
}

void check_enumeration_bound(std::uint64_t p, std::uint64_t max_enum) {
  if (p > max_enum) {
    throw Error(Errc::EnumerationBound, "p = " + std::to_string(p) +
                                            " exceeds the enumeration limit " +
                                            std::to_string(max_enum));
  }
}

std::vector<Num> Field::elements(std::uint64_t max_enum) const {
  check_enumeration_bound(p_, max_enum);
  std::vector<Num> out;
  out.reserve(p_);
  for (std::uint64_t v = 0; v < p_; ++v) out.emplace_back(static_cast<std::int64_t>(v), p_);
  return out;
}

std::vector<Num> Field::squares(std::uint64_t max_enum) const {
  check_enumeration_bound(p_, max_enum);
  std::vector<bool> seen(p_, false);
  for (std::uint64_t t = 1; t < p_; ++t) seen[(t * t) % p_] = true;
  std::vector<Num> out;
  for (std::uint64_t v = 1; v < p_; ++v) {
    if (seen[v]) out.emplace_back(static_cast<std::int64_t>(v), p_);
  }
  return out;
}

Num Field::nonsquare() const {
  for (std::uint64_t v = 2;; ++v) {
    Num n(static_cast<std::int64_t>(v), p_);
    if (!is_square(n)) return n;
  }
}

}  // namespace neuberg
