#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace pmsched {

using int128 = __int128;
using uint128 = unsigned __int128;

[[noreturn]] inline void throw_overflow(const char* what) {
  throw std::overflow_error(what);
}

inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw_overflow("int128 addition overflow");
  return r;
}

inline int128 checked_sub(int128 a, int128 b) {
  int128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw_overflow("int128 subtraction overflow");
  return r;
}

inline int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw_overflow("int128 multiplication overflow");
  return r;
}

inline uint128 gcd128(uint128 a, uint128 b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

/// floor(sqrt(v)) for unsigned 128-bit values, pure integer arithmetic.
inline uint128 isqrt128(uint128 v) {
  if (v < 2) return v;
  uint128 r = 0;
  uint128 bit = uint128(1) << 126;
  while (bit > v) bit >>= 2;
  while (bit != 0) {
    if (v >= r + bit) {
      v -= r + bit;
      r = (r >> 1) + bit;
    } else {
      r >>= 1;
    }
    bit >>= 2;
  }
  return r;
}

std::string to_string(int128 v);

/// Exact fraction with 128-bit numerator/denominator, always normalized.
/// Overflow throws std::overflow_error; it is never silent.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t v) : num_(v) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

  static Rational from_int128(int128 num, int128 den) {
    Rational r;
    r.num_ = num;
    r.den_ = den;
    r.normalize();
    return r;
  }

  int128 num() const { return num_; }
  int128 den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  /// Value as int64; requires an integer value in range.
  std::int64_t as_int64() const {
    if (den_ != 1) throw std::logic_error("Rational::as_int64 on non-integer value " + str());
    if (num_ > int128(INT64_MAX) || num_ < int128(INT64_MIN))
      throw_overflow("Rational value does not fit in int64");
    return static_cast<std::int64_t>(num_);
  }

  Rational& operator+=(const Rational& o) {
    num_ = checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_));
    den_ = checked_mul(den_, o.den_);
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    num_ = checked_sub(checked_mul(num_, o.den_), checked_mul(o.num_, den_));
    den_ = checked_mul(den_, o.den_);
    normalize();
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    num_ = checked_mul(num_, o.num_);
    den_ = checked_mul(den_, o.den_);
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator-(const Rational& a) { return from_int128(-a.num_, a.den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string str() const {
    if (den_ == 1) return to_string(num_);
    return to_string(num_) + "/" + to_string(den_);
  }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("Rational with zero denominator");
    if (den_ < 0) {
      num_ = checked_sub(0, num_);
      den_ = checked_sub(0, den_);
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    uint128 a = num_ < 0 ? uint128(-(num_ + 1)) + 1 : uint128(num_);
    uint128 g = gcd128(a, uint128(den_));
    num_ /= int128(g);
    den_ /= int128(g);
  }

  int128 num_{0};
  int128 den_{1};
};

}  // namespace pmsched
