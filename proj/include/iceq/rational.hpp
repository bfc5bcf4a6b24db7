#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace iceq {

// Exact rational on checked 64-bit integers. Every narrowing from the
// 128-bit intermediate throws instead of wrapping; the library's
// computations are desk-scale and never get near the limit in practice.
class Rat {
 public:
  Rat() = default;
  Rat(long long n) : num_(n) {}
  Rat(long long n, long long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    num_ = n;
    den_ = d;
    normalize();
  }

  static Rat parse(const std::string& s);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  Rat operator-() const { return Rat(-num_, den_); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return from128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                   (__int128)a.den_ * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  Rat inverse() const { return Rat(1) / *this; }
  Rat abs() const { return num_ < 0 ? -*this : *this; }

  // "0", "7", "-3/2"
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

 private:
  long long num_ = 0;
  long long den_ = 1;

  static long long narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
    return (long long)v;
  }
  static Rat from128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    Rat r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a;
  }
  void normalize() {
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }
};

inline Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  size_t pos = 0;
  bool neg = false;
  if (s[pos] == '-' || s[pos] == '+') { neg = (s[pos] == '-'); ++pos; }
  auto read_int = [&](long long& out) {
    if (pos >= s.size() || !isdigit((unsigned char)s[pos]))
      throw std::invalid_argument("malformed rational '" + s + "'");
    out = 0;
    while (pos < s.size() && isdigit((unsigned char)s[pos])) {
      if (out > (INT64_MAX - 9) / 10) throw std::overflow_error("rational literal overflow");
      out = out * 10 + (s[pos] - '0');
      ++pos;
    }
  };
  long long n = 0, d = 1;
  read_int(n);
  if (pos < s.size()) {
    if (s[pos] != '/') throw std::invalid_argument("malformed rational '" + s + "'");
    ++pos;
    read_int(d);
    if (pos != s.size()) throw std::invalid_argument("malformed rational '" + s + "'");
    if (d == 0) throw std::invalid_argument("rational '" + s + "' has zero denominator");
  }
  return Rat(neg ? -n : n, d);
}

}  // namespace iceq
