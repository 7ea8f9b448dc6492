// Exact rational arithmetic on 64-bit integers with 128-bit intermediates.
// All core computations in this library are exact; there is no floating
// point anywhere in the arithmetic kernels.

#ifndef LIECOMB_RATIONAL_HPP
#define LIECOMB_RATIONAL_HPP

#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace liecomb {

class OverflowError : public std::runtime_error {
public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw OverflowError("rational arithmetic overflow");
  return static_cast<std::int64_t>(v);
}
inline __int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace detail

// Always stored normalized: den > 0, gcd(num, den) == 1.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rat(std::int64_t n, std::int64_t d) { assign(n, d); }

  void assign(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num = detail::narrow(n);
    den = detail::narrow(d);
  }

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }
  std::int64_t as_integer() const {
    if (den != 1) throw std::domain_error("rational is not an integer");
    return num;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    Rat r;
    r.assign((__int128)a.num * b.den + (__int128)b.num * a.den,
             (__int128)a.den * b.den);
    return r;
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    Rat r;
    r.assign((__int128)a.num * b.den - (__int128)b.num * a.den,
             (__int128)a.den * b.den);
    return r;
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    Rat r;
    r.assign((__int128)a.num * b.num, (__int128)a.den * b.den);
    return r;
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::domain_error("rational division by zero");
    Rat r;
    r.assign((__int128)a.num * b.den, (__int128)a.den * b.num);
    return r;
  }
  Rat operator-() const {
    Rat r;
    r.num = -num;
    r.den = den;
    return r;
  }
  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }
  Rat& operator*=(const Rat& b) { return *this = *this * b; }
  Rat& operator/=(const Rat& b) { return *this = *this / b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  // "3", "-1/2"
  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
  // always "p/q", used by the records serialization
  std::string frac_str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }
};

// floor(a) as integer
inline std::int64_t rat_floor(const Rat& a) {
  std::int64_t q = a.num / a.den;
  if (a.num % a.den != 0 && a.num < 0) --q;
  return q;
}

}  // namespace liecomb

template <>
struct std::hash<liecomb::Rat> {
  std::size_t operator()(const liecomb::Rat& r) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(r.num);
    return h ^ (std::hash<std::int64_t>{}(r.den) + 0x9e3779b97f4a7c15ULL +
                (h << 6) + (h >> 2));
  }
};

#endif
