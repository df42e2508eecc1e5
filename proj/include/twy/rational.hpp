#pragma once

// Exact rational numbers. Values that fit in 64 bits stay on a fast path;
// anything larger is carried by boost::multiprecision::cpp_rational.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace twy {

class Rational {
 public:
  using Big = boost::multiprecision::cpp_rational;
  using BigInt = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(std::int64_t v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : num_(v) {}           // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) { assign(static_cast<i128>(n), static_cast<i128>(d)); }

  static Rational from_big(const Big& b) {
    Rational r;
    r.assign_big(b);
    return r;
  }

  /// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view s) {
    auto trim = [](std::string_view v) {
      while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
      while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
      return v;
    };
    s = trim(s);
    auto valid_int = [](std::string_view v) {
      if (v.empty()) return false;
      std::size_t i = (v[0] == '-' || v[0] == '+') ? 1 : 0;
      if (i == v.size()) return false;
      for (; i < v.size(); ++i)
        if (v[i] < '0' || v[i] > '9') return false;
      return true;
    };
    auto slash = s.find('/');
    std::string_view ns = trim(s.substr(0, slash));
    std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
    if (!valid_int(ns) || !valid_int(ds)) throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
    std::string nstr(ns), dstr(ds);
    if (nstr[0] == '+') nstr.erase(0, 1);
    if (dstr[0] == '+') dstr.erase(0, 1);
    // a leading 0 would be read as octal
    auto strip = [](std::string& v) {
      const std::size_t sign = v[0] == '-' ? 1 : 0;
      const std::size_t first = v.find_first_not_of('0', sign);
      v.erase(sign, (first == std::string::npos ? v.size() - 1 : first) - sign);
    };
    strip(nstr);
    strip(dstr);
    BigInt n(nstr), d(dstr);
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return from_big(Big(n, d));
  }

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? boost::multiprecision::denominator(*big_) == 1 : den_ == 1; }
  int sign() const {
    if (big_) return big_->sign();
    return (num_ > 0) - (num_ < 0);
  }
  bool is_small() const { return !big_; }
  std::int64_t small_num() const { return num_; }
  std::int64_t small_den() const { return den_; }

  Big to_big() const { return big_ ? *big_ : Big(BigInt(num_), BigInt(den_)); }

  std::string numerator_str() const {
    return big_ ? boost::multiprecision::numerator(*big_).str() : std::to_string(num_);
  }
  std::string denominator_str() const {
    return big_ ? boost::multiprecision::denominator(*big_).str() : std::to_string(den_);
  }
  /// Always "p/q"; used for bit-exact serialization.
  std::string to_fraction_string() const { return numerator_str() + "/" + denominator_str(); }
  /// "p" when integral, "p/q" otherwise.
  std::string to_string() const { return is_integer() ? numerator_str() : to_fraction_string(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      Rational r;
      if (a.den_ == b.den_)
        r.assign(static_cast<i128>(a.num_) + b.num_, a.den_);
      else
        r.assign(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                 static_cast<i128>(a.den_) * b.den_);
      return r;
    }
    return from_big(a.to_big() + b.to_big());
  }
  friend Rational operator-(const Rational& a) {
    if (!a.big_ && a.num_ != INT64_MIN) {
      Rational r;
      r.num_ = -a.num_;
      r.den_ = a.den_;
      return r;
    }
    return from_big(-a.to_big());
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t out;
        if (!__builtin_mul_overflow(a.num_, b.num_, &out)) return Rational(out);
      }
      Rational r;
      r.assign(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
      return r;
    }
    return from_big(a.to_big() * b.to_big());
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational");
    if (!a.big_ && !b.big_) {
      Rational r;
      r.assign(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
      return r;
    }
    return from_big(a.to_big() / b.to_big());
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational inverse() const { return Rational(1) / *this; }
  Rational pow(unsigned e) const {
    Rational r(1), b = *this;
    while (e) {
      if (e & 1u) r *= b;
      b *= b;
      e >>= 1u;
    }
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a big value never fits the small path
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      i128 l = static_cast<i128>(a.num_) * b.den_, r = static_cast<i128>(b.num_) * a.den_;
      return l <=> r;
    }
    Big x = a.to_big(), y = b.to_big();
    if (x < y) return std::strong_ordering::less;
    if (x > y) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    if (big_) return std::hash<std::string>{}(to_fraction_string());
    std::size_t h = std::hash<std::int64_t>{}(num_);
    return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  __extension__ typedef __int128 i128;
  __extension__ typedef unsigned __int128 u128;

  static u128 gcd128(u128 a, u128 b) {
    while (b) {
      u128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  static bool fits64(i128 v) { return v >= INT64_MIN + 1 && v <= INT64_MAX; }
  static BigInt to_bigint(i128 v) {
    bool neg = v < 0;
    u128 m = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    BigInt r = BigInt(static_cast<std::uint64_t>(m >> 64));
    r <<= 64;
    r += BigInt(static_cast<std::uint64_t>(m));
    return neg ? BigInt(-r) : r;
  }

  void assign(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      big_.reset();
      return;
    }
    u128 g = gcd128(n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n), static_cast<u128>(d));
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
    if (fits64(n) && fits64(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      big_.reset();
    } else {
      big_ = std::make_shared<const Big>(Big(to_bigint(n), to_bigint(d)));
      num_ = 0;
      den_ = 1;
    }
  }

  void assign_big(const Big& b) {
    const BigInt& n = boost::multiprecision::numerator(b);
    const BigInt& d = boost::multiprecision::denominator(b);
    static const BigInt lo(INT64_MIN + 1), hi(INT64_MAX);
    if (n >= lo && n <= hi && d <= hi) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      big_.reset();
    } else {
      big_ = std::make_shared<const Big>(b);
      num_ = 0;
      den_ = 1;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const Big> big_;
};

}  // namespace twy

template <>
struct std::hash<twy::Rational> {
  std::size_t operator()(const twy::Rational& r) const noexcept { return r.hash(); }
};
