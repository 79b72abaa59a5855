#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "folia/error.hpp"

namespace folia {

using BigInt = mpz_class;

// Exact rational number, always kept in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(int v) : v_(v) {}                          // NOLINT(google-explicit-constructor)
  Rat(long v) : v_(v) {}                         // NOLINT(google-explicit-constructor)
  Rat(long long v) : v_(BigInt(std::to_string(v))) {}  // NOLINT(google-explicit-constructor)
  Rat(const BigInt& v) : v_(v) {}                // NOLINT(google-explicit-constructor)
  Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Parses "p", "-p", "p/q" (no whitespace).
  static Rat parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw Error(ErrorKind::InvalidArgument, "empty rational literal");
    auto valid = [](const std::string& part, bool allow_sign) {
      if (part.empty()) return false;
      std::size_t i = 0;
      if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
      if (i == part.size()) return false;
      for (; i < part.size(); ++i)
        if (part[i] < '0' || part[i] > '9') return false;
      return true;
    };
    auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num, true) || !valid(den, false))
      throw Error(ErrorKind::InvalidArgument, "malformed rational literal '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    return Rat(BigInt(num), BigInt(den));
  }

  const mpq_class& raw() const { return v_; }
  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string str() const { return v_.get_str(); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class v_{0};
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

inline Rat pow(const Rat& base, unsigned e) {
  Rat out(1);
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

// Exact square root of a nonnegative rational, if it is a rational square.
inline bool rational_sqrt(const Rat& r, Rat& root) {
  if (r.sign() < 0) return false;
  BigInt n = r.num(), d = r.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  BigInt sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  root = Rat(sn, sd);
  return true;
}

// Rational point of the affine plane (z, w).
struct Point {
  Rat z;
  Rat w;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) {
    if (auto c = a.z <=> b.z; c != 0) return c;
    return a.w <=> b.w;
  }
  bool is_origin() const { return z.is_zero() && w.is_zero(); }
  std::string str() const { return "(" + z.str() + ", " + w.str() + ")"; }
};

inline const Point kOrigin{Rat(0), Rat(0)};

}  // namespace folia
