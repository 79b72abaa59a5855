#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "folia/rat.hpp"

namespace folia {

// Dense univariate polynomial over the rationals; coefficient i multiplies x^i.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(const Rat& constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) c_.push_back(constant);
  }

  static UPoly monomial(const Rat& coeff, unsigned degree) {
    std::vector<Rat> c(degree + 1, Rat(0));
    c[degree] = coeff;
    return UPoly(std::move(c));
  }
  static UPoly x() { return monomial(Rat(1), 1); }

  bool is_zero() const { return c_.empty(); }
  // Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(unsigned i) const { return i < c_.size() ? c_[i] : Rat(0); }
  Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

  // Multiplicity of the root x = 0; -1 for the zero polynomial.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<int>(i);
    return -1;
  }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UPoly derivative() const {
    std::vector<Rat> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
    return UPoly(std::move(d));
  }

  // p(x + a)
  UPoly shift(const Rat& a) const {
    UPoly out;
    UPoly lin(std::vector<Rat>{a, Rat(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * lin + UPoly(*it);
    return out;
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    return *this * UPoly(Rat(1) / lead());
  }

  UPoly operator-() const {
    UPoly out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
  }
  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(c));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  // Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
    std::vector<Rat> r = c_;
    std::vector<Rat> q;
    int dd = d.degree();
    if (degree() >= dd) q.assign(degree() - dd + 1, Rat(0));
    Rat inv = Rat(1) / d.lead();
    for (int i = degree(); i >= dd; --i) {
      Rat f = r[i] * inv;
      if (f.is_zero()) continue;
      q[i - dd] = f;
      for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * d.c_[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return a.divmod(b).first; }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return a.divmod(b).second; }

  std::string str(char var = 'x') const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// Monic gcd; gcd(0, 0) = 0.
inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return (p / gcd(p, p.derivative())).monic();
}

inline std::string UPoly::str(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[i];
    if (c.is_zero()) continue;
    Rat mag = abs(c);
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    bool unit = mag == Rat(1);
    if (i == 0 || !unit) out += mag.str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

namespace detail {

inline std::vector<BigInt> divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<std::pair<BigInt, unsigned>> factors;
  for (BigInt p = 2; p * p <= n; ++p) {
    if (p > 10000000)
      throw Error(ErrorKind::InvalidArgument, "coefficient too large for rational root search");
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<BigInt> out{1};
  for (auto& [p, e] : factors) {
    std::size_t base = out.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Distinct rational roots (ascending) of a nonzero polynomial.
inline std::vector<Rat> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "rational roots of the zero polynomial");
  std::vector<Rat> roots;
  UPoly q = squarefree_part(p);
  if (q.valuation() > 0) {
    roots.emplace_back(0);
    q = q / UPoly::x();
  }
  if (q.degree() <= 0) return roots;
  // integer primitive form
  BigInt l = 1;
  for (const auto& c : q.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  BigInt a0 = (q.coeff(0) * Rat(l)).num();
  BigInt an = (q.lead() * Rat(l)).num();
  auto ps = detail::divisors(a0);
  auto qs = detail::divisors(an);
  for (const auto& pn : ps) {
    for (const auto& qd : qs) {
      for (int s : {1, -1}) {
        Rat cand(BigInt(pn * s), qd);
        if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
        if (q.eval(cand).is_zero()) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// p with every rational root divided out (all multiplicities).
inline UPoly strip_rational_roots(UPoly p) {
  for (const auto& r : rational_roots(p)) {
    UPoly lin(std::vector<Rat>{-r, Rat(1)});
    while (true) {
      auto [q, rem] = p.divmod(lin);
      if (!rem.is_zero()) break;
      p = q;
    }
  }
  return p;
}

}  // namespace folia
