#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "folia/upoly.hpp"

namespace folia {

// Exponent pair of z^i w^j.
struct Mono {
  unsigned i = 0;
  unsigned j = 0;
  unsigned degree() const { return i + j; }
  friend bool operator==(const Mono&, const Mono&) = default;
};

// Graded lexicographic order with z > w; ascending.
struct GrlexLess {
  bool operator()(const Mono& a, const Mono& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.i < b.i;
  }
};

// Sparse polynomial in z, w over the rationals. No zero coefficients are stored.
class BiPoly {
 public:
  using Terms = std::map<Mono, Rat, GrlexLess>;

  BiPoly() = default;
  BiPoly(const Rat& c) { add_term({0, 0}, c); }  // NOLINT(google-explicit-constructor)
  BiPoly(int c) : BiPoly(Rat(c)) {}               // NOLINT(google-explicit-constructor)

  static BiPoly z() { return term(Rat(1), 1, 0); }
  static BiPoly w() { return term(Rat(1), 0, 1); }
  static BiPoly term(const Rat& c, unsigned i, unsigned j) {
    BiPoly p;
    p.add_term({i, j}, c);
    return p;
  }
  // Embeds u(z) (or u(w) when in_w).
  static BiPoly from_upoly(const UPoly& u, bool in_w = false) {
    BiPoly p;
    for (std::size_t k = 0; k < u.coeffs().size(); ++k)
      p.add_term(in_w ? Mono{0, static_cast<unsigned>(k)} : Mono{static_cast<unsigned>(k), 0},
                 u.coeffs()[k]);
    return p;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.degree() == 0); }
  std::size_t size() const { return t_.size(); }

  Rat coeff(unsigned i, unsigned j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? Rat(0) : it->second;
  }

  void add_term(const Mono& m, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  // Total degree; -1 for zero.
  int degree() const { return t_.empty() ? -1 : static_cast<int>(t_.rbegin()->first.degree()); }
  // Vanishing order at the origin; -1 for zero.
  int order() const { return t_.empty() ? -1 : static_cast<int>(t_.begin()->first.degree()); }
  int degree_z() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(m.i));
    return d;
  }
  int degree_w() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(m.j));
    return d;
  }

  BiPoly homogeneous_part(unsigned d) const {
    BiPoly p;
    for (const auto& [m, c] : t_)
      if (m.degree() == d) p.t_.emplace(m, c);
    return p;
  }
  // Terms of total degree <= d.
  BiPoly truncated(unsigned d) const {
    BiPoly p;
    for (const auto& [m, c] : t_)
      if (m.degree() <= d) p.t_.emplace(m, c);
    return p;
  }

  Rat eval(const Point& p) const { return eval(p.z, p.w); }
  Rat eval(const Rat& zv, const Rat& wv) const {
    Rat acc(0);
    for (const auto& [m, c] : t_) acc += c * folia::pow(zv, m.i) * folia::pow(wv, m.j);
    return acc;
  }

  // f(z, w0) as a polynomial in z.
  UPoly at_w(const Rat& w0) const {
    std::vector<Rat> c(std::max(0, degree_z() + 1), Rat(0));
    for (const auto& [m, v] : t_) c[m.i] += v * folia::pow(w0, m.j);
    return UPoly(std::move(c));
  }
  // f(z0, w) as a polynomial in w.
  UPoly at_z(const Rat& z0) const {
    std::vector<Rat> c(std::max(0, degree_w() + 1), Rat(0));
    for (const auto& [m, v] : t_) c[m.j] += v * folia::pow(z0, m.i);
    return UPoly(std::move(c));
  }
  // Coefficients of w^k as polynomials in z (index k).
  std::vector<UPoly> coeffs_in_w() const {
    std::vector<std::vector<Rat>> raw(std::max(0, degree_w() + 1));
    for (const auto& [m, v] : t_) {
      auto& row = raw[m.j];
      if (row.size() <= m.i) row.resize(m.i + 1, Rat(0));
      row[m.i] += v;
    }
    std::vector<UPoly> out;
    out.reserve(raw.size());
    for (auto& r : raw) out.emplace_back(std::move(r));
    return out;
  }
  static BiPoly from_coeffs_in_w(const std::vector<UPoly>& cs) {
    BiPoly p;
    for (std::size_t k = 0; k < cs.size(); ++k)
      for (std::size_t i = 0; i < cs[k].coeffs().size(); ++i)
        p.add_term({static_cast<unsigned>(i), static_cast<unsigned>(k)}, cs[k].coeffs()[i]);
    return p;
  }

  BiPoly dz() const {
    BiPoly p;
    for (const auto& [m, c] : t_)
      if (m.i > 0) p.add_term({m.i - 1, m.j}, c * Rat(static_cast<long>(m.i)));
    return p;
  }
  BiPoly dw() const {
    BiPoly p;
    for (const auto& [m, c] : t_)
      if (m.j > 0) p.add_term({m.i, m.j - 1}, c * Rat(static_cast<long>(m.j)));
    return p;
  }

  // f(zs, ws) for polynomial substitutions.
  BiPoly substitute(const BiPoly& zs, const BiPoly& ws) const {
    std::vector<BiPoly> zp{BiPoly(1)}, wp{BiPoly(1)};
    BiPoly out;
    for (const auto& [m, c] : t_) {
      while (zp.size() <= m.i) zp.push_back(zp.back() * zs);
      while (wp.size() <= m.j) wp.push_back(wp.back() * ws);
      out += (zp[m.i] * wp[m.j]) * c;
    }
    return out;
  }
  // f(z + p.z, w + p.w): moves p to the origin.
  BiPoly translate(const Point& p) const {
    if (p.is_origin()) return *this;
    return substitute(z() + BiPoly(p.z), w() + BiPoly(p.w));
  }
  BiPoly swap_vars() const {
    BiPoly p;
    for (const auto& [m, c] : t_) p.t_.emplace(Mono{m.j, m.i}, c);
    return p;
  }

  // Exact division by a monomial z^a w^b; returns false if not divisible.
  bool divide_monomial(unsigned a, unsigned b, BiPoly& out) const {
    BiPoly p;
    for (const auto& [m, c] : t_) {
      if (m.i < a || m.j < b) return false;
      p.t_.emplace(Mono{m.i - a, m.j - b}, c);
    }
    out = std::move(p);
    return true;
  }

  // Division algorithm by a single divisor in grlex order; remainder is zero iff d | *this.
  std::pair<BiPoly, BiPoly> divmod(const BiPoly& d) const {
    if (d.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
    BiPoly q, r, p = *this;
    const auto& [lm, lc] = *d.t_.rbegin();
    while (!p.is_zero()) {
      const auto [pm, pc] = *p.t_.rbegin();
      if (pm.i >= lm.i && pm.j >= lm.j) {
        BiPoly t = term(pc / lc, pm.i - lm.i, pm.j - lm.j);
        q += t;
        p -= t * d;
      } else {
        r.add_term(pm, pc);
        p.t_.erase(pm);
      }
    }
    return {q, r};
  }
  bool divides(const BiPoly& f) const { return f.divmod(*this).second.is_zero(); }

  BiPoly operator-() const {
    BiPoly p = *this;
    for (auto& [m, c] : p.t_) c = -c;
    return p;
  }
  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly p;
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) p.add_term({ma.i + mb.i, ma.j + mb.j}, ca * cb);
    return p;
  }
  friend BiPoly operator*(BiPoly a, const Rat& s) {
    if (s.is_zero()) return {};
    for (auto& [m, c] : a.t_) c *= s;
    return a;
  }
  friend BiPoly operator*(const Rat& s, BiPoly a) { return std::move(a) * s; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

  BiPoly pow(unsigned e) const {
    BiPoly out(1);
    for (unsigned k = 0; k < e; ++k) out = out * *this;
    return out;
  }

  // Leading coefficient in grlex order (largest monomial).
  Rat leading_coeff() const { return t_.empty() ? Rat(0) : t_.rbegin()->second; }
  BiPoly monic() const { return t_.empty() ? *this : *this * (Rat(1) / leading_coeff()); }

  // Human-readable form in descending grlex order, e.g. "z^2 - 3/2*z*w + 1".
  std::string str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [m, c] = *it;
      Rat mag = abs(c);
      if (out.empty()) {
        if (c.sign() < 0) out += "-";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      std::string mono;
      auto var = [&](char v, unsigned e) {
        if (e == 0) return;
        if (!mono.empty()) mono += "*";
        mono += v;
        if (e > 1) mono += "^" + std::to_string(e);
      };
      var('z', m.i);
      var('w', m.j);
      if (mono.empty()) {
        out += mag.str();
      } else if (mag == Rat(1)) {
        out += mono;
      } else {
        out += mag.str() + "*" + mono;
      }
    }
    return out;
  }

 private:
  Terms t_;
};

namespace detail {

using WPoly = std::vector<UPoly>;  // coefficients in w over Q[z]

inline void trim(WPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline UPoly content(const WPoly& p) {
  UPoly g;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

inline WPoly div_content(const WPoly& p, const UPoly& c) {
  WPoly out;
  for (const auto& v : p) out.push_back(v / c);
  return out;
}

inline WPoly pseudo_rem(WPoly a, const WPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const UPoly& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    int da = static_cast<int>(a.size()) - 1;
    UPoly la = a.back();
    for (auto& c : a) c = c * lb;
    for (int k = 0; k <= db; ++k) a[da - db + k] = a[da - db + k] - la * b[k];
    trim(a);
  }
  return a;
}

}  // namespace detail

// Greatest common divisor in Q[z, w], normalized monic in grlex order.
inline BiPoly gcd(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  detail::WPoly a = f.coeffs_in_w(), b = g.coeffs_in_w();
  UPoly ca = detail::content(a), cb = detail::content(b);
  UPoly cont = gcd(ca, cb);
  a = detail::div_content(a, ca);
  b = detail::div_content(b, cb);
  if (a.size() < b.size()) std::swap(a, b);
  while (b.size() > 1) {
    detail::WPoly r = detail::pseudo_rem(a, b);
    a = std::move(b);
    if (r.empty()) {
      b.clear();
      break;
    }
    b = detail::div_content(r, detail::content(r));
  }
  detail::WPoly prim;
  if (b.empty()) {
    prim = a;  // b divided a exactly
  } else {
    prim = {UPoly(Rat(1))};  // b has w-degree 0 and nonzero: primitive part is a unit
  }
  BiPoly out = BiPoly::from_coeffs_in_w(prim) * BiPoly::from_upoly(cont);
  return out.monic();
}

// Exact quotient; throws if d does not divide f.
inline BiPoly exact_div(const BiPoly& f, const BiPoly& d) {
  auto [q, r] = f.divmod(d);
  if (!r.is_zero()) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
  return q;
}

// Resultant with respect to w, as a polynomial in z (Sylvester determinant via Bareiss).
inline UPoly resultant_w(const BiPoly& f, const BiPoly& g) {
  auto a = f.coeffs_in_w(), b = g.coeffs_in_w();
  int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
  if (m < 0 || n < 0) return UPoly();
  if (m == 0 && n == 0) return UPoly(Rat(1));
  if (m == 0) {
    UPoly r(Rat(1));
    for (int k = 0; k < n; ++k) r = r * a[0];
    return r;
  }
  if (n == 0) {
    UPoly r(Rat(1));
    for (int k = 0; k < m; ++k) r = r * b[0];
    return r;
  }
  int size = m + n;
  std::vector<std::vector<UPoly>> mat(size, std::vector<UPoly>(size));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) mat[r][r + k] = a[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) mat[n + r][r + k] = b[n - k];
  UPoly prev(Rat(1));
  int sign = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (mat[k][k].is_zero()) {
      int piv = -1;
      for (int r = k + 1; r < size; ++r)
        if (!mat[r][k].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) return UPoly();
      std::swap(mat[k], mat[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) / prev;
      }
      mat[i][k] = UPoly();
    }
    prev = mat[k][k];
  }
  UPoly det = mat[size - 1][size - 1];
  return sign < 0 ? -det : det;
}

}  // namespace folia
