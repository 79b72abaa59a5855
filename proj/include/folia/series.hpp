#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "folia/bipoly.hpp"

namespace folia {

// Default hard cap on truncation orders used by adaptive re-expansion.
inline constexpr unsigned kDefaultTruncationCap = 128;

// Power series in one variable known modulo t^(order+1).
//
// When `exact` is set the series is a polynomial and every coefficient beyond
// the stored ones is zero; otherwise reading past `order` is an error.
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(std::vector<Rat> coeffs, unsigned order, bool exact = false)
      : c_(std::move(coeffs)), order_(order), exact_(exact) {
    if (exact_) {
      while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
      order_ = std::max<unsigned>(order_, c_.empty() ? 0u : static_cast<unsigned>(c_.size() - 1));
    } else {
      c_.resize(order_ + 1, Rat(0));
    }
  }

  static TruncSeries polynomial(const UPoly& p, unsigned order) {
    return TruncSeries(p.coeffs(), order, true);
  }
  static TruncSeries constant(const Rat& c, unsigned order) {
    return TruncSeries(std::vector<Rat>{c}, order, true);
  }

  unsigned order() const { return order_; }
  bool exact() const { return exact_; }

  Rat operator[](unsigned k) const {
    if (k < c_.size()) return c_[k];
    if (exact_) return Rat(0);
    throw Error(ErrorKind::InsufficientTruncation,
                "coefficient " + std::to_string(k) + " beyond order " + std::to_string(order_));
  }

  // Index of first nonzero coefficient within the known range; -1 if none is certified.
  int valuation() const {
    for (std::size_t k = 0; k < c_.size() && k <= order_; ++k)
      if (!c_[k].is_zero()) return static_cast<int>(k);
    return -1;
  }
  // True if the series is certified identically zero (exact and empty).
  bool is_exact_zero() const { return exact_ && c_.empty(); }

  // Restricts to a lower order.
  TruncSeries truncate(unsigned order) const {
    std::vector<Rat> c;
    for (unsigned k = 0; k <= order && k < c_.size(); ++k) c.push_back(c_[k]);
    bool ex = exact_ && order >= (c_.empty() ? 0u : c_.size() - 1);
    return TruncSeries(std::move(c), order, ex);
  }

  UPoly to_upoly() const { return UPoly(std::vector<Rat>(c_.begin(), c_.end())); }

  TruncSeries derivative() const {
    std::vector<Rat> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rat(static_cast<long>(k)));
    if (exact_) return TruncSeries(std::move(d), order_ == 0 ? 0 : order_ - 1, true);
    return TruncSeries(std::move(d), order_ == 0 ? 0 : order_ - 1, false);
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    return combine(a, b, Rat(1));
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    return combine(a, b, Rat(-1));
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    unsigned ord = result_order(a, b);
    bool ex = a.exact_ && b.exact_;
    std::size_t n = ex ? (a.c_.empty() || b.c_.empty() ? 0 : a.c_.size() + b.c_.size() - 1)
                       : ord + 1;
    std::vector<Rat> c(n, Rat(0));
    for (std::size_t i = 0; i < a.c_.size() && i < n; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size() && i + j < n; ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return TruncSeries(std::move(c), ex ? std::max<unsigned>(ord, n ? n - 1 : 0) : ord, ex);
  }
  friend TruncSeries operator*(TruncSeries a, const Rat& s) {
    for (auto& v : a.c_) v *= s;
    if (a.exact_) return TruncSeries(std::move(a.c_), a.order_, true);
    return a;
  }

  // Multiplicative inverse of a unit (nonzero constant term).
  TruncSeries inverse() const {
    Rat c0 = (*this)[0];
    if (c0.is_zero()) throw Error(ErrorKind::InvalidArgument, "series inverse of a non-unit");
    std::vector<Rat> inv(order_ + 1, Rat(0));
    inv[0] = Rat(1) / c0;
    for (unsigned k = 1; k <= order_; ++k) {
      Rat acc(0);
      for (unsigned j = 1; j <= k; ++j) acc += (*this)[j] * inv[k - j];
      inv[k] = -acc * inv[0];
    }
    return TruncSeries(std::move(inv), order_, false);
  }

  std::string str(char var = 't') const {
    std::string s = to_upoly().str(var);
    if (!exact_) s += " + O(" + std::string(1, var) + "^" + std::to_string(order_ + 1) + ")";
    return s;
  }

 private:
  static unsigned result_order(const TruncSeries& a, const TruncSeries& b) {
    if (a.exact_ && b.exact_) return std::max(a.order_, b.order_);
    if (a.exact_) return b.order_;
    if (b.exact_) return a.order_;
    return std::min(a.order_, b.order_);
  }
  static TruncSeries combine(const TruncSeries& a, const TruncSeries& b, const Rat& s) {
    unsigned ord = result_order(a, b);
    bool ex = a.exact_ && b.exact_;
    std::size_t n = ex ? std::max(a.c_.size(), b.c_.size()) : ord + 1;
    std::vector<Rat> c(n, Rat(0));
    for (std::size_t k = 0; k < n; ++k) {
      if (k < a.c_.size()) c[k] += a.c_[k];
      if (k < b.c_.size()) c[k] += s * b.c_[k];
    }
    return TruncSeries(std::move(c), ord, ex);
  }

  std::vector<Rat> c_;
  unsigned order_ = 0;
  bool exact_ = false;
};

// f(t, phi(t)) as a series in t; the variable roles are swapped when `phi_is_z`
// (i.e. computes f(phi(t), t)).
inline TruncSeries compose(const BiPoly& f, const TruncSeries& phi, bool phi_is_z = false) {
  auto cs = (phi_is_z ? f.swap_vars() : f).coeffs_in_w();
  unsigned ord = phi.order();
  TruncSeries acc = TruncSeries::constant(Rat(0), ord);
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    acc = acc * phi + TruncSeries::polynomial(*it, ord);
  }
  if (!phi.exact()) acc = acc.truncate(ord);
  return acc;
}

// Coefficient of t^-1 in the Laurent expansion of num/den at 0.
inline Rat series_residue(const TruncSeries& num, const TruncSeries& den) {
  int v = den.valuation();
  if (v < 0) {
    if (den.is_exact_zero()) throw Error(ErrorKind::InvalidArgument, "residue with zero denominator");
    throw Error(ErrorKind::InsufficientTruncation, "denominator vanishes to its truncation order");
  }
  if (v == 0) return Rat(0);
  // num/den = t^-v * num * u^-1 with u = den / t^v a unit; need coefficient v-1 of num * u^-1.
  unsigned need = static_cast<unsigned>(v - 1);
  if (!den.exact() && den.order() < static_cast<unsigned>(v) + need)
    throw Error(ErrorKind::InsufficientTruncation, "denominator known to too low an order");
  if (!num.exact() && num.order() < need)
    throw Error(ErrorKind::InsufficientTruncation, "numerator known to too low an order");
  std::vector<Rat> u;
  for (unsigned k = 0; k <= need; ++k) u.push_back(den[static_cast<unsigned>(v) + k]);
  TruncSeries uinv = TruncSeries(std::move(u), need, false).inverse();
  Rat acc(0);
  for (unsigned j = 0; j <= need; ++j) acc += num[j] * uinv[need - j];
  return acc;
}

}  // namespace folia
