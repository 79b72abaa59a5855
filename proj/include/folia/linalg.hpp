#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "folia/rat.hpp"

namespace folia {

using RatMatrix = std::vector<std::vector<Rat>>;

// Leading principal minors det(G[0..k, 0..k]) for k = 1..n.
inline std::vector<Rat> leading_principal_minors(const RatMatrix& g) {
  std::size_t n = g.size();
  std::vector<Rat> out;
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix a(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) a[i][j] = g[i][j];
    Rat det(1);
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t piv = c;
      while (piv < k && a[piv][c].is_zero()) ++piv;
      if (piv == k) {
        det = Rat(0);
        break;
      }
      if (piv != c) {
        std::swap(a[piv], a[c]);
        det = -det;
      }
      det *= a[c][c];
      for (std::size_t r = c + 1; r < k; ++r) {
        if (a[r][c].is_zero()) continue;
        Rat f = a[r][c] / a[c][c];
        for (std::size_t j = c; j < k; ++j) a[r][j] -= f * a[c][j];
      }
    }
    out.push_back(det);
  }
  return out;
}

// Sylvester's criterion: (-1)^k * minor_k > 0 for every k.
inline bool is_negative_definite(const RatMatrix& g) {
  auto minors = leading_principal_minors(g);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    int s = minors[k].sign();
    if ((k % 2 == 0 && s >= 0) || (k % 2 == 1 && s <= 0)) return false;
  }
  return true;
}

// Solves g x = b exactly; nullopt when g is singular.
inline std::optional<std::vector<Rat>> solve_linear(RatMatrix a, std::vector<Rat> b) {
  std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Rat f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

}  // namespace folia
