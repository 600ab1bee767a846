#pragma once

// Test-side oracles, written against the definitions and sharing no code with the library
// beyond the Rational type.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "adlv/rational.hpp"

namespace oracle {

using adlv::Int;
using adlv::Rational;
using Mat = std::vector<std::vector<Int>>;

// Determinant by exact elimination over Q.
inline Rational det(std::vector<std::vector<Rational>> a) {
  size_t n = a.size();
  Rational d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      Rational f = a[r][c] / a[c][c];
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

// Invariant factors of Z^rows / (column span of m) through determinantal divisors:
// d_k = D_k / D_{k-1}, D_k the gcd of all k x k minors.  Factors equal to 1 are dropped;
// free summands are reported as 0, torsion first in increasing order.
inline std::vector<Int> invariant_factors(const Mat& m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<Int> dk{1};
  size_t kmax = std::min(rows, cols);
  for (size_t k = 1; k <= kmax; ++k) {
    Int g = 0;
    std::vector<size_t> ri(k), ci(k);
    std::function<void(size_t, size_t)> pick_c;
    std::function<void(size_t, size_t)> pick_r = [&](size_t start, size_t depth) {
      if (depth == k) {
        pick_c(0, 0);
        return;
      }
      for (size_t i = start; i < rows; ++i) {
        ri[depth] = i;
        pick_r(i + 1, depth + 1);
      }
    };
    pick_c = [&](size_t start, size_t depth) {
      if (depth == k) {
        std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
        for (size_t a = 0; a < k; ++a)
          for (size_t b = 0; b < k; ++b) sub[a][b] = m[ri[a]][ci[b]];
        Rational d = det(sub);
        g = std::gcd(g, d.numerator() < 0 ? -d.numerator() : d.numerator());
        return;
      }
      for (size_t j = start; j < cols; ++j) {
        ci[depth] = j;
        pick_c(j + 1, depth + 1);
      }
    };
    pick_r(0, 0);
    if (g == 0) break;
    dk.push_back(g);
  }
  std::vector<Int> out;
  for (size_t k = 1; k < dk.size(); ++k)
    if (dk[k] / dk[k - 1] != 1) out.push_back(dk[k] / dk[k - 1]);
  std::sort(out.begin(), out.end());
  for (size_t k = dk.size() - 1; k < rows; ++k) out.push_back(0);
  return out;
}

// Newton polygons of GL_n below mu: slope sequences with integral break points.
struct Polygon {
  std::vector<Rational> slopes;  // non-increasing, length n
  int defect = 0;
};

inline std::vector<Rational> partial_sums(const std::vector<Rational>& v) {
  std::vector<Rational> s{0};
  for (const auto& x : v) s.push_back(s.back() + x);
  return s;
}

inline std::vector<Polygon> gl_newton_polygons(const std::vector<Int>& mu) {
  int n = static_cast<int>(mu.size());
  Int total = 0;
  for (Int x : mu) total += x;
  std::vector<Rational> mus(mu.begin(), mu.end());
  auto mu_ps = partial_sums(mus);
  std::vector<Polygon> out;
  // segments (length h, rise a) with strictly decreasing slopes
  std::function<void(int, Int, std::vector<std::pair<int, Int>>&)> rec = [&](int used, Int rise,
                                                                           std::vector<std::pair<int, Int>>& segs) {
    if (used == n) {
      if (rise != total) return;
      Polygon p;
      for (auto [h, a] : segs) {
        for (int i = 0; i < h; ++i) p.slopes.push_back(Rational(a, h));
        p.defect += h - static_cast<int>(std::gcd(h, a < 0 ? -a : a));
      }
      auto ps = partial_sums(p.slopes);
      for (int i = 0; i <= n; ++i)
        if (ps[i] > mu_ps[i]) return;
      out.push_back(p);
      return;
    }
    for (int h = 1; used + h <= n; ++h)
      for (Int a = mu.back() * h; a <= mu.front() * h; ++a) {
        if (!segs.empty() && !(Rational(a, h) < Rational(segs.back().second, segs.back().first))) continue;
        segs.push_back({h, a});
        rec(used + h, rise + a, segs);
        segs.pop_back();
      }
  };
  std::vector<std::pair<int, Int>> segs;
  rec(0, 0, segs);
  return out;
}

// Lattice points (x, y) with 0 < x < n and nu(x) < y <= nu'(x).
inline Int lattice_points_between(const std::vector<Rational>& nu, const std::vector<Rational>& nu_top) {
  auto a = partial_sums(nu), b = partial_sums(nu_top);
  Int c = 0;
  for (size_t x = 1; x + 1 < a.size(); ++x) {
    Int lo = a[x].numerator() / a[x].denominator() - 2;
    for (Int y = lo; Rational(y) <= b[x]; ++y)
      if (Rational(y) > a[x]) ++c;
  }
  return c;
}

// Kostka number: semistandard tableaux of shape lambda (partition) and content mu.
inline Int kostka(const std::vector<Int>& shape, const std::vector<Int>& content) {
  size_t rows = shape.size();
  std::vector<std::vector<int>> t(rows);
  for (size_t r = 0; r < rows; ++r) t[r].assign(shape[r], 0);
  std::vector<std::pair<size_t, size_t>> cells;
  for (size_t r = 0; r < rows; ++r)
    for (Int c = 0; c < shape[r]; ++c) cells.push_back({r, static_cast<size_t>(c)});
  std::vector<Int> left = content;
  Int count = 0;
  std::function<void(size_t)> fill = [&](size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[k];
    for (size_t v = 1; v <= content.size(); ++v) {
      if (left[v - 1] == 0) continue;
      if (c > 0 && t[r][c - 1] > static_cast<int>(v)) continue;
      if (r > 0 && t[r - 1][c] >= static_cast<int>(v)) continue;
      t[r][c] = static_cast<int>(v);
      --left[v - 1];
      fill(k + 1);
      ++left[v - 1];
      t[r][c] = 0;
    }
  };
  fill(0);
  return count;
}

// Weight multiplicity of V_mu for GL_n at lambda, shifting both to non-negative entries.
inline Int gl_weight_multiplicity(std::vector<Int> mu, std::vector<Int> lambda) {
  Int s1 = 0, s2 = 0;
  for (Int x : mu) s1 += x;
  for (Int x : lambda) s2 += x;
  if (s1 != s2) return 0;
  Int shift = std::min(*std::min_element(mu.begin(), mu.end()), *std::min_element(lambda.begin(), lambda.end()));
  for (auto& x : mu) x -= shift;
  for (auto& x : lambda) x -= shift;
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  return kostka(mu, lambda);
}

// Hook-content style product formula for dim V_mu of GL_n.
inline Rational gl_dimension(const std::vector<Int>& mu) {
  Rational d = 1;
  int n = static_cast<int>(mu.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d *= Rational(mu[i] - mu[j] + j - i, j - i);
  return d;
}

}  // namespace oracle
