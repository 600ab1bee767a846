#include "adlv/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace adlv {

Int floor_q(const Q& q) {
  Int n = q.numerator(), d = q.denominator();
  Int r = n / d;
  if (n % d != 0 && n < 0) --r;
  return r;
}

Int ceil_q(const Q& q) { return -floor_q(-q); }

std::string to_string(const Q& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string to_string(const IVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string to_string(const QVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

QVec to_q(const IVec& v) { return QVec(v.begin(), v.end()); }

bool is_integral(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Q& q) { return q.denominator() == 1; });
}

IVec to_int(const QVec& v) {
  IVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].denominator() != 1) throw std::domain_error("non-integral vector " + to_string(v));
    r[i] = v[i].numerator();
  }
  return r;
}

IMat identity(int n) {
  IMat m(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMat transpose(const IMat& a) {
  if (a.empty()) return {};
  IMat t(a[0].size(), IVec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

IMat mul(const IMat& a, const IMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IMat c(n, IVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l)
      if (a[i][l] != 0)
        for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

IVec mul(const IMat& a, const IVec& x) {
  IVec y(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) y[i] = dot(a[i], x);
  return y;
}

QVec mul(const QMat& a, const QVec& x) {
  QVec y(a.size(), Q(0));
  for (size_t i = 0; i < a.size(); ++i) y[i] = dot(a[i], x);
  return y;
}

QMat to_q(const IMat& a) {
  QMat r;
  for (const auto& row : a) r.push_back(to_q(row));
  return r;
}

IVec add(const IVec& a, const IVec& b) {
  IVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
IVec sub(const IVec& a, const IVec& b) {
  IVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
IVec scale(const IVec& a, Int k) {
  IVec r(a);
  for (auto& x : r) x *= k;
  return r;
}
QVec add(const QVec& a, const QVec& b) {
  QVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
QVec sub(const QVec& a, const QVec& b) {
  QVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
QVec scale(const QVec& a, const Q& k) {
  QVec r(a);
  for (auto& x : r) x *= k;
  return r;
}
Int dot(const IVec& a, const IVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
Q dot(const QVec& a, const QVec& b) {
  Q s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
Q dot(const IVec& a, const QVec& b) {
  Q s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
bool is_zero(const IVec& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}
bool is_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Q& x) { return x == 0; });
}

IVec Smith::diagonal() const {
  IVec d;
  for (size_t i = 0; i < D.size() && i < (D.empty() ? 0 : D[0].size()); ++i) d.push_back(D[i][i]);
  return d;
}

namespace {

void swap_rows(IMat& m, size_t i, size_t j) { std::swap(m[i], m[j]); }
void swap_cols(IMat& m, size_t i, size_t j) {
  for (auto& row : m) std::swap(row[i], row[j]);
}
// row_i += k * row_j
void add_row(IMat& m, size_t i, size_t j, Int k) {
  for (size_t c = 0; c < m[i].size(); ++c) m[i][c] += k * m[j][c];
}
void add_col(IMat& m, size_t i, size_t j, Int k) {
  for (auto& row : m) row[i] += k * row[j];
}
void neg_row(IMat& m, size_t i) {
  for (auto& x : m[i]) x = -x;
}

}  // namespace

Smith smith_normal_form(const IMat& a) {
  size_t n = a.size();
  size_t m = n ? a[0].size() : 0;
  Smith s{identity(static_cast<int>(n)), a, identity(static_cast<int>(m))};
  IMat& D = s.D;
  size_t t = 0;
  while (t < n && t < m) {
    // pivot: smallest nonzero absolute value in the remaining block
    Int best = 0;
    size_t bi = 0, bj = 0;
    for (size_t i = t; i < n; ++i)
      for (size_t j = t; j < m; ++j)
        if (D[i][j] != 0 && (best == 0 || std::abs(D[i][j]) < best)) {
          best = std::abs(D[i][j]);
          bi = i;
          bj = j;
        }
    if (best == 0) break;
    swap_rows(D, t, bi);
    swap_rows(s.U, t, bi);
    swap_cols(D, t, bj);
    swap_cols(s.V, t, bj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < n; ++i) {
        Int q = D[i][t] / D[t][t];
        if (q != 0) {
          add_row(D, i, t, -q);
          add_row(s.U, i, t, -q);
        }
        if (D[i][t] != 0) {
          swap_rows(D, t, i);
          swap_rows(s.U, t, i);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < m; ++j) {
        Int q = D[t][j] / D[t][t];
        if (q != 0) {
          add_col(D, j, t, -q);
          add_col(s.V, j, t, -q);
        }
        if (D[t][j] != 0) {
          swap_cols(D, t, j);
          swap_cols(s.V, t, j);
          clean = false;
        }
      }
      if (clean) {
        // divisibility of the remaining block
        for (size_t i = t + 1; i < n && clean; ++i)
          for (size_t j = t + 1; j < m && clean; ++j)
            if (D[i][j] % D[t][t] != 0) {
              add_row(D, t, i, 1);
              add_row(s.U, t, i, 1);
              clean = false;
            }
      }
    }
    if (D[t][t] < 0) {
      neg_row(D, t);
      neg_row(s.U, t);
    }
    ++t;
  }
  return s;
}

Hermite hermite_rows(const IMat& a) {
  size_t n = a.size();
  size_t m = n ? a[0].size() : 0;
  Hermite h{identity(static_cast<int>(n)), a, 0};
  size_t row = 0;
  for (size_t col = 0; col < m && row < n; ++col) {
    // gcd-reduce column col among rows >= row
    while (true) {
      size_t piv = n;
      for (size_t i = row; i < n; ++i)
        if (h.H[i][col] != 0 && (piv == n || std::abs(h.H[i][col]) < std::abs(h.H[piv][col]))) piv = i;
      if (piv == n) break;
      swap_rows(h.H, row, piv);
      swap_rows(h.R, row, piv);
      bool done = true;
      for (size_t i = row + 1; i < n; ++i) {
        Int q = h.H[i][col] / h.H[row][col];
        if (q) {
          add_row(h.H, i, row, -q);
          add_row(h.R, i, row, -q);
        }
        if (h.H[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (h.H[row][col] == 0) continue;
    if (h.H[row][col] < 0) {
      neg_row(h.H, row);
      neg_row(h.R, row);
    }
    for (size_t i = 0; i < row; ++i) {
      Int q = h.H[i][col] / h.H[row][col];
      if (h.H[i][col] - q * h.H[row][col] < 0) --q;
      if (q) {
        add_row(h.H, i, row, -q);
        add_row(h.R, i, row, -q);
      }
    }
    ++row;
  }
  h.rank = static_cast<int>(row);
  return h;
}

QMat inverse(const QMat& a) {
  size_t n = a.size();
  QMat m = a, inv(n, QVec(n, Q(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Q piv = m[c][c];
    for (size_t j = 0; j < n; ++j) {
      m[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

IMat unimodular_inverse(const IMat& a) {
  QMat inv = inverse(to_q(a));
  IMat r;
  for (const auto& row : inv) r.push_back(to_int(row));
  return r;
}

IMat integer_kernel(const IMat& a) {
  if (a.empty()) return {};
  size_t m = a[0].size();
  // column operations: A V = [H | 0]; kernel spanned by trailing columns of V
  Hermite h = hermite_rows(transpose(a));  // R A^T = H  =>  A R^T = H^T
  IMat ker;
  for (size_t i = static_cast<size_t>(h.rank); i < m; ++i) ker.push_back(h.R[i]);
  return ker;
}

std::optional<IVec> solve_integer(const IMat& a, const IVec& b) {
  size_t n = a.size();
  if (n == 0) return IVec{};
  size_t m = a[0].size();
  Smith s = smith_normal_form(a);
  IVec ub = mul(s.U, b);
  IVec z(m, 0);
  for (size_t i = 0; i < n; ++i) {
    Int d = (i < m) ? s.D[i][i] : 0;
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % d != 0) return std::nullopt;
      z[i] = ub[i] / d;
    }
  }
  return mul(s.V, z);
}

std::optional<QVec> solve_rational(const QMat& a, const QVec& b) {
  size_t n = a.size();
  if (n == 0) return QVec{};
  size_t m = a[0].size();
  QMat aug = a;
  for (size_t i = 0; i < n; ++i) aug[i].push_back(b[i]);
  std::vector<size_t> pivcol;
  size_t row = 0;
  for (size_t c = 0; c < m && row < n; ++c) {
    size_t p = row;
    while (p < n && aug[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(aug[p], aug[row]);
    Q piv = aug[row][c];
    for (auto& x : aug[row]) x /= piv;
    for (size_t i = 0; i < n; ++i) {
      if (i == row || aug[i][c] == 0) continue;
      Q f = aug[i][c];
      for (size_t j = 0; j <= m; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivcol.push_back(c);
    ++row;
  }
  for (size_t i = row; i < n; ++i)
    if (aug[i][m] != 0) return std::nullopt;
  QVec x(m, Q(0));
  for (size_t i = 0; i < pivcol.size(); ++i) x[pivcol[i]] = aug[i][m];
  return x;
}

int rank(const QMat& a) {
  if (a.empty()) return 0;
  QMat m = a;
  size_t n = m.size(), cols = m[0].size();
  int r = 0;
  for (size_t c = 0; c < cols && static_cast<size_t>(r) < n; ++c) {
    size_t p = r;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[r]);
    for (size_t i = r + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Q f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

int fixed_dimension(const QMat& a) {
  QMat m = a;
  for (size_t i = 0; i < m.size(); ++i) m[i][i] -= 1;
  return static_cast<int>(a.size()) - rank(m);
}

}  // namespace adlv
