#include "paracurv/sym_matrix.hpp"

#include <algorithm>
#include <utility>

#include "paracurv/errors.hpp"

namespace paracurv {

SymMatrix::SymMatrix(int dim) : dim_(dim), e_(static_cast<std::size_t>(dim) * dim) {
  if (dim <= 0) throw DimensionMismatchError("matrix dimension must be positive");
}

SymMatrix SymMatrix::identity(int dim) {
  SymMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, 1);
  return m;
}

SymMatrix SymMatrix::diag(const std::vector<Rational>& d) {
  SymMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m.set(i, i, d[static_cast<std::size_t>(i)]);
  return m;
}

void SymMatrix::set(int i, int j, const Rational& v) {
  e_[idx(i, j)] = v;
  e_[idx(j, i)] = v;
}

Rational det(const SymMatrix& m) {
  const int n = m.dim();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);

  Rational result(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      result = -result;
    }
    result *= a[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      const Rational f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return result;
}

SymMatrix invert_symmetric(const SymMatrix& m) {
  const int n = m.dim();
  // Gauss-Jordan on [m | I].
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][static_cast<std::size_t>(n) + i] = 1;
  }

  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    Rational best(0);
    for (int r = col; r < n; ++r) {
      const Rational mag = a[r][col].abs();
      if (!mag.is_zero() && (pivot < 0 || mag > best)) {
        pivot = r;
        best = mag;
      }
    }
    if (pivot < 0) throw SingularMatrixError("matrix is singular");
    if (pivot != col) std::swap(a[pivot], a[col]);
    const Rational inv_p = Rational(1) / a[col][col];
    for (int c = 0; c < 2 * n; ++c) a[col][c] *= inv_p;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (int c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }

  SymMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) out.set(i, j, a[i][static_cast<std::size_t>(n) + j]);
  return out;
}

Signature signature(const SymMatrix& m) {
  const int n = m.dim();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);

  std::vector<bool> done(n, false);
  Signature sig;
  int remaining = n;
  while (remaining > 0) {
    // Largest |diagonal| pivot among active rows, lowest index on ties.
    int pivot = -1;
    Rational best(0);
    for (int r = 0; r < n; ++r) {
      if (done[r]) continue;
      const Rational mag = a[r][r].abs();
      if (!mag.is_zero() && (pivot < 0 || mag > best)) {
        pivot = r;
        best = mag;
      }
    }

    if (pivot < 0) {
      // Whole active diagonal is zero: hyperbolic-pair split on the first
      // nonzero off-diagonal entry (E_r -> E_r + E_s, E_s -> E_r - E_s).
      int pr = -1, ps = -1;
      for (int r = 0; r < n && pr < 0; ++r) {
        if (done[r]) continue;
        for (int s = r + 1; s < n; ++s) {
          if (done[s]) continue;
          if (!a[r][s].is_zero()) {
            pr = r;
            ps = s;
            break;
          }
        }
      }
      if (pr < 0) throw SingularMatrixError("degenerate symmetric form");
      for (int c = 0; c < n; ++c) {
        const Rational vr = a[pr][c], vs = a[ps][c];
        a[pr][c] = vr + vs;
        a[ps][c] = vr - vs;
      }
      for (int r = 0; r < n; ++r) {
        const Rational vr = a[r][pr], vs = a[r][ps];
        a[r][pr] = vr + vs;
        a[r][ps] = vr - vs;
      }
      continue;  // both diagonal entries are now nonzero
    }

    const Rational p = a[pivot][pivot];
    for (int r = 0; r < n; ++r) {
      if (done[r] || r == pivot || a[r][pivot].is_zero()) continue;
      const Rational f = a[r][pivot] / p;
      for (int c = 0; c < n; ++c) a[r][c] -= f * a[pivot][c];
      for (int c = 0; c < n; ++c) a[c][r] -= f * a[c][pivot];
    }
    (p.sign() > 0 ? sig.positive : sig.negative) += 1;
    done[pivot] = true;
    --remaining;
  }
  return sig;
}

}  // namespace paracurv
