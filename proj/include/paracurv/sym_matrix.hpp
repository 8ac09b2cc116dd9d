#pragma once

#include <vector>

#include "paracurv/rational.hpp"

namespace paracurv {

/// Dense symmetric matrix of exact rationals. set() writes both mirror
/// entries, so symmetry holds by construction.
class SymMatrix {
 public:
  explicit SymMatrix(int dim);
  static SymMatrix identity(int dim);
  static SymMatrix diag(const std::vector<Rational>& d);

  int dim() const { return dim_; }
  const Rational& operator()(int i, int j) const { return e_[idx(i, j)]; }
  void set(int i, int j, const Rational& v);

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.dim_ == b.dim_ && a.e_ == b.e_;
  }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * dim_ + j; }
  int dim_;
  std::vector<Rational> e_;
};

Rational det(const SymMatrix& m);

/// Exact inverse. Throws SingularMatrixError when det(m) = 0.
SymMatrix invert_symmetric(const SymMatrix& m);

struct Signature {
  int positive = 0;
  int negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Sylvester signature (p, q) by symmetric congruence reduction. Pivot is
/// the largest remaining |diagonal| entry, ties broken by lowest index;
/// an all-zero diagonal block is handled by the 2x2 hyperbolic-pair split.
/// Throws SingularMatrixError on a degenerate form.
Signature signature(const SymMatrix& m);

}  // namespace paracurv
