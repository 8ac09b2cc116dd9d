#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "paracurv/rational.hpp"

namespace paracurv {

/// First nonzero component of a tensor expression: the index tuple plus the
/// exact residual found there. Indices are 0-based internally; reports
/// convert to the 1-based frame labels.
struct Witness {
  std::vector<int> indices;
  Rational residual;
};

/// Dense tensor of exact rationals on a d-dimensional frame. All slots run
/// over the same frame, so the shape is just (valence, dim). Contravariant
/// slots come first in the index tuple. Components are frame-constant;
/// there is no base-point dependence anywhere in this library.
class Tensor {
 public:
  Tensor(int contra, int cov, int dim);

  int contra() const { return contra_; }
  int cov() const { return cov_; }
  int rank() const { return contra_ + cov_; }
  int dim() const { return dim_; }

  const Rational& at(std::span<const int> idx) const { return e_[offset(idx)]; }
  Rational& at(std::span<const int> idx) { return e_[offset(idx)]; }

  template <class... I>
  const Rational& operator()(I... i) const {
    const std::array<int, sizeof...(I)> idx{static_cast<int>(i)...};
    return at(idx);
  }
  template <class... I>
  Rational& operator()(I... i) {
    const std::array<int, sizeof...(I)> idx{static_cast<int>(i)...};
    return at(idx);
  }

  bool is_zero() const;
  std::optional<Witness> first_nonzero() const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Rational& s);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Rational& s, Tensor t) { return t *= s; }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.contra_ == b.contra_ && a.cov_ == b.cov_ && a.e_ == b.e_;
  }

 private:
  std::size_t offset(std::span<const int> idx) const;
  int contra_, cov_, dim_;
  std::vector<Rational> e_;
};

/// Walks all rank-length index tuples in lexicographic order.
class IndexIter {
 public:
  IndexIter(int rank, int dim) : idx_(static_cast<std::size_t>(rank), 0), dim_(dim) {}
  bool done() const { return done_; }
  std::span<const int> operator*() const { return idx_; }
  void next();

 private:
  std::vector<int> idx_;
  int dim_;
  bool done_ = false;
};

}  // namespace paracurv
