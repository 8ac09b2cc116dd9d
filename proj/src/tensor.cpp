#include "paracurv/tensor.hpp"

#include <cassert>

#include "paracurv/errors.hpp"

namespace paracurv {

namespace {

std::size_t pow_size(int dim, int rank) {
  std::size_t n = 1;
  for (int i = 0; i < rank; ++i) n *= static_cast<std::size_t>(dim);
  return n;
}

}  // namespace

Tensor::Tensor(int contra, int cov, int dim)
    : contra_(contra), cov_(cov), dim_(dim), e_(pow_size(dim, contra + cov)) {
  if (dim <= 0 || contra < 0 || cov < 0) throw DimensionMismatchError("bad tensor shape");
}

std::size_t Tensor::offset(std::span<const int> idx) const {
  assert(static_cast<int>(idx.size()) == rank());
  std::size_t off = 0;
  for (const int i : idx) {
    assert(i >= 0 && i < dim_);
    off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
  }
  return off;
}

bool Tensor::is_zero() const {
  for (const auto& v : e_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

std::optional<Witness> Tensor::first_nonzero() const {
  for (std::size_t off = 0; off < e_.size(); ++off) {
    if (e_[off].is_zero()) continue;
    std::vector<int> idx(static_cast<std::size_t>(rank()));
    std::size_t rem = off;
    for (int s = rank() - 1; s >= 0; --s) {
      idx[static_cast<std::size_t>(s)] = static_cast<int>(rem % static_cast<std::size_t>(dim_));
      rem /= static_cast<std::size_t>(dim_);
    }
    return Witness{std::move(idx), e_[off]};
  }
  return std::nullopt;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (contra_ != o.contra_ || cov_ != o.cov_ || dim_ != o.dim_)
    throw DimensionMismatchError("tensor shape mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (contra_ != o.contra_ || cov_ != o.cov_ || dim_ != o.dim_)
    throw DimensionMismatchError("tensor shape mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Tensor& Tensor::operator*=(const Rational& s) {
  for (auto& v : e_) v *= s;
  return *this;
}

void IndexIter::next() {
  for (int s = static_cast<int>(idx_.size()) - 1; s >= 0; --s) {
    if (++idx_[static_cast<std::size_t>(s)] < dim_) return;
    idx_[static_cast<std::size_t>(s)] = 0;
  }
  done_ = true;
}

}  // namespace paracurv
