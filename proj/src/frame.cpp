#include "paracurv/frame.hpp"

#include "paracurv/errors.hpp"

namespace paracurv {

FrameManifold::FrameManifold(int d, Tensor structure_constants, SymMatrix metric)
    : dim(d), c(std::move(structure_constants)), g(std::move(metric)) {
  if (c.contra() != 1 || c.cov() != 2 || c.dim() != d || g.dim() != d)
    throw DimensionMismatchError("frame data does not match dimension " + std::to_string(d));
}

Vec FrameManifold::bracket(const Vec& u, const Vec& v) const {
  if ((int)u.size() != dim || (int)v.size() != dim)
    throw DimensionMismatchError("bracket arguments have wrong length");
  Vec out(dim, Rational(0));
  for (int k = 0; k < dim; ++k)
    for (int i = 0; i < dim; ++i) {
      if (u[i].is_zero()) continue;
      for (int j = 0; j < dim; ++j) out[k] += c(k, i, j) * u[i] * v[j];
    }
  return out;
}

Rational FrameManifold::pair(const Vec& u, const Vec& v) const {
  if ((int)u.size() != dim || (int)v.size() != dim)
    throw DimensionMismatchError("pairing arguments have wrong length");
  Rational s(0);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) s += g(i, j) * u[i] * v[j];
  return s;
}

Vec FrameManifold::basis(int i) const {
  Vec e(dim, Rational(0));
  e[i] = Rational(1);
  return e;
}

FrameValidation validate_frame(const FrameManifold& f) {
  FrameValidation v;
  const int d = f.dim;
  for (int k = 0; k < d && v.antisymmetry_ok; ++k)
    for (int i = 0; i < d && v.antisymmetry_ok; ++i)
      for (int j = 0; j < d; ++j)
        if (!(f.c(k, i, j) + f.c(k, j, i)).is_zero()) {
          v.antisymmetry_ok = false;
          v.antisymmetry_witness = {k, i, j};
          break;
        }
  for (int n = 0; n < d && v.jacobi_ok; ++n)
    for (int i = 0; i < d && v.jacobi_ok; ++i)
      for (int j = 0; j < d && v.jacobi_ok; ++j)
        for (int l = 0; l < d; ++l) {
          Rational s(0);
          for (int m = 0; m < d; ++m)
            s += f.c(m, i, j) * f.c(n, m, l) + f.c(m, j, l) * f.c(n, m, i) +
                 f.c(m, l, i) * f.c(n, m, j);
          if (!s.is_zero()) {
            v.jacobi_ok = false;
            v.jacobi_witness = {n, i, j, l};
            break;
          }
        }
  v.metric_nondegenerate = !det(f.g).is_zero();
  return v;
}

Connection levi_civita(const FrameManifold& f) {
  const int d = f.dim;
  const SymMatrix ginv = invert_symmetric(f.g);
  Tensor gamma(1, 2, d);
  const Rational half(1, 2);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      // rhs_k = g([E_i,E_j],E_k) - g([E_j,E_k],E_i) + g([E_k,E_i],E_j)
      std::vector<Rational> rhs(d, Rational(0));
      for (int k = 0; k < d; ++k)
        for (int m = 0; m < d; ++m)
          rhs[k] += f.c(m, i, j) * f.g(m, k) - f.c(m, j, k) * f.g(m, i) +
                    f.c(m, k, i) * f.g(m, j);
      for (int l = 0; l < d; ++l) {
        Rational s(0);
        for (int k = 0; k < d; ++k) s += ginv(l, k) * rhs[k];
        gamma(l, i, j) = s * half;
      }
    }
  return Connection{std::move(gamma)};
}

Tensor covariant_derivative(const FrameManifold& f, const Connection& conn, const Tensor& t) {
  const int d = f.dim;
  if (t.dim() != d) throw DimensionMismatchError("tensor dimension does not match frame");
  const int p = t.contra();
  const int q = t.cov();
  Tensor out(p, q + 1, d);
  const Tensor& gamma = conn.gamma;
  std::vector<int> src(p + q);
  for (IndexIter it(p + q + 1, d); !it.done(); it.next()) {
    std::span<const int> idx = *it;  // (a_1..a_p, z, b_1..b_q)
    const int z = idx[p];
    for (int s = 0; s < p; ++s) src[s] = idx[s];
    for (int s = 0; s < q; ++s) src[p + s] = idx[p + 1 + s];
    Rational acc(0);
    for (int s = 0; s < p; ++s) {
      const int a = src[s];
      for (int m = 0; m < d; ++m) {
        const Rational& gm = gamma(a, z, m);
        if (gm.is_zero()) continue;
        src[s] = m;
        acc += gm * t.at(src);
        src[s] = a;
      }
    }
    for (int s = 0; s < q; ++s) {
      const int b = src[p + s];
      for (int m = 0; m < d; ++m) {
        const Rational& gm = gamma(m, z, b);
        if (gm.is_zero()) continue;
        src[p + s] = m;
        acc -= gm * t.at(src);
        src[p + s] = b;
      }
    }
    out.at(idx) = acc;
  }
  return out;
}

CurvatureBundle curvature_bundle(const FrameManifold& f, const Connection& conn) {
  const int d = f.dim;
  const Tensor& gamma = conn.gamma;
  Tensor R(1, 3, d);
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          Rational s(0);
          for (int m = 0; m < d; ++m)
            s += gamma(m, j, k) * gamma(a, i, m) - gamma(m, i, k) * gamma(a, j, m) -
                 f.c(m, i, j) * gamma(a, m, k);
          R(a, i, j, k) = s;
        }

  Tensor R4(0, 4, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int w = 0; w < d; ++w) {
          Rational s(0);
          for (int l = 0; l < d; ++l) s += R(l, i, j, k) * f.g(l, w);
          R4(i, j, k, w) = s;
        }

  Tensor Ric(0, 2, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      Rational s(0);
      for (int m = 0; m < d; ++m) s += R(m, m, j, k);
      Ric(j, k) = s;
    }

  const SymMatrix ginv = invert_symmetric(f.g);
  Tensor Q(1, 1, d);
  Rational scal(0);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Rational s(0);
      for (int cdx = 0; cdx < d; ++cdx) s += ginv(a, cdx) * Ric(b, cdx);
      Q(a, b) = s;
    }
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) scal += ginv(j, k) * Ric(j, k);

  return CurvatureBundle{std::move(R), std::move(R4), std::move(Ric), std::move(Q), scal};
}

CurvatureBundle bundle_from_r4(const FrameManifold& f, const Tensor& r4) {
  const int d = f.dim;
  if (r4.contra() != 0 || r4.cov() != 4 || r4.dim() != d)
    throw DimensionMismatchError("expected a (0,4) tensor matching the frame dimension");
  const SymMatrix ginv = invert_symmetric(f.g);
  Tensor R(1, 3, d);
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          Rational s(0);
          for (int w = 0; w < d; ++w) s += ginv(a, w) * r4(i, j, k, w);
          R(a, i, j, k) = s;
        }
  Tensor Ric(0, 2, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      Rational s(0);
      for (int m = 0; m < d; ++m) s += R(m, m, j, k);
      Ric(j, k) = s;
    }
  Tensor Q(1, 1, d);
  Rational scal(0);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Rational s(0);
      for (int cdx = 0; cdx < d; ++cdx) s += ginv(a, cdx) * Ric(b, cdx);
      Q(a, b) = s;
    }
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) scal += ginv(j, k) * Ric(j, k);
  return CurvatureBundle{std::move(R), r4, std::move(Ric), std::move(Q), scal};
}

Rational r4_eval(const Tensor& r4, const Vec& x, const Vec& y, const Vec& z, const Vec& w) {
  const int d = r4.dim();
  Rational s(0);
  for (int i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      for (int k = 0; k < d; ++k) {
        if (z[k].is_zero()) continue;
        for (int l = 0; l < d; ++l) {
          if (w[l].is_zero()) continue;
          s += r4(i, j, k, l) * x[i] * y[j] * z[k] * w[l];
        }
      }
    }
  }
  return s;
}

Rational sectional_curvature(const FrameManifold& f, const CurvatureBundle& cb, const Vec& x,
                             const Vec& y) {
  const Rational denom = f.pair(x, x) * f.pair(y, y) - f.pair(x, y) * f.pair(x, y);
  if (denom.is_zero())
    throw DegeneratePlaneError("plane spanned by the given vectors is degenerate");
  return r4_eval(cb.R4, x, y, y, x) / denom;
}

Tensor nabla_curvature(const FrameManifold& f, const Connection& conn, const CurvatureBundle& cb) {
  return covariant_derivative(f, conn, cb.R);
}

}  // namespace paracurv
