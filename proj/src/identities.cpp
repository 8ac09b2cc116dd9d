#include "paracurv/identities.hpp"

#include "paracurv/errors.hpp"

namespace paracurv {

namespace {

IdentityReport report_from(std::string name, const Tensor& residual) {
  auto w = residual.first_nonzero();
  const bool pass = !w.has_value();
  return IdentityReport{std::move(name), pass, std::move(w)};
}

void require_qps(const ClassificationReport& cls, const char* what) {
  if (!cls.qps())
    throw NotQuasiParaSasakianError(std::string(what) +
                                    " requires a quasi-para-Sasakian structure");
}

Rational kron(int a, int b) { return Rational(a == b ? 1 : 0); }

// g(E_i, phi E_j)
Tensor g_phi_table(const ParacontactStructure& s) {
  const int d = s.base.dim;
  Tensor t(0, 2, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Rational r(0);
      for (int m = 0; m < d; ++m) r += s.base.g(i, m) * s.phi(m, j);
      t(i, j) = r;
    }
  return t;
}

// Ric(phi E_i, E_k)
Tensor ric_phi_table(const ParacontactStructure& s, const CurvatureBundle& cb) {
  const int d = s.base.dim;
  Tensor t(0, 2, d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      Rational r(0);
      for (int m = 0; m < d; ++m) r += s.phi(m, i) * cb.Ric(m, k);
      t(i, k) = r;
    }
  return t;
}

// Replaces slot `slot` of t by the matrix action m: contravariant slots
// transform as out = m . t, covariant slots as out = t . m.
Tensor contract_slot(const Tensor& t, const Tensor& m, int slot) {
  const int d = t.dim();
  Tensor out(t.contra(), t.cov(), d);
  const bool contra = slot < t.contra();
  std::vector<int> src(t.rank());
  for (IndexIter it(t.rank(), d); !it.done(); it.next()) {
    std::span<const int> idx = *it;
    for (int s = 0; s < t.rank(); ++s) src[s] = idx[s];
    Rational acc(0);
    for (int old = 0; old < d; ++old) {
      src[slot] = old;
      const Rational& f = contra ? m(idx[slot], old) : m(old, idx[slot]);
      if (f.is_zero()) continue;
      acc += f * t.at(src);
    }
    out.at(idx) = acc;
  }
  return out;
}

}  // namespace

std::vector<IdentityReport> verify_structural(const FrameManifold& f, const Connection& conn,
                                              const CurvatureBundle& cb, const Tensor& nablaR) {
  const int d = f.dim;
  std::vector<IdentityReport> out;

  Tensor torsion(1, 2, d);
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        torsion(k, i, j) = conn.gamma(k, i, j) - conn.gamma(k, j, i) - f.c(k, i, j);
  out.push_back(report_from("torsion_free", torsion));

  Tensor gt(0, 2, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) gt(i, j) = f.g(i, j);
  out.push_back(report_from("nabla_g_zero", covariant_derivative(f, conn, gt)));

  Tensor b1(1, 3, d);
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          b1(a, i, j, k) = cb.R(a, i, j, k) + cb.R(a, j, k, i) + cb.R(a, k, i, j);
  out.push_back(report_from("bianchi_first", b1));

  Tensor b2(1, 4, d);
  for (int a = 0; a < d; ++a)
    for (int z = 0; z < d; ++z)
      for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
          for (int k = 0; k < d; ++k)
            b2(a, z, x, y, k) = nablaR(a, z, x, y, k) + nablaR(a, x, y, z, k) +
                                nablaR(a, y, z, x, k);
  out.push_back(report_from("bianchi_second", b2));

  IdentityReport sym{"r4_symmetries", true, std::nullopt};
  for (IndexIter it(4, d); !it.done() && sym.pass; it.next()) {
    std::span<const int> v = *it;
    const int i = v[0], j = v[1], k = v[2], w = v[3];
    for (const Rational& r :
         {cb.R4(i, j, k, w) + cb.R4(j, i, k, w), cb.R4(i, j, k, w) + cb.R4(i, j, w, k),
          cb.R4(i, j, k, w) - cb.R4(k, w, i, j)})
      if (!r.is_zero()) {
        sym.pass = false;
        sym.witness = Witness{{i, j, k, w}, r};
        break;
      }
  }
  out.push_back(std::move(sym));
  return out;
}

std::vector<IdentityReport> verify_prop32(const ParacontactStructure& s,
                                          const CurvatureBundle& cb, const Tensor& nablaR,
                                          const ClassificationReport& cls) {
  require_qps(cls, "verify_prop32");
  const FrameManifold& f = s.base;
  const int d = f.dim;
  const int n = cls.n;
  std::vector<IdentityReport> out;

  Tensor e5(1, 2, d);
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Rational r(0);
        for (int k = 0; k < d; ++k) r += cb.R(a, i, j, k) * s.xi[k];
        e5(a, i, j) = r - s.eta[i] * kron(a, j) + s.eta[j] * kron(a, i);
      }
  out.push_back(report_from("eq5", e5));

  Tensor e51(1, 2, d);
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        Rational r(0);
        for (int j = 0; j < d; ++j) r += cb.R(a, i, j, k) * s.xi[j];
        e51(a, i, k) = r - f.g(i, k) * s.xi[a] + s.eta[k] * kron(a, i);
      }
  out.push_back(report_from("eq5_1", e51));

  Tensor e52(0, 1, d);
  for (int i = 0; i < d; ++i) {
    Rational r(0);
    for (int k = 0; k < d; ++k) r += cb.Ric(i, k) * s.xi[k];
    e52(i) = r + Rational(2 * n) * s.eta[i];
  }
  out.push_back(report_from("eq5_2", e52));

  IdentityReport e6{"eq6", true, std::nullopt};
  for (int i = 0; i < d && e6.pass; ++i) {
    if (!s.eta[i].is_zero()) continue;
    const Vec x = f.basis(i);
    const Rational denom = f.pair(x, x) * f.pair(s.xi, s.xi) - f.pair(x, s.xi) * f.pair(x, s.xi);
    if (denom.is_zero()) continue;
    const Rational residual = r4_eval(cb.R4, x, s.xi, s.xi, x) / denom + 1;
    if (!residual.is_zero()) {
      e6.pass = false;
      e6.witness = Witness{{i}, residual};
    }
  }
  out.push_back(std::move(e6));

  const Tensor gp = g_phi_table(s);
  Tensor e7(1, 3, d);
  for (int a = 0; a < d; ++a)
    for (int z = 0; z < d; ++z)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          Rational r(0);
          for (int k = 0; k < d; ++k) r += nablaR(a, z, i, j, k) * s.xi[k];
          for (int m = 0; m < d; ++m) r += cb.R(a, i, j, m) * s.phi(m, z);
          e7(a, z, i, j) = r - gp(i, z) * kron(a, j) + gp(j, z) * kron(a, i);
        }
  out.push_back(report_from("eq7", e7));
  return out;
}

std::vector<IdentityReport> verify_prop51(const ParacontactStructure& s,
                                          const CurvatureBundle& cb,
                                          const ClassificationReport& cls) {
  require_qps(cls, "verify_prop51");
  const FrameManifold& f = s.base;
  const int d = f.dim;
  const Tensor gp = g_phi_table(s);
  std::vector<IdentityReport> out;

  Tensor e10(1, 3, d);
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          Rational r(0);
          for (int m = 0; m < d; ++m) r += cb.R(a, i, j, m) * s.phi(m, k) - s.phi(a, m) * cb.R(m, i, j, k);
          e10(a, i, j, k) = r - f.g(j, k) * s.phi(a, i) + f.g(i, k) * s.phi(a, j) +
                            gp(j, k) * kron(a, i) - gp(i, k) * kron(a, j);
        }
  out.push_back(report_from("eq10", e10));

  Tensor e11(1, 3, d);
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          Rational r(0);
          for (int p = 0; p < d; ++p) {
            if (s.phi(p, i).is_zero()) continue;
            for (int q = 0; q < d; ++q) r += cb.R(a, p, q, k) * s.phi(p, i) * s.phi(q, j);
          }
          e11(a, i, j, k) = r + cb.R(a, i, j, k) + f.g(j, k) * kron(a, i) -
                            f.g(i, k) * kron(a, j) - gp(j, k) * s.phi(a, i) +
                            gp(i, k) * s.phi(a, j);
        }
  out.push_back(report_from("eq11", e11));
  return out;
}

EtaEinsteinFit eta_einstein_fit(const ParacontactStructure& s, const CurvatureBundle& cb) {
  const FrameManifold& f = s.base;
  const int d = f.dim;
  int dir = -1;
  for (int i = 0; i < d; ++i)
    if (s.eta[i].is_zero() && !f.g(i, i).is_zero()) {
      dir = i;
      break;
    }
  if (dir < 0)
    throw NoNonNullHorizontalDirectionError(
        "no basis direction in Ker eta with g(X,X) != 0");
  EtaEinsteinFit fit;
  fit.a = cb.Ric(dir, dir) / f.g(dir, dir);
  Rational ric_xi_xi(0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) ric_xi_xi += cb.Ric(i, j) * s.xi[i] * s.xi[j];
  fit.b = ric_xi_xi - fit.a;
  fit.exact = true;
  for (int i = 0; i < d && fit.exact; ++i)
    for (int j = 0; j < d; ++j)
      if (!(cb.Ric(i, j) - fit.a * f.g(i, j) - fit.b * s.eta[i] * s.eta[j]).is_zero()) {
        fit.exact = false;
        break;
      }
  return fit;
}

std::optional<Rational> constant_curvature_test(const FrameManifold& f,
                                                const CurvatureBundle& cb) {
  const int d = f.dim;
  std::optional<Rational> c;
  for (int i = 0; i < d && !c; ++i)
    for (int j = i + 1; j < d; ++j) {
      const Rational denom = f.g(i, i) * f.g(j, j) - f.g(i, j) * f.g(i, j);
      if (denom.is_zero()) continue;
      c = cb.R4(i, j, j, i) / denom;
      break;
    }
  if (!c) return std::nullopt;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int w = 0; w < d; ++w) {
          const Rational model = *c * (f.g(j, k) * f.g(i, w) - f.g(i, k) * f.g(j, w));
          if (cb.R4(i, j, k, w) != model) return std::nullopt;
        }
  return c;
}

Tensor phps_model(const ParacontactStructure& s, const Rational& H) {
  const FrameManifold& f = s.base;
  const int d = f.dim;
  const Tensor gp = g_phi_table(s);
  const Rational hm3 = H - 3, hp1 = H + 1;
  const Rational quarter(1, 4);
  Tensor t(1, 3, d);
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          Rational r = hm3 * (f.g(j, k) * kron(a, i) - f.g(i, k) * kron(a, j));
          r += hp1 * (s.eta[i] * s.eta[k] * kron(a, j) - s.eta[j] * s.eta[k] * kron(a, i) +
                      s.eta[j] * f.g(i, k) * s.xi[a] - s.eta[i] * f.g(j, k) * s.xi[a] +
                      gp(j, k) * s.phi(a, i) - gp(i, k) * s.phi(a, j) +
                      2 * gp(j, i) * s.phi(a, k));
          t(a, i, j, k) = r * quarter;
        }
  return t;
}

HolSectionalResult detect_H(const ParacontactStructure& s, const CurvatureBundle& cb,
                            const ClassificationReport& cls) {
  require_qps(cls, "detect_H");
  const FrameManifold& f = s.base;
  const int d = f.dim;
  int dir = -1;
  for (int i = 0; i < d; ++i)
    if (s.eta[i].is_zero() && !f.g(i, i).is_zero()) {
      dir = i;
      break;
    }
  if (dir < 0)
    throw DegenerateDirectionError("no basis direction in Ker eta with g(X,X) != 0");
  const Vec x = f.basis(dir);
  const Vec px = apply_phi(s, x);
  HolSectionalResult res;
  res.H = r4_eval(cb.R4, x, px, x, px) / (f.g(dir, dir) * f.g(dir, dir));
  res.matches_model = cb.R == phps_model(s, *res.H);
  return res;
}

Tensor weyl_tensor(const FrameManifold& f, const CurvatureBundle& cb) {
  const int d = f.dim;
  if (d <= 3)
    throw DimensionTooSmallError("Weyl tensor needs dimension >= 4, got " + std::to_string(d));
  const Rational c1 = Rational(1) / Rational(d - 2);
  const Rational c2 = cb.scal / Rational(2L * (d - 1) * (d - 2));
  Tensor C(0, 4, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int w = 0; w < d; ++w) {
          const Rational kn_ric = cb.Ric(j, k) * f.g(i, w) + cb.Ric(i, w) * f.g(j, k) -
                                  cb.Ric(i, k) * f.g(j, w) - cb.Ric(j, w) * f.g(i, k);
          const Rational kn_g =
              2 * (f.g(j, k) * f.g(i, w) - f.g(i, k) * f.g(j, w));
          C(i, j, k, w) = cb.R4(i, j, k, w) - c1 * kn_ric + c2 * kn_g;
        }
  return C;
}

PcBochnerResult pc_bochner(const ParacontactStructure& s, const CurvatureBundle& cb,
                           const ClassificationReport& cls) {
  require_qps(cls, "pc_bochner");
  const FrameManifold& f = s.base;
  const int d = f.dim;
  const int n = cls.n;
  const Rational kc = -(cb.scal - Rational(2 * n)) / Rational(2 * n + 2);
  const Rational p = Rational(1) / Rational(2 * n + 4);
  const Rational pk4 = (kc - 4) / Rational(2 * n + 4);
  const Rational pk2n = (kc + Rational(2 * n)) / Rational(2 * n + 4);
  const Rational pk = kc / Rational(2 * n + 4);
  const Tensor gp = g_phi_table(s);
  const Tensor rp = ric_phi_table(s, cb);
  const Tensor& Ric = cb.Ric;
  const std::vector<Rational>& eta = s.eta;

  Tensor B(0, 4, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int w = 0; w < d; ++w) {
          Rational ric_part =
              Ric(i, k) * f.g(j, w) - Ric(j, k) * f.g(i, w) + Ric(j, w) * f.g(i, k) -
              Ric(i, w) * f.g(j, k) + rp(i, k) * gp(j, w) - rp(j, k) * gp(i, w) +
              rp(j, w) * gp(i, k) - rp(i, w) * gp(j, k) + 2 * rp(i, j) * gp(k, w) +
              2 * rp(k, w) * gp(i, j) - Ric(i, k) * eta[j] * eta[w] +
              Ric(j, k) * eta[i] * eta[w] - Ric(j, w) * eta[i] * eta[k] +
              Ric(i, w) * eta[j] * eta[k];
          B(i, j, k, w) = cb.R4(i, j, k, w) + p * ric_part +
                          pk4 * (f.g(i, k) * f.g(j, w) - f.g(j, k) * f.g(i, w)) -
                          pk2n * (gp(j, w) * gp(i, k) - gp(i, w) * gp(j, k) +
                                  2 * gp(i, j) * gp(k, w)) -
                          pk * (f.g(i, k) * eta[j] * eta[w] - f.g(j, k) * eta[i] * eta[w] +
                                f.g(j, w) * eta[i] * eta[k] - f.g(i, w) * eta[j] * eta[k]);
        }
  auto wit = B.first_nonzero();
  const bool zero = !wit.has_value();
  return PcBochnerResult{std::move(B), zero, std::move(wit)};
}

Tensor derivation_action(const CurvatureBundle& cb, const Tensor& t) {
  const int d = t.dim();
  if (t.contra() != 0 || t.cov() != 2)
    throw DimensionMismatchError("derivation_action expects a (0,2) tensor");
  Tensor out(0, 4, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int u = 0; u < d; ++u)
        for (int v = 0; v < d; ++v) {
          Rational r(0);
          for (int m = 0; m < d; ++m)
            r -= cb.R(m, i, j, u) * t(m, v) + cb.R(m, i, j, v) * t(u, m);
          out(i, j, u, v) = r;
        }
  return out;
}

IdentityReport check_ricci_semisymmetry(const CurvatureBundle& cb) {
  return report_from("ricci_semisymmetry", derivation_action(cb, cb.Ric));
}

IdentityReport check_semisymmetry(const CurvatureBundle& cb) {
  const int d = cb.R.dim();
  Tensor out(1, 5, d);
  for (IndexIter it(6, d); !it.done(); it.next()) {
    std::span<const int> ix = *it;
    const int a = ix[0], i = ix[1], j = ix[2], z = ix[3], w = ix[4], v = ix[5];
    Rational r(0);
    for (int m = 0; m < d; ++m)
      r += cb.R(a, i, j, m) * cb.R(m, z, w, v) - cb.R(m, i, j, z) * cb.R(a, m, w, v) -
           cb.R(m, i, j, w) * cb.R(a, z, m, v) - cb.R(m, i, j, v) * cb.R(a, z, w, m);
    out.at(ix) = r;
  }
  return report_from("semisymmetry", out);
}

std::vector<IdentityReport> threeD_reconstruct(const FrameManifold& f,
                                               const ParacontactStructure& s,
                                               const CurvatureBundle& cb, bool qps) {
  const int d = f.dim;
  if (d != 3)
    throw WrongDimensionError("3-dimensional reconstruction needs dim 3, got " +
                              std::to_string(d));
  const Rational half(1, 2);
  std::vector<IdentityReport> out;

  Tensor e25(1, 3, d);
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          Rational model = f.g(j, k) * cb.Q(a, i) - f.g(i, k) * cb.Q(a, j) +
                           cb.Ric(j, k) * kron(a, i) - cb.Ric(i, k) * kron(a, j) -
                           cb.scal * half * (f.g(j, k) * kron(a, i) - f.g(i, k) * kron(a, j));
          e25(a, i, j, k) = cb.R(a, i, j, k) - model;
        }
  out.push_back(report_from("eq25", e25));

  if (!qps) return out;

  const Rational ca = (cb.scal + 2) * half;
  const Rational cbeta = (cb.scal + 6) * half;
  Tensor e27(0, 2, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      e27(j, k) = cb.Ric(j, k) - ca * f.g(j, k) + cbeta * s.eta[j] * s.eta[k];
  out.push_back(report_from("eq27", e27));

  const Rational c4 = (cb.scal + 4) * half;
  Tensor e28(1, 3, d);
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          Rational model =
              c4 * (f.g(j, k) * kron(a, i) - f.g(i, k) * kron(a, j)) -
              cbeta * (f.g(j, k) * s.eta[i] * s.xi[a] - f.g(i, k) * s.eta[j] * s.xi[a] +
                       s.eta[j] * s.eta[k] * kron(a, i) - s.eta[i] * s.eta[k] * kron(a, j));
          e28(a, i, j, k) = cb.R(a, i, j, k) - model;
        }
  out.push_back(report_from("eq28", e28));
  return out;
}

IdentityReport local_symmetry_test(const Tensor& nablaR) {
  return report_from("local_symmetry", nablaR);
}

IdentityReport local_phi_symmetry_test(const ParacontactStructure& s, const Tensor& nablaR) {
  const int d = s.base.dim;
  Tensor h(1, 1, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Rational r(0);
      for (int m = 0; m < d; ++m) r += s.phi(a, m) * s.phi(m, b);
      h(a, b) = r;
    }
  Tensor t = contract_slot(nablaR, h, 0);
  for (int slot = 1; slot <= 4; ++slot) t = contract_slot(t, h, slot);
  return report_from("local_phi_symmetry", t);
}

IdentityReport eta_parallel_ricci_test(const ParacontactStructure& s, const Tensor& nablaRic) {
  const int d = s.base.dim;
  Tensor out(0, 3, d);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        Rational r(0);
        for (int p = 0; p < d; ++p) {
          if (s.phi(p, y).is_zero()) continue;
          for (int q = 0; q < d; ++q) r += nablaRic(x, p, q) * s.phi(p, y) * s.phi(q, z);
        }
        out(x, y, z) = r;
      }
  return report_from("eta_parallel_ricci", out);
}

IdentityReport cyclic_parallel_ricci_test(const Tensor& nablaRic) {
  const int d = nablaRic.dim();
  Tensor out(0, 3, d);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z)
        out(x, y, z) = nablaRic(x, y, z) + nablaRic(y, z, x) + nablaRic(z, x, y);
  return report_from("eq39", out);
}

}  // namespace paracurv
