#include "paracurv/paracontact.hpp"

#include "paracurv/errors.hpp"

namespace paracurv {

namespace {

Flag flag_from(const Tensor& residual) {
  auto w = residual.first_nonzero();
  return Flag{!w.has_value(), std::move(w)};
}

Flag flag_from_vec(const std::vector<Rational>& residual) {
  for (int i = 0; i < (int)residual.size(); ++i)
    if (!residual[i].is_zero()) return Flag{false, Witness{{i}, residual[i]}};
  return Flag{};
}

// g(E_i, phi E_j)
Rational g_phi(const ParacontactStructure& s, int i, int j) {
  Rational r(0);
  for (int m = 0; m < s.base.dim; ++m) r += s.base.g(i, m) * s.phi(m, j);
  return r;
}

}  // namespace

Vec apply_phi(const ParacontactStructure& s, const Vec& v) {
  const int d = s.base.dim;
  Vec out(d, Rational(0));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) out[a] += s.phi(a, b) * v[b];
  return out;
}

Rational eta_of(const ParacontactStructure& s, const Vec& v) {
  Rational r(0);
  for (int i = 0; i < s.base.dim; ++i) r += s.eta[i] * v[i];
  return r;
}

AxiomReport check_axioms(const ParacontactStructure& s) {
  const int d = s.base.dim;
  if (d % 2 == 0)
    throw EvenDimensionError("almost paracontact structures need odd dimension, got " +
                             std::to_string(d));
  AxiomReport rep;
  rep.n = (d - 1) / 2;

  rep.phi_xi = flag_from_vec(apply_phi(s, s.xi));

  std::vector<Rational> eta_phi(d, Rational(0));
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) eta_phi[j] += s.eta[i] * s.phi(i, j);
  rep.eta_phi = flag_from_vec(eta_phi);

  const Rational exi = eta_of(s, s.xi) - 1;
  if (!exi.is_zero()) rep.eta_xi = Flag{false, Witness{{}, exi}};

  Tensor sq(1, 1, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Rational r(0);
      for (int m = 0; m < d; ++m) r += s.phi(a, m) * s.phi(m, b);
      if (a == b) r -= 1;
      r += s.eta[b] * s.xi[a];
      sq(a, b) = r;
    }
  rep.phi_square = flag_from(sq);

  Tensor compat(0, 2, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Rational r(0);
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) r += s.phi(p, i) * s.phi(q, j) * s.base.g(p, q);
      compat(i, j) = r + s.base.g(i, j) - s.eta[i] * s.eta[j];
    }
  rep.compatible = flag_from(compat);

  std::vector<Rational> dual(d, Rational(0));
  for (int i = 0; i < d; ++i) {
    dual[i] = s.eta[i];
    for (int j = 0; j < d; ++j) dual[i] -= s.base.g(i, j) * s.xi[j];
  }
  rep.eta_metric_dual = flag_from_vec(dual);

  rep.sig = signature(s.base.g);
  rep.signature_ok = rep.sig == Signature{rep.n + 1, rep.n};
  return rep;
}

Tensor d_eta(const ParacontactStructure& s) {
  const int d = s.base.dim;
  const Rational neghalf(-1, 2);
  Tensor de(0, 2, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Rational r(0);
      for (int k = 0; k < d; ++k) r += s.eta[k] * s.base.c(k, i, j);
      de(i, j) = r * neghalf;
    }
  return de;
}

NormalityReport nijenhuis_normality(const ParacontactStructure& s) {
  const int d = s.base.dim;
  const Tensor de = d_eta(s);
  Tensor n1(1, 2, d);
  for (int i = 0; i < d; ++i) {
    const Vec ei = s.base.basis(i);
    const Vec pi = apply_phi(s, ei);
    for (int j = 0; j < d; ++j) {
      const Vec ej = s.base.basis(j);
      const Vec pj = apply_phi(s, ej);
      const Vec t1 = apply_phi(s, apply_phi(s, s.base.bracket(ei, ej)));
      const Vec t2 = s.base.bracket(pi, pj);
      const Vec t3 = apply_phi(s, s.base.bracket(pi, ej));
      const Vec t4 = apply_phi(s, s.base.bracket(ei, pj));
      for (int a = 0; a < d; ++a)
        n1(a, i, j) = t1[a] + t2[a] - t3[a] - t4[a] - 2 * de(i, j) * s.xi[a];
    }
  }
  auto w = n1.first_nonzero();
  const bool normal = !w.has_value();
  return NormalityReport{std::move(n1), normal, std::move(w)};
}

LieReport lie_derivatives_along_xi(const ParacontactStructure& s, const Connection& conn) {
  const int d = s.base.dim;

  // nabla_{E_i} xi, one column per i
  Tensor nxi(1, 1, d);
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < d; ++i) {
      Rational r(0);
      for (int j = 0; j < d; ++j) r += conn.gamma(a, i, j) * s.xi[j];
      nxi(a, i) = r;
    }

  Tensor lg(0, 2, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Rational r(0);
      for (int a = 0; a < d; ++a) r += nxi(a, i) * s.base.g(a, j) + s.base.g(i, a) * nxi(a, j);
      lg(i, j) = r;
    }

  Tensor lphi(1, 1, d);
  for (int b = 0; b < d; ++b) {
    const Vec eb = s.base.basis(b);
    const Vec t1 = s.base.bracket(s.xi, apply_phi(s, eb));
    const Vec t2 = apply_phi(s, s.base.bracket(s.xi, eb));
    for (int a = 0; a < d; ++a) lphi(a, b) = t1[a] - t2[a];
  }

  Tensor leta(0, 1, d);
  for (int b = 0; b < d; ++b) {
    const Vec eb = s.base.basis(b);
    leta(b) = -eta_of(s, s.base.bracket(s.xi, eb));
  }

  LieReport rep{std::move(lg), std::move(lphi), std::move(leta), {}, {}, {}};
  rep.g_zero = flag_from(rep.lie_g);
  rep.phi_zero = flag_from(rep.lie_phi);
  rep.eta_zero = flag_from(rep.lie_eta);
  return rep;
}

ClassificationReport classify(const ParacontactStructure& s, const Connection& conn) {
  const int d = s.base.dim;
  const AxiomReport ax = check_axioms(s);

  ClassificationReport rep;
  rep.n = ax.n;
  rep.sig = ax.sig;

  rep.almost_paracontact = Flag{};
  for (const Flag* f : {&ax.phi_xi, &ax.eta_phi, &ax.eta_xi, &ax.phi_square})
    if (!f->pass) {
      rep.almost_paracontact = *f;
      break;
    }
  rep.compatible_metric = ax.compatible;
  rep.signature_ok = Flag{ax.signature_ok, std::nullopt};

  const Tensor de = d_eta(s);
  Tensor defn21(0, 2, d), neg(0, 2, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Rational gp = g_phi(s, i, j);
      defn21(i, j) = gp - de(i, j);
      neg(i, j) = de(i, j) + gp;
    }
  rep.paracontact_metric_defn21 = flag_from(defn21);
  rep.paracontact_metric_neg = flag_from(neg);

  const LieReport lie = lie_derivatives_along_xi(s, conn);
  rep.k_paracontact = lie.g_zero;

  const Tensor nabla_phi = covariant_derivative(s.base, conn, s.phi);  // (a, z, b)
  Tensor ps(1, 2, d), qps(1, 2, d);
  for (int a = 0; a < d; ++a)
    for (int z = 0; z < d; ++z)
      for (int b = 0; b < d; ++b) {
        const Rational model = s.base.g(z, b) * s.xi[a] - s.eta[b] * Rational(a == z ? 1 : 0);
        ps(a, z, b) = nabla_phi(a, z, b) + model;
        qps(a, z, b) = nabla_phi(a, z, b) - model;
      }
  rep.para_sasakian = flag_from(ps);
  rep.quasi_para_sasakian = flag_from(qps);

  Tensor nxi(1, 1, d);
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < d; ++i) {
      Rational r(0);
      for (int j = 0; j < d; ++j) r += conn.gamma(a, i, j) * s.xi[j];
      nxi(a, i) = r - s.phi(a, i);
    }
  rep.nabla_xi_is_phi = flag_from(nxi);

  NormalityReport nr = nijenhuis_normality(s);
  rep.normal = Flag{nr.normal, std::move(nr.witness)};
  return rep;
}

}  // namespace paracurv
