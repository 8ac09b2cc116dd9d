#pragma once

#include <optional>

#include "paracurv/frame.hpp"

namespace paracurv {

/// The triple (phi, xi, eta) as constant tensors on a frame.
/// phi(a,b) is component a of phi(E_b); xi and eta are component lists.
struct ParacontactStructure {
  FrameManifold base;
  Tensor phi;  // (1,1)
  Vec xi;
  Vec eta;
};

Vec apply_phi(const ParacontactStructure& s, const Vec& v);
Rational eta_of(const ParacontactStructure& s, const Vec& v);

/// One verified condition: pass, or the first failing index tuple with its
/// exact residual.
struct Flag {
  bool pass = true;
  std::optional<Witness> witness;
};

/// Structure-axiom checks: phi(xi) = 0, eta o phi = 0, eta(xi) = 1,
/// phi^2 = id - eta (x) xi, compatibility g(phi X, phi Y) = -g(X,Y) +
/// eta(X)eta(Y), eta = g(., xi), and metric signature (n+1, n).
struct AxiomReport {
  Flag phi_xi;
  Flag eta_phi;
  Flag eta_xi;
  Flag phi_square;
  Flag compatible;
  Flag eta_metric_dual;
  bool signature_ok = false;
  Signature sig;
  int n = 0;
  bool ok() const {
    return phi_xi.pass && eta_phi.pass && eta_xi.pass && phi_square.pass && compatible.pass &&
           eta_metric_dual.pass && signature_ok;
  }
};

/// Throws EvenDimensionError when the frame dimension is even.
AxiomReport check_axioms(const ParacontactStructure& s);

/// d eta as a constant 2-form: d eta(E_i, E_j) = -1/2 eta([E_i, E_j]).
Tensor d_eta(const ParacontactStructure& s);

/// N1 = [phi, phi] - 2 d eta (x) xi; the structure is normal iff N1 = 0.
struct NormalityReport {
  Tensor n1;  // (1,2)
  bool normal = false;
  std::optional<Witness> witness;
};
NormalityReport nijenhuis_normality(const ParacontactStructure& s);

/// Lie derivatives along xi of g, phi and eta; all three vanish on
/// quasi-para-Sasakian structures.
struct LieReport {
  Tensor lie_g;    // (0,2)
  Tensor lie_phi;  // (1,1)
  Tensor lie_eta;  // (0,1)
  Flag g_zero, phi_zero, eta_zero;
};
LieReport lie_derivatives_along_xi(const ParacontactStructure& s, const Connection& conn);

/// Full classification by exhaustive basis checks. Each flag carries the
/// first failing index tuple. Conventions per flag:
///   paracontact_metric_defn21:  g(X, phi Y) =  d eta(X, Y)
///   paracontact_metric_neg:     d eta(X, Y) = -g(X, phi Y)
///   k_paracontact:              Lie_xi g = 0 (xi Killing)
///   para_sasakian:              (nabla_X phi)Y = -g(X,Y) xi + eta(Y) X
///   quasi_para_sasakian:        (nabla_X phi)Y =  g(X,Y) xi - eta(Y) X
///   nabla_xi_is_phi:            nabla_X xi = phi X
///   normal:                     N1 = 0
struct ClassificationReport {
  Flag almost_paracontact;
  Flag compatible_metric;
  Flag signature_ok;
  Flag paracontact_metric_defn21;
  Flag paracontact_metric_neg;
  Flag k_paracontact;
  Flag para_sasakian;
  Flag quasi_para_sasakian;
  Flag nabla_xi_is_phi;
  Flag normal;
  Signature sig;
  int n = 0;
  bool qps() const { return quasi_para_sasakian.pass; }
};

/// Requires conn = levi_civita(s.base). Throws EvenDimensionError.
ClassificationReport classify(const ParacontactStructure& s, const Connection& conn);

}  // namespace paracurv
