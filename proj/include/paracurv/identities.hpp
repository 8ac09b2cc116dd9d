#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paracurv/paracontact.hpp"

namespace paracurv {

/// One named identity check. pass = true iff witness is empty.
struct IdentityReport {
  std::string name;
  bool pass = true;
  std::optional<Witness> witness;
};

struct EtaEinsteinFit {
  Rational a;
  Rational b;
  bool exact = false;
};

struct HolSectionalResult {
  std::optional<Rational> H;
  bool matches_model = false;
};

/// Structural checks valid for any Levi-Civita connection and its
/// curvature: torsion-freeness, nabla g = 0, both Bianchi identities, and
/// the R4 index symmetries. Keys: torsion_free, nabla_g_zero,
/// bianchi_first, bianchi_second, r4_symmetries.
std::vector<IdentityReport> verify_structural(const FrameManifold& f, const Connection& conn,
                                              const CurvatureBundle& cb, const Tensor& nablaR);

/// Curvature identities that hold on every quasi-para-Sasakian structure:
///   eq5:    R(X,Y)xi = eta(X)Y - eta(Y)X
///   eq5_1:  R(X,xi)Y = g(X,Y)xi - eta(Y)X
///   eq5_2:  Ric(X,xi) = -2n eta(X)
///   eq6:    K(X,xi) = -1 for basis X in Ker eta with g(X,X) != 0
///   eq7:    (nabla_Z R)(X,Y,xi) = -R(X,Y)phi Z + g(X,phi Z)Y - g(Y,phi Z)X
/// Throws NotQuasiParaSasakianError unless cls.qps().
std::vector<IdentityReport> verify_prop32(const ParacontactStructure& s,
                                          const CurvatureBundle& cb, const Tensor& nablaR,
                                          const ClassificationReport& cls);

/// phi-curvature identities on quasi-para-Sasakian structures:
///   eq10: R(X,Y)phiZ - phiR(X,Y)Z
///           = g(Y,Z)phiX - g(X,Z)phiY - g(Y,phiZ)X + g(X,phiZ)Y
///   eq11: R(phiX,phiY)Z
///           = -R(X,Y)Z - g(Y,Z)X + g(X,Z)Y + g(Y,phiZ)phiX - g(X,phiZ)phiY
/// Throws NotQuasiParaSasakianError unless cls.qps().
std::vector<IdentityReport> verify_prop51(const ParacontactStructure& s,
                                          const CurvatureBundle& cb,
                                          const ClassificationReport& cls);

/// Fits Ric = a g + b eta (x) eta: a from Ric(X,X)/g(X,X) on the first
/// non-null basis direction in Ker eta, b from Ric(xi,xi) = a + b; exact is
/// the componentwise verification. Throws NoNonNullHorizontalDirectionError.
EtaEinsteinFit eta_einstein_fit(const ParacontactStructure& s, const CurvatureBundle& cb);

/// Candidate c from the first nondegenerate basis plane; returns c iff
/// R4(X,Y,Z,W) = c (g(Y,Z)g(X,W) - g(X,Z)g(Y,W)) componentwise, else none.
std::optional<Rational> constant_curvature_test(const FrameManifold& f,
                                                const CurvatureBundle& cb);

/// The model curvature tensor of constant phi-para-holomorphic sectional
/// curvature H, as a (1,3) tensor:
///   4R(X,Y)Z = (H-3)(g(Y,Z)X - g(X,Z)Y)
///            + (H+1)(eta(X)eta(Z)Y - eta(Y)eta(Z)X + eta(Y)g(X,Z)xi
///                    - eta(X)g(Y,Z)xi + g(Y,phiZ)phiX - g(X,phiZ)phiY
///                    + 2g(phiX,Y)phiZ).
/// Meaningful on quasi-para-Sasakian structures.
Tensor phps_model(const ParacontactStructure& s, const Rational& H);

/// Candidate H = R4(X,phiX,X,phiX)/g(X,X)^2 from the first basis direction
/// in Ker eta with g(X,X) != 0; matches_model compares cb.R against
/// phps_model(H) exactly. Throws NotQuasiParaSasakianError and
/// DegenerateDirectionError.
HolSectionalResult detect_H(const ParacontactStructure& s, const CurvatureBundle& cb,
                            const ClassificationReport& cls);

/// Weyl conformal tensor; zero iff the metric is conformally flat (d >= 4).
/// Throws DimensionTooSmallError for d <= 3.
Tensor weyl_tensor(const FrameManifold& f, const CurvatureBundle& cb);

/// PC-Bochner tensor with k = -(scal - 2n)/(2n + 2), plus its zero flag.
/// Throws NotQuasiParaSasakianError unless cls.qps().
struct PcBochnerResult {
  Tensor B;  // (0,4)
  bool zero = false;
  std::optional<Witness> witness;
};
PcBochnerResult pc_bochner(const ParacontactStructure& s, const CurvatureBundle& cb,
                           const ClassificationReport& cls);

/// R(E_i,E_j) acting as a derivation on a (0,2) tensor:
///   (R(X,Y).T)(U,V) = -T(R(X,Y)U, V) - T(U, R(X,Y)V), indexed (i,j,u,v).
Tensor derivation_action(const CurvatureBundle& cb, const Tensor& t);

/// R(X,Y).Ric = 0, exhaustive over basis pairs. Key: ricci_semisymmetry.
IdentityReport check_ricci_semisymmetry(const CurvatureBundle& cb);

/// Nomizu's condition R(X,Y).R = 0 with R(X,Y) acting as a derivation on
/// all four slots of R. Key: semisymmetry.
IdentityReport check_semisymmetry(const CurvatureBundle& cb);

/// Three-dimensional reconstruction identities. eq25 is the generic 3D
/// curvature decomposition through Q and scal; when qps is set, also checks
/// the Ricci form eq27 with coefficients (scal+2)/2, -(scal+6)/2 and the
/// curvature form eq28. Throws WrongDimensionError unless d = 3.
std::vector<IdentityReport> threeD_reconstruct(const FrameManifold& f,
                                               const ParacontactStructure& s,
                                               const CurvatureBundle& cb, bool qps);

/// nabla R = 0. Key: local_symmetry.
IdentityReport local_symmetry_test(const Tensor& nablaR);

/// phi^2((nabla_{hW} R)(hX, hY) hZ) = 0 with h = phi^2 the projection onto
/// Ker eta along xi. Key: local_phi_symmetry.
IdentityReport local_phi_symmetry_test(const ParacontactStructure& s, const Tensor& nablaR);

/// (nabla_X Ric)(phi Y, phi Z) = 0. Key: eta_parallel_ricci.
IdentityReport eta_parallel_ricci_test(const ParacontactStructure& s, const Tensor& nablaRic);

/// (nabla_X Ric)(Y,Z) + (nabla_Y Ric)(Z,X) + (nabla_Z Ric)(X,Y) = 0.
/// Key: eq39.
IdentityReport cyclic_parallel_ricci_test(const Tensor& nablaRic);

}  // namespace paracurv
