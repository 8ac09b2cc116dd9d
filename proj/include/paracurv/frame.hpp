#pragma once

#include <optional>
#include <vector>

#include "paracurv/sym_matrix.hpp"
#include "paracurv/tensor.hpp"

namespace paracurv {

using Vec = std::vector<Rational>;

/// A Lie algebra with a fixed basis E_1..E_d and a constant pseudo-metric:
/// the bracket is [E_i, E_j] = c(k,i,j) E_k and g(i,j) pairs basis vectors.
/// Every geometric object downstream is left-invariant, so its frame
/// components are constants and all computations stay in exact arithmetic.
struct FrameManifold {
  int dim;
  Tensor c;     // (1,2), c(k,i,j)
  SymMatrix g;  // metric on the frame

  FrameManifold(int d, Tensor structure_constants, SymMatrix metric);

  /// [u, v] for frame-component vectors.
  Vec bracket(const Vec& u, const Vec& v) const;
  /// g(u, v).
  Rational pair(const Vec& u, const Vec& v) const;
  /// i-th basis vector as a component vector.
  Vec basis(int i) const;
};

struct FrameValidation {
  bool antisymmetry_ok = true;
  std::optional<std::vector<int>> antisymmetry_witness;  // (k, i, j)
  bool jacobi_ok = true;
  std::optional<std::vector<int>> jacobi_witness;  // (n, i, j, l)
  bool metric_nondegenerate = true;
  bool ok() const { return antisymmetry_ok && jacobi_ok && metric_nondegenerate; }
};

/// Checks bracket antisymmetry, the Jacobi identity and det(g) != 0,
/// reporting the first violated index tuple.
FrameValidation validate_frame(const FrameManifold& f);

/// Connection coefficients: nabla_{E_i} E_j = gamma(k,i,j) E_k.
struct Connection {
  Tensor gamma;  // (1,2)
};

/// Levi-Civita connection from the frame-constant Koszul formula
///   2 g(nabla_{E_i} E_j, E_k) = g([E_i,E_j],E_k) - g([E_j,E_k],E_i) + g([E_k,E_i],E_j).
/// The result is torsion-free and metric.
Connection levi_civita(const FrameManifold& f);

/// Covariant derivative of a frame-constant tensor. The result gains one
/// covariant slot, inserted first among the covariant indices: for a
/// (p,q) tensor T, (nabla T)(Z; X_1..X_q) = (nabla_Z T)(X_1..X_q).
Tensor covariant_derivative(const FrameManifold& f, const Connection& conn, const Tensor& t);

/// Riemann tensor and its contractions. Conventions:
///   R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X,Y]} Z,
///   R(a,i,j,k) = component a of R(E_i,E_j)E_k,
///   R4(i,j,k,l) = g(R(E_i,E_j)E_k, E_l),
///   Ric(X,Y) = trace(Z -> R(Z,X)Y),   g(QX,Y) = Ric(X,Y),
///   scal = trace_g(Ric).
struct CurvatureBundle {
  Tensor R;    // (1,3)
  Tensor R4;   // (0,4)
  Tensor Ric;  // (0,2)
  Tensor Q;    // (1,1)
  Rational scal;
};

CurvatureBundle curvature_bundle(const FrameManifold& f, const Connection& conn);

/// Assembles a bundle from given fully covariant curvature data; used to
/// build synthetic or deliberately corrupted bundles in tests and for the
/// space-form construction. No identities are assumed of r4.
CurvatureBundle bundle_from_r4(const FrameManifold& f, const Tensor& r4);

/// K(X,Y) = R4(X,Y,Y,X) / (g(X,X)g(Y,Y) - g(X,Y)^2).
/// Throws DegeneratePlaneError when the plane is degenerate.
Rational sectional_curvature(const FrameManifold& f, const CurvatureBundle& cb, const Vec& x,
                             const Vec& y);

/// (1,4) tensor (nabla_Z R)(X,Y)W, derivative slot first among the
/// covariant indices.
Tensor nabla_curvature(const FrameManifold& f, const Connection& conn, const CurvatureBundle& cb);

/// R4 evaluated on four component vectors.
Rational r4_eval(const Tensor& r4, const Vec& x, const Vec& y, const Vec& z, const Vec& w);

}  // namespace paracurv
