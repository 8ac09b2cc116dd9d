#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "paracurv/catalog.hpp"
#include "paracurv/errors.hpp"
#include "paracurv/frame.hpp"
#include "paracurv/identities.hpp"

using namespace paracurv;

namespace {

// gamma entries as (k, i, j, value), 0-based: nabla_{E_i} E_j = gamma(k,i,j) E_k
struct GammaEntry {
  int k, i, j;
  Rational v;
};

void check_gamma(const Connection& conn, int d, const std::vector<GammaEntry>& table) {
  Tensor want(1, 2, d);
  for (const auto& e : table) want(e.k, e.i, e.j) = e.v;
  CHECK(conn.gamma == want);
}

}  // namespace

TEST_CASE("Koszul table of the curvature -1 model") {
  const FrameManifold f = frame_of(builtin("paper_example"));
  const Connection conn = levi_civita(f);
  // nabla_{E1}E2 = E3, nabla_{E1}E3 = E2, nabla_{E2}E1 = -E3,
  // nabla_{E2}E3 = E1, nabla_{E3}E1 = -E2, nabla_{E3}E2 = -E1
  check_gamma(conn, 3,
              {{2, 0, 1, 1},
               {1, 0, 2, 1},
               {2, 1, 0, -1},
               {0, 1, 2, 1},
               {1, 2, 0, -1},
               {0, 2, 1, -1}});
}

TEST_CASE("Koszul table of the heisenberg-type model") {
  const FrameManifold f = frame_of(builtin("para_heisenberg"));
  const Connection conn = levi_civita(f);
  // nabla_{E1}E2 = E3, nabla_{E2}E1 = -E3, nabla_{E1}E3 = nabla_{E3}E1 = E2,
  // nabla_{E2}E3 = nabla_{E3}E2 = E1
  check_gamma(conn, 3,
              {{2, 0, 1, 1},
               {2, 1, 0, -1},
               {1, 0, 2, 1},
               {1, 2, 0, 1},
               {0, 1, 2, 1},
               {0, 2, 1, 1}});
}

TEST_CASE("abelian frame is flat") {
  const FrameManifold f = frame_of(builtin("abelian_flat"));
  const Connection conn = levi_civita(f);
  CHECK(conn.gamma.is_zero());
  const CurvatureBundle cb = curvature_bundle(f, conn);
  CHECK(cb.R.is_zero());
  CHECK(cb.scal.is_zero());
}

TEST_CASE("bracket, pairing and basis accessors") {
  const FrameManifold f = frame_of(builtin("paper_example"));
  const Vec e1 = f.basis(0), e2 = f.basis(1), e3 = f.basis(2);
  CHECK(f.bracket(e1, e2) == Vec{0, 0, 2});
  CHECK(f.bracket(e2, e1) == Vec{0, 0, -2});
  CHECK(f.bracket(e1, e3) == Vec{0, 2, 0});
  CHECK(f.bracket(e2, e3) == Vec{2, 0, 0});
  CHECK(f.pair(e2, e2) == Rational(-1));
  CHECK(f.pair(e1, e3).is_zero());

  Vec u{1, 2, 0}, v{0, 1, -1};
  CHECK(f.pair(u, v) == Rational(-2));
}

TEST_CASE("validation flags antisymmetry and Jacobi violations") {
  {
    Tensor c(1, 2, 3);
    c(2, 0, 1) = Rational(1);  // no compensating c(2,1,0)
    FrameManifold f(3, c, SymMatrix::identity(3));
    const FrameValidation v = validate_frame(f);
    CHECK_FALSE(v.antisymmetry_ok);
    REQUIRE(v.antisymmetry_witness.has_value());
    CHECK(*v.antisymmetry_witness == std::vector<int>{2, 0, 1});
  }
  {
    // [E1,E2]=E3, [E1,E3]=E1 breaks Jacobi on (E1,E2,E3)
    Tensor c(1, 2, 3);
    c(2, 0, 1) = Rational(1);
    c(2, 1, 0) = Rational(-1);
    c(0, 0, 2) = Rational(1);
    c(0, 2, 0) = Rational(-1);
    FrameManifold f(3, c, SymMatrix::identity(3));
    const FrameValidation v = validate_frame(f);
    CHECK(v.antisymmetry_ok);
    CHECK_FALSE(v.jacobi_ok);
    CHECK(v.jacobi_witness.has_value());
  }
  {
    Tensor c(1, 2, 2);
    FrameManifold f(2, c, SymMatrix::diag({Rational(1), Rational(0)}));
    CHECK_FALSE(validate_frame(f).metric_nondegenerate);
  }
  CHECK(validate_frame(frame_of(builtin("paper_example"))).ok());
}

TEST_CASE("covariant derivative of the metric vanishes, of eta gives phi") {
  const ModelSpec m = builtin("paper_example");
  const FrameManifold f = frame_of(m);
  const ParacontactStructure s = structure_of(m);
  const Connection conn = levi_civita(f);

  Tensor g_tensor(0, 2, f.dim);
  for (int i = 0; i < f.dim; ++i)
    for (int j = 0; j < f.dim; ++j) g_tensor(i, j) = f.g(i, j);
  CHECK(covariant_derivative(f, conn, g_tensor).is_zero());

  // (nabla_Z eta)(X) = g(phi Z, X) on this model, since nabla xi = phi
  Tensor eta_tensor(0, 1, f.dim);
  for (int i = 0; i < f.dim; ++i) eta_tensor(i) = s.eta[i];
  const Tensor de = covariant_derivative(f, conn, eta_tensor);
  for (int z = 0; z < f.dim; ++z)
    for (int x = 0; x < f.dim; ++x) {
      const Vec pz = apply_phi(s, f.basis(z));
      CHECK(de(z, x) == f.pair(pz, f.basis(x)));
    }
}

TEST_CASE("sectional curvature matches the frozen values") {
  {
    const FrameManifold f = frame_of(builtin("paper_example"));
    const CurvatureBundle cb = curvature_bundle(f, levi_civita(f));
    CHECK(sectional_curvature(f, cb, f.basis(0), f.basis(1)) == Rational(-1));
    CHECK(sectional_curvature(f, cb, f.basis(0), f.basis(2)) == Rational(-1));
    CHECK(sectional_curvature(f, cb, f.basis(1), f.basis(2)) == Rational(-1));
  }
  {
    const FrameManifold f = frame_of(builtin("para_heisenberg"));
    const CurvatureBundle cb = curvature_bundle(f, levi_civita(f));
    CHECK(cb.R(0, 0, 1, 1) == Rational(-3));  // R(E1,E2)E2 = -3 E1
    CHECK(sectional_curvature(f, cb, f.basis(0), f.basis(1)) == Rational(3));
    CHECK(sectional_curvature(f, cb, f.basis(0), f.basis(2)) == Rational(-1));
    CHECK(sectional_curvature(f, cb, f.basis(1), f.basis(2)) == Rational(-1));

    // null plane: g(E1+E2, E1+E2) = 0
    Vec x{1, 1, 0};
    CHECK_THROWS_AS(sectional_curvature(f, cb, x, f.basis(2)), DegeneratePlaneError);
  }
}

TEST_CASE("structural identities hold on randomized nilpotent and solvable frames") {
  std::mt19937 rng(814u);
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  std::uniform_int_distribution<int> family(0, 1);

  int done = 0;
  while (done < 25) {
    const int d = 3;
    Tensor c(1, 2, d);
    const Rational lambda(num(rng), den(rng));
    if (family(rng) == 0) {
      // [E1,E2] = lambda E3: two-step nilpotent, Jacobi is automatic
      c(2, 0, 1) = lambda;
      c(2, 1, 0) = -lambda;
    } else {
      // [E1,E2] = lambda E2: solvable
      c(1, 0, 1) = lambda;
      c(1, 1, 0) = -lambda;
    }
    SymMatrix g(d);
    for (int i = 0; i < d; ++i) g.set(i, i, Rational(num(rng), den(rng)));
    if (det(g).is_zero()) continue;

    FrameManifold f(d, c, g);
    REQUIRE(validate_frame(f).ok());
    const Connection conn = levi_civita(f);
    const CurvatureBundle cb = curvature_bundle(f, conn);
    const Tensor nablaR = nabla_curvature(f, conn, cb);
    for (const auto& rep : verify_structural(f, conn, cb, nablaR)) {
      INFO(rep.name);
      CHECK(rep.pass);
    }
    ++done;
  }
}

TEST_CASE("curvature derivation kills the metric on every builtin") {
  for (const auto& name : builtin_names()) {
    const FrameManifold f = frame_of(builtin(name));
    const CurvatureBundle cb = curvature_bundle(f, levi_civita(f));
    Tensor g_tensor(0, 2, f.dim);
    for (int i = 0; i < f.dim; ++i)
      for (int j = 0; j < f.dim; ++j) g_tensor(i, j) = f.g(i, j);
    CHECK(derivation_action(cb, g_tensor).is_zero());
  }
}
