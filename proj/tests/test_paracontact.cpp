#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paracurv/catalog.hpp"
#include "paracurv/errors.hpp"
#include "paracurv/paracontact.hpp"

using namespace paracurv;

namespace {

ParacontactStructure structure(const std::string& name) {
  return structure_of(builtin(name));
}

ClassificationReport classify_builtin(const std::string& name) {
  ParacontactStructure s = structure(name);
  return classify(s, levi_civita(s.base));
}

}  // namespace

TEST_CASE("structure axioms hold on every builtin") {
  for (const auto& name : builtin_names()) {
    INFO(name);
    const AxiomReport rep = check_axioms(structure(name));
    CHECK(rep.ok());
    CHECK(rep.n == 1);
    CHECK(rep.sig.positive == 2);
    CHECK(rep.sig.negative == 1);
  }
}

TEST_CASE("phi application and eta evaluation") {
  const ParacontactStructure s = structure("paper_example");
  CHECK(apply_phi(s, s.base.basis(0)) == Vec{0, 1, 0});
  CHECK(apply_phi(s, s.base.basis(1)) == Vec{1, 0, 0});
  CHECK(apply_phi(s, s.xi) == Vec{0, 0, 0});
  CHECK(eta_of(s, s.xi) == Rational(1));
  CHECK(eta_of(s, s.base.basis(0)).is_zero());
  // phi^2 = id - eta (x) xi on a mixed vector
  Vec v{3, Rational(-1, 2), 5};
  const Vec ppv = apply_phi(s, apply_phi(s, v));
  CHECK(ppv == Vec{3, Rational(-1, 2), 0});
}

TEST_CASE("even-dimensional frames are rejected") {
  Tensor c(1, 2, 2);
  FrameManifold f(2, c, SymMatrix::diag({Rational(1), Rational(-1)}));
  Tensor phi(1, 1, 2);
  ParacontactStructure s{f, phi, Vec{0, 1}, Vec{0, 1}};
  CHECK_THROWS_AS(check_axioms(s), EvenDimensionError);
}

TEST_CASE("d eta is the expected 2-form") {
  for (const char* name : {"paper_example", "para_heisenberg"}) {
    const Tensor de = d_eta(structure(name));
    INFO(name);
    CHECK(de(0, 1) == Rational(-1));  // d eta(E1,E2) = -1/2 eta([E1,E2]) = -1
    CHECK(de(1, 0) == Rational(1));
    CHECK(de(0, 2).is_zero());
    CHECK(de(1, 2).is_zero());
  }
  CHECK(d_eta(structure("abelian_flat")).is_zero());
}

TEST_CASE("all builtins are normal") {
  for (const auto& name : builtin_names()) {
    INFO(name);
    const NormalityReport rep = nijenhuis_normality(structure(name));
    CHECK(rep.normal);
    CHECK(rep.n1.is_zero());
  }
}

TEST_CASE("normality fails when phi twists against a nonabelian bracket") {
  // paper_example bracket with the heisenberg phi swapped onto E1 <-> E3
  ModelSpec m = builtin("paper_example");
  Tensor phi(1, 1, 3);
  phi(2, 0) = Rational(1);
  phi(0, 2) = Rational(1);
  m.phi = phi;
  m.xi = Vec{0, 1, 0};
  m.eta = Vec{0, 1, 0};
  const ParacontactStructure s = structure_of(m);
  const NormalityReport rep = nijenhuis_normality(s);
  CHECK_FALSE(rep.normal);
  CHECK(rep.witness.has_value());
}

TEST_CASE("classification of the curvature -1 model") {
  const ClassificationReport c = classify_builtin("paper_example");
  CHECK(c.almost_paracontact.pass);
  CHECK(c.compatible_metric.pass);
  CHECK(c.signature_ok.pass);
  CHECK_FALSE(c.paracontact_metric_defn21.pass);
  CHECK(c.paracontact_metric_neg.pass);
  CHECK(c.k_paracontact.pass);
  CHECK_FALSE(c.para_sasakian.pass);
  CHECK(c.quasi_para_sasakian.pass);
  CHECK(c.nabla_xi_is_phi.pass);
  CHECK(c.normal.pass);
  CHECK(c.qps());
  CHECK(c.n == 1);

  // the sign convention is the whole point: d eta(E1,E2) = -1 but g(E1,phi E2) = 1
  REQUIRE(c.paracontact_metric_defn21.witness.has_value());
  CHECK(c.paracontact_metric_defn21.witness->indices == std::vector<int>{0, 1});
}

TEST_CASE("classification of the heisenberg-type model") {
  const ClassificationReport c = classify_builtin("para_heisenberg");
  CHECK(c.quasi_para_sasakian.pass);
  CHECK_FALSE(c.para_sasakian.pass);
  CHECK_FALSE(c.paracontact_metric_defn21.pass);
  CHECK(c.paracontact_metric_neg.pass);
  CHECK(c.k_paracontact.pass);
  CHECK(c.nabla_xi_is_phi.pass);
  CHECK(c.normal.pass);
}

TEST_CASE("classification of the flat abelian model") {
  const ClassificationReport c = classify_builtin("abelian_flat");
  CHECK(c.almost_paracontact.pass);
  CHECK(c.compatible_metric.pass);
  CHECK_FALSE(c.paracontact_metric_defn21.pass);
  CHECK_FALSE(c.paracontact_metric_neg.pass);
  CHECK(c.k_paracontact.pass);  // nabla xi = 0, so xi is Killing
  CHECK_FALSE(c.quasi_para_sasakian.pass);
  CHECK_FALSE(c.para_sasakian.pass);
  CHECK_FALSE(c.nabla_xi_is_phi.pass);
  CHECK(c.normal.pass);
}

TEST_CASE("an identity metric is not compatible with this phi") {
  ModelSpec m = builtin("paper_example");
  m.metric = SymMatrix::identity(3);
  const ParacontactStructure s = structure_of(m);
  const ClassificationReport c = classify(s, levi_civita(s.base));
  CHECK_FALSE(c.compatible_metric.pass);
  REQUIRE(c.compatible_metric.witness.has_value());
  // g(phi E1, phi E1) + g(E1,E1) = 2 at (E1,E1)
  CHECK(c.compatible_metric.witness->indices == std::vector<int>{0, 0});
  CHECK(c.compatible_metric.witness->residual == Rational(2));
}

TEST_CASE("Lie derivatives along xi vanish on the QPS builtins") {
  for (const char* name : {"paper_example", "para_heisenberg"}) {
    INFO(name);
    ParacontactStructure s = structure(name);
    const LieReport rep = lie_derivatives_along_xi(s, levi_civita(s.base));
    CHECK(rep.g_zero.pass);
    CHECK(rep.phi_zero.pass);
    CHECK(rep.eta_zero.pass);
    CHECK(rep.lie_g.is_zero());
    CHECK(rep.lie_phi.is_zero());
    CHECK(rep.lie_eta.is_zero());
  }
}

TEST_CASE("a non-Killing direction shows up in Lie_xi g") {
  // E1 is not Killing on the heisenberg-type frame
  ModelSpec m = builtin("para_heisenberg");
  m.xi = Vec{1, 0, 0};
  m.eta = Vec{1, 0, 0};
  ParacontactStructure s = structure_of(m);
  const LieReport rep = lie_derivatives_along_xi(s, levi_civita(s.base));
  CHECK_FALSE(rep.g_zero.pass);
  CHECK(rep.lie_g(1, 2) == Rational(-2));
}
