#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paracurv/catalog.hpp"
#include "paracurv/errors.hpp"
#include "paracurv/identities.hpp"

using namespace paracurv;

namespace {

struct Pipeline {
  ParacontactStructure s;
  Connection conn;
  ClassificationReport cls;
  CurvatureBundle cb;
  Tensor nablaR;
  Tensor nablaRic;

  explicit Pipeline(const std::string& name)
      : s(structure_of(builtin(name))),
        conn(levi_civita(s.base)),
        cls(classify(s, conn)),
        cb(curvature_bundle(s.base, conn)),
        nablaR(nabla_curvature(s.base, conn, cb)),
        nablaRic(covariant_derivative(s.base, conn, cb.Ric)) {}
};

void check_all_pass(const std::vector<IdentityReport>& reports,
                    const std::vector<std::string>& keys) {
  REQUIRE(reports.size() == keys.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    INFO(reports[i].name);
    CHECK(reports[i].name == keys[i]);
    CHECK(reports[i].pass);
  }
}

}  // namespace

TEST_CASE("curvature oracles for the constant curvature -1 model") {
  const Pipeline p("paper_example");
  CHECK(p.cb.scal == Rational(-6));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(p.cb.Ric(i, j) == Rational(-2) * p.s.base.g(i, j));

  const auto c = constant_curvature_test(p.s.base, p.cb);
  REQUIRE(c.has_value());
  CHECK(*c == Rational(-1));

  // R4 = -(g(j,k)g(i,w) - g(i,k)g(j,w)) componentwise
  const SymMatrix& g = p.s.base.g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int w = 0; w < 3; ++w)
          CHECK(p.cb.R4(i, j, k, w) == -(g(j, k) * g(i, w) - g(i, k) * g(j, w)));
}

TEST_CASE("curvature oracles for the heisenberg-type model") {
  const Pipeline p("para_heisenberg");
  CHECK(p.cb.scal == Rational(2));
  // Ric = 2g - 4 eta (x) eta
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(p.cb.Ric(i, j) ==
            Rational(2) * p.s.base.g(i, j) - Rational(4) * p.s.eta[i] * p.s.eta[j]);
  CHECK_FALSE(constant_curvature_test(p.s.base, p.cb).has_value());
}

TEST_CASE("structural suite passes on all builtins") {
  for (const auto& name : builtin_names()) {
    INFO(name);
    const Pipeline p(name);
    check_all_pass(verify_structural(p.s.base, p.conn, p.cb, p.nablaR),
                   {"torsion_free", "nabla_g_zero", "bianchi_first", "bianchi_second",
                    "r4_symmetries"});
  }
}

TEST_CASE("xi-curvature suite holds on the QPS builtins and rejects others") {
  for (const char* name : {"paper_example", "para_heisenberg"}) {
    INFO(name);
    const Pipeline p(name);
    check_all_pass(verify_prop32(p.s, p.cb, p.nablaR, p.cls),
                   {"eq5", "eq5_1", "eq5_2", "eq6", "eq7"});
    check_all_pass(verify_prop51(p.s, p.cb, p.cls), {"eq10", "eq11"});
  }
  const Pipeline q("abelian_flat");
  CHECK_THROWS_AS(verify_prop32(q.s, q.cb, q.nablaR, q.cls), NotQuasiParaSasakianError);
  CHECK_THROWS_AS(verify_prop51(q.s, q.cb, q.cls), NotQuasiParaSasakianError);
}

TEST_CASE("eta-Einstein fits") {
  {
    const Pipeline p("paper_example");
    const EtaEinsteinFit fit = eta_einstein_fit(p.s, p.cb);
    CHECK(fit.exact);
    CHECK(fit.a == Rational(-2));
    CHECK(fit.b == Rational(0));
    CHECK(fit.a + fit.b == Rational(-2));
  }
  {
    const Pipeline p("para_heisenberg");
    const EtaEinsteinFit fit = eta_einstein_fit(p.s, p.cb);
    CHECK(fit.exact);
    CHECK(fit.a == Rational(2));
    CHECK(fit.b == Rational(-4));
    CHECK(fit.a + fit.b == Rational(-2));
  }
}

TEST_CASE("eta-Einstein fit needs a non-null horizontal direction") {
  SymMatrix g(3);
  g.set(0, 1, Rational(1));
  g.set(2, 2, Rational(1));
  FrameManifold f(3, Tensor(1, 2, 3), g);
  ParacontactStructure s{f, Tensor(1, 1, 3), Vec{0, 0, 1}, Vec{0, 0, 1}};
  const CurvatureBundle cb = curvature_bundle(f, levi_civita(f));
  CHECK_THROWS_AS(eta_einstein_fit(s, cb), NoNonNullHorizontalDirectionError);
}

TEST_CASE("phi-para-holomorphic sectional curvature detection") {
  {
    const Pipeline p("paper_example");
    const HolSectionalResult r = detect_H(p.s, p.cb, p.cls);
    REQUIRE(r.H.has_value());
    CHECK(*r.H == Rational(-1));
    CHECK(r.matches_model);
    CHECK(p.cb.R == phps_model(p.s, Rational(-1)));
    CHECK_FALSE(p.cb.R == phps_model(p.s, Rational(0)));
  }
  {
    const Pipeline p("para_heisenberg");
    const HolSectionalResult r = detect_H(p.s, p.cb, p.cls);
    REQUIRE(r.H.has_value());
    CHECK(*r.H == Rational(3));
    CHECK(r.matches_model);
  }
  const Pipeline q("abelian_flat");
  CHECK_THROWS_AS(detect_H(q.s, q.cb, q.cls), NotQuasiParaSasakianError);
}

TEST_CASE("PC-Bochner tensor vanishes on the QPS builtins") {
  for (const char* name : {"paper_example", "para_heisenberg"}) {
    INFO(name);
    const Pipeline p(name);
    const PcBochnerResult b = pc_bochner(p.s, p.cb, p.cls);
    CHECK(b.zero);
    CHECK(b.B.is_zero());
    CHECK_FALSE(b.witness.has_value());
  }
  const Pipeline q("abelian_flat");
  CHECK_THROWS_AS(pc_bochner(q.s, q.cb, q.cls), NotQuasiParaSasakianError);
}

TEST_CASE("PC-Bochner catches a corrupted Ricci tensor") {
  const Pipeline p("paper_example");
  CurvatureBundle cb = p.cb;
  cb.Ric(0, 2) += Rational(1);
  cb.Ric(2, 0) += Rational(1);
  const PcBochnerResult b = pc_bochner(p.s, cb, p.cls);
  CHECK_FALSE(b.zero);
  REQUIRE(b.witness.has_value());
  CHECK(b.B(0, 1, 2, 1) == Rational(-1, 3));
}

TEST_CASE("three-dimensional curvature reconstruction") {
  {
    const Pipeline p("paper_example");
    check_all_pass(threeD_reconstruct(p.s.base, p.s, p.cb, true), {"eq25", "eq27", "eq28"});
  }
  {
    const Pipeline p("para_heisenberg");
    check_all_pass(threeD_reconstruct(p.s.base, p.s, p.cb, true), {"eq25", "eq27", "eq28"});
  }
  {
    // eq25 is dimension-generic, no QPS assumption
    const Pipeline p("abelian_flat");
    check_all_pass(threeD_reconstruct(p.s.base, p.s, p.cb, false), {"eq25"});
  }
  {
    FrameManifold f(5, Tensor(1, 2, 5), SymMatrix::identity(5));
    ParacontactStructure s{f, Tensor(1, 1, 5), Vec(5), Vec(5)};
    const CurvatureBundle cb = curvature_bundle(f, levi_civita(f));
    CHECK_THROWS_AS(threeD_reconstruct(f, s, cb, false), WrongDimensionError);
  }
}

TEST_CASE("symmetry landscape separates the two QPS builtins") {
  const Pipeline pe("paper_example");
  CHECK(local_symmetry_test(pe.nablaR).pass);
  CHECK(local_phi_symmetry_test(pe.s, pe.nablaR).pass);
  CHECK(check_ricci_semisymmetry(pe.cb).pass);
  CHECK(check_semisymmetry(pe.cb).pass);

  const Pipeline ph("para_heisenberg");
  const IdentityReport ls = local_symmetry_test(ph.nablaR);
  CHECK_FALSE(ls.pass);
  CHECK(ls.witness.has_value());
  CHECK(local_phi_symmetry_test(ph.s, ph.nablaR).pass);

  const IdentityReport rs = check_ricci_semisymmetry(ph.cb);
  CHECK_FALSE(rs.pass);
  REQUIRE(rs.witness.has_value());
  CHECK(rs.witness->residual == Rational(4));

  const IdentityReport ss = check_semisymmetry(ph.cb);
  CHECK_FALSE(ss.pass);
  CHECK(ss.witness.has_value());
}

TEST_CASE("parallel Ricci conditions hold on the QPS builtins") {
  for (const char* name : {"paper_example", "para_heisenberg"}) {
    INFO(name);
    const Pipeline p(name);
    CHECK(eta_parallel_ricci_test(p.s, p.nablaRic).pass);
    CHECK(cyclic_parallel_ricci_test(p.nablaRic).pass);
  }
}

TEST_CASE("parallel Ricci conditions catch a corrupted Ricci tensor") {
  const Pipeline p("para_heisenberg");
  Tensor ric = p.cb.Ric;
  ric(0, 0) += Rational(1);
  const Tensor nablaRic = covariant_derivative(p.s.base, p.conn, ric);

  const IdentityReport ep = eta_parallel_ricci_test(p.s, nablaRic);
  CHECK_FALSE(ep.pass);
  CHECK(ep.witness.has_value());

  const IdentityReport cp = cyclic_parallel_ricci_test(nablaRic);
  CHECK_FALSE(cp.pass);
  CHECK(cp.witness.has_value());
}

TEST_CASE("Weyl tensor vanishes on a synthetic 5D space form") {
  const int d = 5;
  FrameManifold f(d, Tensor(1, 2, d),
                  SymMatrix::diag({Rational(1), Rational(-1), Rational(1), Rational(1),
                                   Rational(-1)}));
  const Rational c(7, 3);
  Tensor r4(0, 4, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int w = 0; w < d; ++w)
          r4(i, j, k, w) = c * (f.g(j, k) * f.g(i, w) - f.g(i, k) * f.g(j, w));
  const CurvatureBundle cb = bundle_from_r4(f, r4);
  CHECK(cb.scal == c * d * (d - 1));
  for (int i = 0; i < d; ++i) CHECK(cb.Ric(i, i) == c * (d - 1) * f.g(i, i));
  CHECK(weyl_tensor(f, cb).is_zero());
}

TEST_CASE("Weyl tensor is totally trace-free on a curved 5D frame") {
  const int d = 5;
  Tensor c(1, 2, d);
  c(2, 0, 1) = Rational(2);
  c(2, 1, 0) = Rational(-2);
  FrameManifold f(d, c,
                  SymMatrix::diag({Rational(1), Rational(-1), Rational(1), Rational(1),
                                   Rational(-1)}));
  REQUIRE(validate_frame(f).ok());
  const CurvatureBundle cb = curvature_bundle(f, levi_civita(f));
  const Tensor weyl = weyl_tensor(f, cb);
  CHECK_FALSE(weyl.is_zero());

  const SymMatrix ginv = invert_symmetric(f.g);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      Rational tr14, tr24;
      for (int i = 0; i < d; ++i)
        for (int w = 0; w < d; ++w) {
          tr14 += ginv(i, w) * weyl(i, j, k, w);
          tr24 += ginv(i, w) * weyl(j, i, k, w);
        }
      CHECK(tr14.is_zero());
      CHECK(tr24.is_zero());
    }

  // Weyl inherits the R4 pair symmetries
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int w = 0; w < d; ++w) {
          CHECK(weyl(i, j, k, w) == -weyl(j, i, k, w));
          CHECK(weyl(i, j, k, w) == -weyl(i, j, w, k));
          CHECK(weyl(i, j, k, w) == weyl(k, w, i, j));
        }
}

TEST_CASE("Weyl tensor needs dimension at least 4") {
  const Pipeline p("paper_example");
  CHECK_THROWS_AS(weyl_tensor(p.s.base, p.cb), DimensionTooSmallError);
}
