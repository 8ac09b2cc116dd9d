#include "paracurv/report.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "paracurv/errors.hpp"

namespace paracurv {

namespace {

using nlohmann::ordered_json;

std::string tuple_str(const std::vector<int>& idx) {
  std::string out = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(idx[i] + 1);
  }
  return out + ")";
}

std::string witness_str(const Witness& w) {
  if (w.indices.empty()) return "residual " + w.residual.str();
  return "at " + tuple_str(w.indices) + ", residual " + w.residual.str();
}

RunEntry entry_from(const IdentityReport& rep, EntryKind kind, std::string note = {}) {
  RunEntry e;
  e.key = rep.name;
  e.kind = kind;
  e.status = rep.pass ? EntryStatus::Pass : EntryStatus::Fail;
  e.witness = rep.witness;
  e.note = std::move(note);
  return e;
}

RunEntry skipped(std::string key, std::string why) {
  RunEntry e;
  e.key = std::move(key);
  e.status = EntryStatus::Skip;
  e.note = std::move(why);
  return e;
}

const char* kNeedsQps = "requires a quasi-para-Sasakian structure";
const char* kNeedsDim3 = "requires dimension 3";

struct TheoremInputs {
  bool qps;
  bool d3;
  const ClassificationReport& cls;
  const Rational& scal;
  const std::optional<Rational>& c;
  const std::optional<HolSectionalResult>& hol;
  const std::optional<EtaEinsteinFit>& fit;
  const std::optional<PcBochnerResult>& pcb;
  const std::optional<bool>& weyl_zero;
  bool local_sym;
  bool phi_sym;
  bool ric_semi;
  bool semi;
  bool eta_par;
  bool cyclic;
  int n;
};

ImplicationEntry implication(std::string key, std::string hyp, std::string concl,
                             bool applicable, bool hyp_holds, bool concl_holds,
                             bool biconditional = false, std::string note = {}) {
  ImplicationEntry e;
  e.key = std::move(key);
  e.hypothesis = std::move(hyp);
  e.conclusion = std::move(concl);
  e.applicable = applicable;
  e.biconditional = biconditional;
  e.hypothesis_holds = hyp_holds;
  e.conclusion_holds = concl_holds;
  e.verified = biconditional ? (hyp_holds == concl_holds) : (!hyp_holds || concl_holds);
  e.note = std::move(note);
  return e;
}

std::vector<ImplicationEntry> build_implications(const TheoremInputs& t) {
  std::vector<ImplicationEntry> out;
  const bool c_is_minus1 = t.c.has_value() && *t.c == Rational(-1);

  out.push_back(implication("prop2_1", "quasi-para-Sasakian", "normal and not para-Sasakian",
                            t.qps, true,
                            t.cls.normal.pass && !t.cls.para_sasakian.pass));
  out.push_back(implication(
      "prop2_2", "quasi-para-Sasakian",
      "xi Killing, Lie_xi phi = Lie_xi eta = 0, d eta = -g(.,phi .), nabla xi = phi", t.qps,
      true,
      t.cls.k_paracontact.pass && t.cls.paracontact_metric_neg.pass &&
          t.cls.nabla_xi_is_phi.pass));
  out.push_back(implication("cor3_3", "locally symmetric", "constant curvature -1", t.qps,
                            t.local_sym, c_is_minus1));
  out.push_back(implication("nomizu", "R(X,Y).R = 0", "constant curvature -1", t.qps, t.semi,
                            c_is_minus1));
  out.push_back(implication("prop5_2", "conformally flat (Weyl = 0)", "constant curvature -1",
                            t.qps && t.weyl_zero.has_value(),
                            t.weyl_zero.value_or(false), c_is_minus1));

  const bool h_const = t.hol && t.hol->matches_model;
  {
    bool concl = false;
    std::string note;
    if (h_const && t.fit) {
      const Rational& H = *t.hol->H;
      const Rational a_want = (Rational(t.n) * (H - 3) + H + 1) / 2;
      const Rational b_want = -Rational(t.n + 1) * (H + 1) / 2;
      concl = t.fit->exact && t.fit->a == a_want && t.fit->b == b_want;
      note = "expects (a, b) = (" + a_want.str() + ", " + b_want.str() + ")";
    }
    out.push_back(implication("thm5_4", "constant phi-para-holomorphic curvature H",
                              "eta-Einstein with a = (n(H-3)+H+1)/2, b = -(n+1)(H+1)/2",
                              t.qps && t.hol.has_value() && t.fit.has_value(), h_const, concl,
                              false, std::move(note)));
  }
  out.push_back(implication("cor5_5", "constant phi-para-holomorphic curvature H = -1",
                            "constant curvature -1", t.qps && t.hol.has_value(),
                            h_const && t.hol && *t.hol->H == Rational(-1), c_is_minus1));
  out.push_back(implication(
      "thm5_6", "eta-Einstein and constant phi-para-holomorphic curvature",
      "PC-Bochner tensor = 0",
      t.qps && t.hol.has_value() && t.fit.has_value() && t.pcb.has_value(),
      h_const && t.fit && t.fit->exact, t.pcb && t.pcb->zero, true));

  const bool scal_m6 = t.scal == Rational(-6);
  out.push_back(implication("lemma6_1", "scal = -6", "constant curvature -1",
                            t.d3 && t.qps, scal_m6, c_is_minus1, true));
  out.push_back(implication("thm6_2", "R(X,Y).Ric = 0", "scal = -6 and constant curvature -1",
                            t.d3 && t.qps, t.ric_semi, scal_m6 && c_is_minus1));
  out.push_back(implication("thm6_4", "R(X,Y).Ric = 0", "locally symmetric", t.d3 && t.qps,
                            t.ric_semi, t.local_sym));
  out.push_back(implication("thm6_3", "scal constant", "locally phi-symmetric", t.d3 && t.qps,
                            true, t.phi_sym, true,
                            "scal is frame-constant on these models"));
  out.push_back(implication("thm6_5", "eta-parallel Ricci", "locally phi-symmetric",
                            t.d3 && t.qps, t.eta_par, t.phi_sym));
  out.push_back(implication("thm6_7", "eta-parallel Ricci", "cyclic-parallel Ricci (eq39)",
                            t.d3 && t.qps, t.eta_par, t.cyclic));
  return out;
}

}  // namespace

const std::vector<std::string>& identity_registry() {
  static const std::vector<std::string> keys{
      "torsion_free",    "nabla_g_zero",       "bianchi_first",
      "bianchi_second",  "r4_symmetries",      "lie_xi_g",
      "lie_xi_phi",      "lie_xi_eta",         "eq5",
      "eq5_1",           "eq5_2",              "eq6",
      "eq7",             "eq10",               "eq11",
      "eq8",             "eq16",               "pc_bochner_zero",
      "eq25",            "eq27",               "eq28",
      "weyl_zero",       "local_symmetry",     "local_phi_symmetry",
      "ricci_semisymmetry", "semisymmetry",    "eta_parallel_ricci",
      "eq39"};
  return keys;
}

const std::vector<std::string>& classification_flag_names() {
  static const std::vector<std::string> keys{
      "almost_paracontact", "compatible_metric",  "signature_ok",
      "paracontact_metric_defn21", "paracontact_metric_neg", "k_paracontact",
      "para_sasakian",      "quasi_para_sasakian", "nabla_xi_is_phi",
      "normal"};
  return keys;
}

RunReport run_check(const ModelSpec& m, const RunOptions& opts) {
  std::set<std::string> wanted;
  bool run_all = opts.identities.empty() ||
                 (opts.identities.size() == 1 && opts.identities[0] == "all");
  if (!run_all) {
    const auto& reg = identity_registry();
    for (const auto& key : opts.identities) {
      if (std::find(reg.begin(), reg.end(), key) == reg.end())
        throw Error("unknown identity key: " + key);
      wanted.insert(key);
    }
  }

  FrameManifold f = frame_of(m);
  const FrameValidation fv = validate_frame(f);
  if (!fv.antisymmetry_ok)
    throw Error("structure constants violate antisymmetry " +
                witness_str(Witness{*fv.antisymmetry_witness, Rational(0)}));
  if (!fv.jacobi_ok)
    throw Error("structure constants violate the Jacobi identity " +
                witness_str(Witness{*fv.jacobi_witness, Rational(0)}));
  if (!fv.metric_nondegenerate) throw Error("the metric is degenerate (det g = 0)");

  ParacontactStructure s = structure_of(m);
  const Connection conn = levi_civita(f);
  const ClassificationReport cls = classify(s, conn);
  const CurvatureBundle cb = curvature_bundle(f, conn);
  const Tensor nablaR = nabla_curvature(f, conn, cb);
  const Tensor nablaRic = covariant_derivative(f, conn, cb.Ric);

  const bool qps = cls.qps();
  const bool d3 = f.dim == 3;

  RunReport rep;
  rep.model = m.name;
  rep.dim = f.dim;
  rep.n = cls.n;
  rep.classification = cls;
  rep.scal = cb.scal;
  rep.constant_c = constant_curvature_test(f, cb);

  std::optional<EtaEinsteinFit> fit;
  try {
    fit = eta_einstein_fit(s, cb);
  } catch (const NoNonNullHorizontalDirectionError&) {
  }
  rep.eta_fit = fit;

  std::optional<HolSectionalResult> hol;
  if (qps) {
    try {
      hol = detect_H(s, cb, cls);
    } catch (const DegenerateDirectionError&) {
    }
  }
  if (hol) {
    rep.H_candidate = hol->H;
    rep.H_matches = hol->matches_model;
  }
  if (qps) {
    for (int i = 0; i < f.dim; ++i)
      if (s.eta[i].is_zero() && !f.g(i, i).is_zero()) {
        const Vec x = f.basis(i);
        const Vec px = apply_phi(s, x);
        rep.hol_directions.emplace_back(
            i, r4_eval(cb.R4, x, px, x, px) / (f.g(i, i) * f.g(i, i)));
      }
  }

  std::optional<PcBochnerResult> pcb;
  if (qps) pcb = pc_bochner(s, cb, cls);

  std::optional<bool> weyl_zero;
  std::optional<Witness> weyl_witness;
  if (f.dim >= 4) {
    const Tensor C = weyl_tensor(f, cb);
    weyl_witness = C.first_nonzero();
    weyl_zero = !weyl_witness.has_value();
  }

  const LieReport lie = lie_derivatives_along_xi(s, conn);
  const auto structural = verify_structural(f, conn, cb, nablaR);
  const auto prop32 = qps ? verify_prop32(s, cb, nablaR, cls) : std::vector<IdentityReport>{};
  const auto prop51 = qps ? verify_prop51(s, cb, cls) : std::vector<IdentityReport>{};
  const auto threed = d3 ? threeD_reconstruct(f, s, cb, qps) : std::vector<IdentityReport>{};
  const IdentityReport locsym = local_symmetry_test(nablaR);
  const IdentityReport phisym = local_phi_symmetry_test(s, nablaR);
  const IdentityReport ricsemi = check_ricci_semisymmetry(cb);
  const IdentityReport semisym = check_semisymmetry(cb);
  const IdentityReport etapar = eta_parallel_ricci_test(s, nablaRic);
  const IdentityReport cyc = cyclic_parallel_ricci_test(nablaRic);

  const bool eta_exact = fit && fit->exact;
  const EntryKind parallel_kind =
      (qps && (d3 || eta_exact)) ? EntryKind::Required : EntryKind::Diagnostic;

  std::vector<RunEntry> entries;
  for (const auto& r : structural) entries.push_back(entry_from(r, EntryKind::Required));

  const EntryKind lie_kind = qps ? EntryKind::Required : EntryKind::Diagnostic;
  entries.push_back(entry_from({"lie_xi_g", lie.g_zero.pass, lie.g_zero.witness}, lie_kind));
  entries.push_back(
      entry_from({"lie_xi_phi", lie.phi_zero.pass, lie.phi_zero.witness}, lie_kind));
  entries.push_back(
      entry_from({"lie_xi_eta", lie.eta_zero.pass, lie.eta_zero.witness}, lie_kind));

  if (qps) {
    for (const auto& r : prop32) entries.push_back(entry_from(r, EntryKind::Required));
    for (const auto& r : prop51) entries.push_back(entry_from(r, EntryKind::Required));
  } else {
    for (const char* key : {"eq5", "eq5_1", "eq5_2", "eq6", "eq7", "eq10", "eq11"})
      entries.push_back(skipped(key, kNeedsQps));
  }

  if (!qps) {
    entries.push_back(skipped("eq8", kNeedsQps));
  } else if (!eta_exact) {
    entries.push_back(skipped("eq8", "the Ricci tensor is not eta-Einstein"));
  } else {
    RunEntry e;
    e.key = "eq8";
    e.kind = EntryKind::Required;
    const Rational residual = fit->a + fit->b + Rational(2 * cls.n);
    e.status = residual.is_zero() ? EntryStatus::Pass : EntryStatus::Fail;
    if (!residual.is_zero()) e.witness = Witness{{}, residual};
    e.note = "a + b = " + (fit->a + fit->b).str();
    entries.push_back(std::move(e));
  }

  if (!qps) {
    entries.push_back(skipped("eq16", kNeedsQps));
  } else if (!hol) {
    entries.push_back(skipped("eq16", "no basis direction in Ker eta with g(X,X) != 0"));
  } else {
    RunEntry e;
    e.key = "eq16";
    e.kind = d3 ? EntryKind::Required : EntryKind::Diagnostic;
    e.status = hol->matches_model ? EntryStatus::Pass : EntryStatus::Fail;
    e.note = "candidate H = " + hol->H->str();
    if (!hol->matches_model) {
      Tensor diff = cb.R;
      diff -= phps_model(s, *hol->H);
      e.witness = diff.first_nonzero();
    }
    entries.push_back(std::move(e));
  }

  if (!qps) {
    entries.push_back(skipped("pc_bochner_zero", kNeedsQps));
  } else {
    RunEntry e;
    e.key = "pc_bochner_zero";
    e.kind = EntryKind::Diagnostic;
    e.status = pcb->zero ? EntryStatus::Pass : EntryStatus::Fail;
    e.witness = pcb->witness;
    entries.push_back(std::move(e));
  }

  if (d3) {
    entries.push_back(entry_from(threed[0], EntryKind::Required));
    if (qps) {
      entries.push_back(entry_from(threed[1], EntryKind::Required));
      entries.push_back(entry_from(threed[2], EntryKind::Required));
    } else {
      entries.push_back(skipped("eq27", kNeedsQps));
      entries.push_back(skipped("eq28", kNeedsQps));
    }
  } else {
    for (const char* key : {"eq25", "eq27", "eq28"}) entries.push_back(skipped(key, kNeedsDim3));
  }

  if (weyl_zero) {
    RunEntry e;
    e.key = "weyl_zero";
    e.kind = EntryKind::Diagnostic;
    e.status = *weyl_zero ? EntryStatus::Pass : EntryStatus::Fail;
    e.witness = weyl_witness;
    entries.push_back(std::move(e));
  } else {
    entries.push_back(skipped("weyl_zero", "requires dimension >= 4"));
  }

  entries.push_back(entry_from(locsym, EntryKind::Diagnostic));
  entries.push_back(
      entry_from(phisym, (d3 && qps) ? EntryKind::Required : EntryKind::Diagnostic));
  entries.push_back(entry_from(ricsemi, EntryKind::Diagnostic));
  entries.push_back(entry_from(semisym, EntryKind::Diagnostic));
  entries.push_back(entry_from(etapar, parallel_kind));
  entries.push_back(entry_from(cyc, parallel_kind));

  if (!run_all) {
    std::vector<RunEntry> kept;
    for (auto& e : entries)
      if (wanted.count(e.key)) kept.push_back(std::move(e));
    entries = std::move(kept);
  }
  rep.identities = std::move(entries);

  if (run_all) {
    TheoremInputs ti{qps,
                     d3,
                     cls,
                     cb.scal,
                     rep.constant_c,
                     hol,
                     fit,
                     pcb,
                     weyl_zero,
                     locsym.pass,
                     phisym.pass,
                     ricsemi.pass,
                     semisym.pass,
                     etapar.pass,
                     cyc.pass,
                     cls.n};
    rep.implications = build_implications(ti);
  }

  std::map<std::string, bool> flag_values{
      {"almost_paracontact", cls.almost_paracontact.pass},
      {"compatible_metric", cls.compatible_metric.pass},
      {"signature_ok", cls.signature_ok.pass},
      {"paracontact_metric_defn21", cls.paracontact_metric_defn21.pass},
      {"paracontact_metric_neg", cls.paracontact_metric_neg.pass},
      {"k_paracontact", cls.k_paracontact.pass},
      {"para_sasakian", cls.para_sasakian.pass},
      {"quasi_para_sasakian", cls.quasi_para_sasakian.pass},
      {"nabla_xi_is_phi", cls.nabla_xi_is_phi.pass},
      {"normal", cls.normal.pass}};
  for (const auto& ex : opts.expectations) {
    auto it = flag_values.find(ex.key);
    if (it == flag_values.end())
      throw Error("unknown classification flag in expectation: " + ex.key);
    if (it->second != ex.expected)
      rep.expectation_failures.push_back(ex.key + ": expected " +
                                         (ex.expected ? "true" : "false") + ", got " +
                                         (it->second ? "true" : "false"));
  }

  bool ok = rep.expectation_failures.empty();
  for (const auto& e : rep.identities)
    if (e.kind == EntryKind::Required && e.status == EntryStatus::Fail) ok = false;
  for (const auto& im : rep.implications)
    if (im.applicable && !im.verified) ok = false;
  rep.overall = ok;
  return rep;
}

std::string render_text(const RunReport& r) {
  std::ostringstream out;
  out << "model " << r.model << "  (dim " << r.dim << ", n = " << r.n << ")\n";
  out << "signature (" << r.classification.sig.positive << ","
      << r.classification.sig.negative << ")\n\n";

  out << "classification\n";
  const ClassificationReport& c = r.classification;
  const std::pair<const char*, const Flag*> flags[] = {
      {"almost_paracontact", &c.almost_paracontact},
      {"compatible_metric", &c.compatible_metric},
      {"signature_ok", &c.signature_ok},
      {"paracontact_metric_defn21", &c.paracontact_metric_defn21},
      {"paracontact_metric_neg", &c.paracontact_metric_neg},
      {"k_paracontact", &c.k_paracontact},
      {"para_sasakian", &c.para_sasakian},
      {"quasi_para_sasakian", &c.quasi_para_sasakian},
      {"nabla_xi_is_phi", &c.nabla_xi_is_phi},
      {"normal", &c.normal}};
  for (const auto& [name, flag] : flags) {
    out << "  " << name;
    for (std::size_t i = std::string(name).size(); i < 28; ++i) out << ' ';
    out << (flag->pass ? "yes" : "no");
    if (!flag->pass && flag->witness) out << "   " << witness_str(*flag->witness);
    out << "\n";
  }

  out << "\ncurvature\n";
  out << "  scal                 " << r.scal.str() << "\n";
  if (r.constant_c)
    out << "  constant curvature   c = " << r.constant_c->str() << "\n";
  else
    out << "  constant curvature   none\n";
  if (r.H_candidate) {
    out << "  phps curvature       H = " << r.H_candidate->str()
        << (r.H_matches ? " (curvature matches the constant-H model)"
                        : " (candidate only; curvature does not match)")
        << "\n";
  } else {
    out << "  phps curvature       none\n";
  }
  if (!r.hol_directions.empty()) {
    out << "  H by direction      ";
    for (std::size_t i = 0; i < r.hol_directions.size(); ++i)
      out << (i ? ", " : " ") << "E" << r.hol_directions[i].first + 1 << ": "
          << r.hol_directions[i].second.str();
    out << "\n";
  }
  if (r.eta_fit && r.eta_fit->exact)
    out << "  eta-Einstein         (a, b) = (" << r.eta_fit->a.str() << ", "
        << r.eta_fit->b.str() << ")\n";
  else
    out << "  eta-Einstein         no\n";

  out << "\nidentities\n";
  for (const auto& e : r.identities) {
    const char* tag = "pass";
    if (e.status == EntryStatus::Skip)
      tag = "skip";
    else if (e.status == EntryStatus::Fail)
      tag = e.kind == EntryKind::Required ? "FAIL" : "no  ";
    else if (e.kind == EntryKind::Diagnostic)
      tag = "yes ";
    out << "  " << tag << "  " << e.key;
    for (std::size_t i = e.key.size(); i < 22; ++i) out << ' ';
    if (!e.note.empty()) out << " " << e.note;
    if (e.status == EntryStatus::Fail && e.witness) out << " " << witness_str(*e.witness);
    out << "\n";
  }

  if (!r.implications.empty()) {
    out << "\nimplications\n";
    for (const auto& im : r.implications) {
      const char* tag = !im.applicable ? "skip" : (im.verified ? "ok  " : "FAIL");
      out << "  " << tag << "  " << im.key;
      for (std::size_t i = im.key.size(); i < 10; ++i) out << ' ';
      out << im.hypothesis << (im.biconditional ? "  <=>  " : "  =>  ") << im.conclusion;
      if (im.applicable)
        out << "   [" << (im.hypothesis_holds ? "yes" : "no") << " "
            << (im.biconditional ? "<=>" : "=>") << " "
            << (im.conclusion_holds ? "yes" : "no") << "]";
      if (!im.note.empty()) out << "   " << im.note;
      out << "\n";
    }
  }

  if (!r.expectation_failures.empty()) {
    out << "\nexpectation failures\n";
    for (const auto& e : r.expectation_failures) out << "  " << e << "\n";
  }

  out << "\noverall " << (r.overall ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_json(const RunReport& r) {
  auto witness_json = [](const Witness& w) {
    ordered_json j;
    ordered_json idx = ordered_json::array();
    for (int i : w.indices) idx.push_back(i + 1);
    j["indices"] = std::move(idx);
    j["residual"] = w.residual.str();
    return j;
  };

  ordered_json doc;
  doc["model"] = r.model;
  doc["dim"] = r.dim;
  doc["n"] = r.n;
  doc["signature"] = {{"positive", r.classification.sig.positive},
                      {"negative", r.classification.sig.negative}};

  ordered_json cls;
  const ClassificationReport& c = r.classification;
  const std::pair<const char*, const Flag*> flags[] = {
      {"almost_paracontact", &c.almost_paracontact},
      {"compatible_metric", &c.compatible_metric},
      {"signature_ok", &c.signature_ok},
      {"paracontact_metric_defn21", &c.paracontact_metric_defn21},
      {"paracontact_metric_neg", &c.paracontact_metric_neg},
      {"k_paracontact", &c.k_paracontact},
      {"para_sasakian", &c.para_sasakian},
      {"quasi_para_sasakian", &c.quasi_para_sasakian},
      {"nabla_xi_is_phi", &c.nabla_xi_is_phi},
      {"normal", &c.normal}};
  for (const auto& [name, flag] : flags) {
    ordered_json fj;
    fj["holds"] = flag->pass;
    if (!flag->pass && flag->witness) fj["witness"] = witness_json(*flag->witness);
    cls[name] = std::move(fj);
  }
  doc["classification"] = std::move(cls);

  ordered_json curv;
  curv["scal"] = r.scal.str();
  curv["constant_curvature"] = r.constant_c ? ordered_json(r.constant_c->str())
                                            : ordered_json(nullptr);
  if (r.H_candidate) {
    curv["H"] = {{"candidate", r.H_candidate->str()}, {"matches_model", r.H_matches}};
  } else {
    curv["H"] = nullptr;
  }
  ordered_json dirs = ordered_json::array();
  for (const auto& [idx, value] : r.hol_directions)
    dirs.push_back({{"direction", idx + 1}, {"value", value.str()}});
  curv["H_by_direction"] = std::move(dirs);
  if (r.eta_fit) {
    curv["eta_einstein"] = {{"a", r.eta_fit->a.str()},
                            {"b", r.eta_fit->b.str()},
                            {"exact", r.eta_fit->exact}};
  } else {
    curv["eta_einstein"] = nullptr;
  }
  doc["curvature"] = std::move(curv);

  ordered_json ids = ordered_json::array();
  for (const auto& e : r.identities) {
    ordered_json ej;
    ej["key"] = e.key;
    ej["kind"] = e.kind == EntryKind::Required ? "required" : "diagnostic";
    ej["status"] = e.status == EntryStatus::Pass
                       ? "pass"
                       : (e.status == EntryStatus::Fail ? "fail" : "skip");
    if (e.witness) ej["witness"] = witness_json(*e.witness);
    if (!e.note.empty()) ej["note"] = e.note;
    ids.push_back(std::move(ej));
  }
  doc["identities"] = std::move(ids);

  ordered_json imps = ordered_json::array();
  for (const auto& im : r.implications) {
    ordered_json ij;
    ij["key"] = im.key;
    ij["hypothesis"] = im.hypothesis;
    ij["conclusion"] = im.conclusion;
    ij["biconditional"] = im.biconditional;
    ij["applicable"] = im.applicable;
    if (im.applicable) {
      ij["hypothesis_holds"] = im.hypothesis_holds;
      ij["conclusion_holds"] = im.conclusion_holds;
      ij["verified"] = im.verified;
    }
    if (!im.note.empty()) ij["note"] = im.note;
    imps.push_back(std::move(ij));
  }
  doc["implications"] = std::move(imps);

  ordered_json exf = ordered_json::array();
  for (const auto& e : r.expectation_failures) exf.push_back(e);
  doc["expectation_failures"] = std::move(exf);
  doc["overall"] = r.overall ? "pass" : "fail";
  return doc.dump(2) + "\n";
}

}  // namespace paracurv
