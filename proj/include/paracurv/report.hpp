#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paracurv/catalog.hpp"
#include "paracurv/identities.hpp"

namespace paracurv {

/// An asserted classification outcome: flag name -> expected value.
struct Expectation {
  std::string key;
  bool expected = true;
};

struct RunOptions {
  /// Identity keys to run; empty or {"all"} runs the full registry.
  /// Filtering also drops the implication section. Unknown keys are errors.
  std::vector<std::string> identities;
  std::vector<Expectation> expectations;
};

/// Identity entries are either required (a failure fails the run) or
/// diagnostic (observed yes/no, reported but never failing the run).
/// Theorems whose hypothesis may legitimately not hold on a given model are
/// reported as implications instead.
enum class EntryKind { Required, Diagnostic };
enum class EntryStatus { Pass, Fail, Skip };

struct RunEntry {
  std::string key;
  EntryKind kind = EntryKind::Required;
  EntryStatus status = EntryStatus::Skip;
  std::optional<Witness> witness;
  std::string note;  // skip reason or short context
};

/// hypothesis -> conclusion, checked on this model. For biconditionals
/// verified means both directions agree.
struct ImplicationEntry {
  std::string key;
  std::string hypothesis;
  std::string conclusion;
  bool applicable = false;
  bool biconditional = false;
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  bool verified = false;
  std::string note;
};

struct RunReport {
  std::string model;
  int dim = 0;
  int n = 0;
  ClassificationReport classification;
  Rational scal;
  std::optional<Rational> constant_c;
  std::optional<Rational> H_candidate;
  bool H_matches = false;
  /// Informative per-direction values R4(X,phiX,X,phiX)/g(X,X)^2 for basis
  /// directions X in Ker eta with g(X,X) != 0; first index is 0-based.
  std::vector<std::pair<int, Rational>> hol_directions;
  std::optional<EtaEinsteinFit> eta_fit;
  std::vector<RunEntry> identities;
  std::vector<ImplicationEntry> implications;
  std::vector<std::string> expectation_failures;
  bool overall = false;
};

/// All identity keys in registry order.
const std::vector<std::string>& identity_registry();

/// Classification flag names accepted in expectations.
const std::vector<std::string>& classification_flag_names();

/// Full pipeline: validate the frame, classify, compute curvature, run the
/// identity registry and the theorem implications. Throws (ParseError,
/// Error, ...) on input that cannot be processed; identity failures are
/// reported in the result, not thrown.
RunReport run_check(const ModelSpec& m, const RunOptions& opts);

std::string render_text(const RunReport& r);
std::string render_json(const RunReport& r);

}  // namespace paracurv
