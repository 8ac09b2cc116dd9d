#pragma once

#include <string>
#include <vector>

#include "paracurv/paracontact.hpp"

namespace paracurv {

/// One bracket coefficient: [E_i, E_j] = value * E_k + ..., 1-based, i < j.
struct StructureConstant {
  int i, j, k;
  Rational value;
};

/// A model as it appears on disk: frame data plus the (phi, xi, eta)
/// triple, all indices 1-based to match the E_1..E_d naming.
struct ModelSpec {
  std::string name;
  int dim = 0;
  std::vector<StructureConstant> structure_constants;
  SymMatrix metric{1};
  Tensor phi{1, 1, 1};  // phi(i,j) = component i of phi(E_j), 0-based storage
  Vec xi;
  Vec eta;
};

const std::vector<std::string>& builtin_names();

/// Throws UnknownModelError.
ModelSpec builtin(const std::string& name);

/// Parses the JSON model format: top-level keys name, dim,
/// structure_constants (array of [i, j, k, value]), metric, phi, xi, eta.
/// Rationals are "p/q" strings or plain integers. Entries with j < i are
/// normalized through antisymmetry; restating an entry for the same
/// unordered (i,j) pair and k is a DuplicateEntryError. Unknown keys are
/// rejected. Throws ParseError, DuplicateEntryError, DimensionMismatchError.
ModelSpec parse_model(const std::string& text);

/// parse_model on the file's contents; unreadable files are ParseErrors.
ModelSpec load_model(const std::string& path);

/// Canonical serialization: fixed key order, structure constants sorted by
/// (i, j, k) with zero entries dropped, every rational in lowest terms as a
/// string, two-space indent, trailing newline. Byte-stable.
std::string canonical_model(const ModelSpec& m);

FrameManifold frame_of(const ModelSpec& m);
ParacontactStructure structure_of(const ModelSpec& m);

}  // namespace paracurv
