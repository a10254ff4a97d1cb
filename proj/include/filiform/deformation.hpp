#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "filiform/lie.hpp"
#include "filiform/matrix.hpp"
#include "filiform/parallel.hpp"

namespace filiform {

// Codimension-1 ideal h, complement vector b_outside and a derivation D of h
// given in the basis listed by `ideal`.
struct DeformationSpec {
  StructureConstants base;
  SubspaceSpec ideal;
  std::size_t outside = 0;
  ScalarMatrix derivation;
};

// Throws InvalidSpec naming the first violated invariant.
void validate_spec(const DeformationSpec& spec);

// mu_D(b_outside, z) = D(z) for z in h, zero on h x h.
Cochain2 go_cocycle(const DeformationSpec& spec);

// mu + t*phi. Throws DimensionMismatch.
StructureConstants deform(const StructureConstants& mu, const Cochain2& phi);

struct StageResult {
  std::string stage;
  bool pass = false;
  std::string detail;
};

// One nonzero residual coordinate. `indices` holds the basis pair or triple
// (0-based), `component` the coordinate of the residual column.
struct ResidualCell {
  std::string stage;
  std::vector<std::size_t> indices;
  std::size_t component = 0;
  Scalar value;
};

struct VerificationReport {
  std::string algebra;
  std::vector<StageResult> stages;
  std::vector<ResidualCell> failures;

  bool pass() const;
  // nullptr when the stage did not run.
  const StageResult* find(const std::string& stage) const;
  void add(std::string stage, bool pass, std::string detail);
};

// Transport identity on basis pairs: mu_1(g e_i, g e_j) - g mu_t(e_i, e_j) with
// mu_1 = mu_t at t = 1, plus the unit-determinant stage.
VerificationReport verify_degeneration(const StructureConstants& mu_t, const ScalarMatrix& g,
                                       Exec exec = Exec::kParallel);

// mu_t at t = 0 equals mu. Throws NegativeExponent if mu_t has a pole in t.
bool limit_check(const StructureConstants& mu_t, const StructureConstants& mu);

struct SpectrumDetails {
  bool pass = false;
  bool triangular = false;
  // Agreement of the diagonal product with the expected polynomial; only
  // meaningful when `triangular`.
  bool diagonal_matches = false;
  UniPoly block_char_poly;
  UniPoly expected;
};

// Characteristic polynomial of g on the ideal block against prod (x - t^d_i).
// Throws NotInvariant if g does not preserve the ideal coordinates and
// InvalidSpec if D is not diagonal with integer entries.
SpectrumDetails block_spectrum_details(const ScalarMatrix& g, const SubspaceSpec& ideal,
                                       const ScalarMatrix& d);
bool block_spectrum_check(const ScalarMatrix& g, const SubspaceSpec& ideal, const ScalarMatrix& d);

struct DegenerationTable {
  std::string name;
  DeformationSpec spec;
  // Forward family: mu_1(g x, g y) = g mu_t(x, y).
  ScalarMatrix g;
  // Matrix as printed, for the spectrum stage; empty means g.
  ScalarMatrix printed;
};

// Stages in order: jacobi, ideal, derivation, cocycle, bracket, deform, limit,
// transport, unit-det, base-change, spectrum.
VerificationReport verify_table(const DegenerationTable& table, Exec exec = Exec::kParallel);

// The weight-0 deformation of mu17: D = diag(0, 1, ..., 1) on the same ideal.
DeformationSpec counterexample_spec(const DeformationSpec& mu17_spec);

}  // namespace filiform
