#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "filiform/matrix.hpp"
#include "filiform/parallel.hpp"
#include "filiform/scalar.hpp"

namespace filiform {

// Symbols an entry may use besides rationals.
struct Params {
  bool t = false;
  bool alpha = false;
  friend bool operator==(const Params&, const Params&) = default;
};

// Bracket on an n-dimensional space given by [b_i, b_j] for i < j only
// (0-based). Reversed and diagonal pairs are derived on access.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t n, std::string name = "", Params params = {});

  std::size_t dim() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const Params& params() const { return params_; }
  void set_params(Params p) { params_ = p; }

  // [b_i, b_j] for any i, j.
  Column bracket(std::size_t i, std::size_t j) const;
  // Stored column for i < j.
  const Column& stored(std::size_t i, std::size_t j) const { return c_[PairIndex(i, j)]; }
  // Sets [b_i, b_j] = value and hence [b_j, b_i] = -value. Requires i != j.
  void set(std::size_t i, std::size_t j, Column value);

  // Declared params cover every entry.
  bool entries_within_params() const;
  bool is_zero() const;
  StructureConstants specialize_t(const Rational& t0) const;
  StructureConstants specialize_alpha(const Rational& alpha0) const;

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

 private:
  std::size_t PairIndex(std::size_t i, std::size_t j) const;

  std::size_t n_ = 0;
  std::string name_;
  Params params_;
  std::vector<Column> c_;
};

// Antisymmetric bilinear map with no Jacobi requirement.
using Cochain2 = StructureConstants;

// Basis indices (0-based) spanning a coordinate subspace.
struct SubspaceSpec {
  std::vector<std::size_t> indices;
  friend bool operator==(const SubspaceSpec&, const SubspaceSpec&) = default;
};

// Indices must be distinct and below n.
bool subspace_valid(const SubspaceSpec& h, std::size_t n);

Column bracket_eval(const StructureConstants& mu, const Column& x, const Column& y);

struct TripleResidual {
  std::size_t i = 0, j = 0, k = 0;
  Column residual;
};

struct TripleReport {
  bool pass = true;
  std::vector<TripleResidual> failures;
};

// Jacobiator over all i<j<k.
TripleReport jacobi_check(const StructureConstants& mu, Exec exec = Exec::kParallel);
// t-linear part of the Jacobi identity of mu + t*phi over all i<j<k.
TripleReport cocycle_check(const StructureConstants& mu, const Cochain2& phi,
                           Exec exec = Exec::kParallel);
bool lie_bracket_check(const Cochain2& phi);

// (g^-1 . mu)(x, y) = g^-1 mu(g x, g y). Throws NotAUnit.
StructureConstants base_change(const StructureConstants& mu, const ScalarMatrix& g,
                               Exec exec = Exec::kParallel);

bool is_ideal(const StructureConstants& mu, const SubspaceSpec& h);
// Bracket of mu restricted to a subalgebra, in the basis listed by h.
// Throws InvalidSpec if h is not closed under the bracket.
StructureConstants restrict_to(const StructureConstants& mu, const SubspaceSpec& h);
// D[y,z] = [Dy,z] + [y,Dz] on all basis pairs. Throws DimensionMismatch.
bool is_derivation(const StructureConstants& mu, const ScalarMatrix& d);

}  // namespace filiform
