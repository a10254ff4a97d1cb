#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "filiform/lie.hpp"
#include "filiform/matrix.hpp"
#include "filiform/parallel.hpp"

namespace filiform {

// Structure constants with rational entries; pairs i < j in row-major order.
class RationalAlgebra {
 public:
  RationalAlgebra() = default;
  explicit RationalAlgebra(std::size_t n);
  // Throws ZeroSpecialization for t0 = 0 against a pole.
  static RationalAlgebra Specialize(const StructureConstants& mu, const Rational& t0, const Rational& alpha0);
  static RationalAlgebra Abelian(std::size_t n) { return RationalAlgebra(n); }

  std::size_t dim() const { return n_; }
  RationalVector bracket(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, RationalVector value);
  // Bilinear extension to arbitrary vectors.
  RationalVector bracket(const RationalVector& x, const RationalVector& y) const;

 private:
  std::size_t n_ = 0;
  std::vector<RationalVector> c_;
};

// Dimensions of successive terms; stops at the first term equal in dimension
// to its predecessor, which is not repeated.
using SeriesProfile = std::vector<std::size_t>;

SeriesProfile lower_central_series(const RationalAlgebra& a, Exec exec = Exec::kParallel);
SeriesProfile derived_series(const RationalAlgebra& a, Exec exec = Exec::kParallel);
bool reaches_zero(const SeriesProfile& p);
// Profile (n, n-2, n-3, ..., 1, 0).
bool is_filiform(const RationalAlgebra& a, Exec exec = Exec::kParallel);
std::size_t center_dim(const RationalAlgebra& a, Exec exec = Exec::kParallel);

struct DerivationAlgebra {
  std::size_t dimension = 0;
  std::vector<RationalMatrix> basis;
};

// Nullspace of the n^2-unknown Leibniz system over all basis pairs.
DerivationAlgebra derivation_algebra(const RationalAlgebra& a, Exec exec = Exec::kParallel);
bool satisfies_leibniz(const RationalAlgebra& a, const RationalMatrix& e);
// Dimensions of Der, [Der, Der], [Der, [Der, Der]], ... as SeriesProfile.
SeriesProfile derivation_lower_central_series(const DerivationAlgebra& der, Exec exec = Exec::kParallel);
bool is_characteristically_nilpotent(const RationalAlgebra& a, Exec exec = Exec::kParallel);

std::string ProfileText(const SeriesProfile& p);

}  // namespace filiform
