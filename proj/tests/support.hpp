#pragma once

// Shared fixtures, random generators and independent oracles. The oracles
// deliberately avoid the library's elimination and determinant code: they use
// dense Rational arithmetic with plain division.

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "filiform/algebra_file.hpp"
#include "filiform/invariants.hpp"
#include "filiform/lie.hpp"
#include "filiform/matrix.hpp"
#include "filiform/scalar.hpp"

namespace filiform::testing {

inline std::filesystem::path DataDir() { return FILIFORM_DATA_DIR; }

inline AlgebraFile ShippedFile(const std::string& name) { return load_algebra(corpus_path(DataDir(), name)); }

inline ElaboratedAlgebra Shipped(const std::string& name, ErrataMode mode = ErrataMode::kVerbatim) {
  return elaborate(ShippedFile(name), mode);
}

// The ten certificate tables, in corpus order.
inline const std::vector<std::string>& TableNames() {
  static const std::vector<std::string> names = {"mu01", "mu02", "mu06", "mu08", "mu09",
                                                 "mu10", "mu11", "mu13", "mu15", "mu17"};
  return names;
}

inline const std::vector<Rational>& AlphaSamples() {
  static const std::vector<Rational> a = {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(1, 3)};
  return a;
}

inline const std::vector<Rational>& TSamples() {
  static const std::vector<Rational> t = {Rational(1), Rational(2), Rational(-1)};
  return t;
}

using Rng = std::mt19937_64;

inline int UniformInt(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational RandomRational(Rng& rng, int num_bound = 9, int den_bound = 6) {
  return Rational(UniformInt(rng, -num_bound, num_bound), UniformInt(rng, 1, den_bound));
}

inline Rational RandomNonzeroRational(Rng& rng, int num_bound = 9, int den_bound = 6) {
  for (;;) {
    Rational r = RandomRational(rng, num_bound, den_bound);
    if (!r.is_zero()) return r;
  }
}

// Up to `max_terms` terms with t exponents in [t_lo, t_hi] and alpha
// exponents in [0, alpha_hi].
inline Scalar RandomScalar(Rng& rng, int max_terms = 4, int t_lo = -3, int t_hi = 4, int alpha_hi = 2) {
  std::vector<Term> terms;
  const int count = UniformInt(rng, 0, max_terms);
  for (int k = 0; k < count; ++k) {
    terms.push_back(Term{Exponent{UniformInt(rng, t_lo, t_hi), UniformInt(rng, 0, alpha_hi)}, RandomRational(rng)});
  }
  return Scalar::FromTerms(std::move(terms));
}

inline ScalarMatrix RandomScalarMatrix(Rng& rng, std::size_t n, int max_terms = 2, int t_lo = -1, int t_hi = 2,
                                       int alpha_hi = 1) {
  ScalarMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = RandomScalar(rng, max_terms, t_lo, t_hi, alpha_hi);
  }
  return m;
}

inline RationalMatrix RandomRationalMatrix(Rng& rng, std::size_t rows, std::size_t cols, double zero_fraction = 0.3) {
  RationalMatrix m(rows, cols);
  std::bernoulli_distribution zero(zero_fraction);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = zero(rng) ? Rational(0) : RandomRational(rng);
  }
  return m;
}

// Diagonal matrix of nonzero monomials c * t^k.
inline ScalarMatrix RandomMonomialDiagonal(Rng& rng, std::size_t n) {
  std::vector<Scalar> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(Scalar::Monomial(RandomNonzeroRational(rng), UniformInt(rng, -3, 3)));
  return ScalarMatrix::Diagonal(d);
}

// ---------------------------------------------------------------- oracles

// Permutation expansion; exponential, for n <= 6.
inline Scalar LeibnizDet(const ScalarMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Scalar term(1);
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

using DenseRows = std::vector<std::vector<Rational>>;

// Row reduction with division; returns the nonzero echelon rows.
inline DenseRows OracleBasis(DenseRows rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

inline std::size_t OracleRank(DenseRows rows) { return OracleBasis(std::move(rows)).size(); }

inline DenseRows ToRows(const RationalMatrix& m) {
  DenseRows out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  }
  return out;
}

// c[i][j][k] with [b_i, b_j] = sum_k c[i][j][k] b_k, all i, j.
using Tensor = std::vector<std::vector<std::vector<Rational>>>;

inline Tensor DenseTensor(const StructureConstants& mu, const Rational& t0, const Rational& alpha0) {
  const std::size_t n = mu.dim();
  Tensor c(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Column v = mu.bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) c[i][j][k] = v[k].specialize(t0, alpha0);
    }
  }
  return c;
}

inline std::vector<Rational> TensorBracket(const Tensor& c, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  const std::size_t n = c.size();
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Rational f = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) out[k] += f * c[i][j][k];
    }
  }
  return out;
}

inline std::vector<Rational> Unit(std::size_t n, std::size_t i) {
  std::vector<Rational> v(n);
  v[i] = Rational(1);
  return v;
}

// True iff [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 on every basis triple.
inline bool OracleJacobi(const Tensor& c) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t m = 0; m < n; ++m) {
          Rational s;
          for (std::size_t l = 0; l < n; ++l) {
            s += c[i][j][l] * c[l][k][m] + c[j][k][l] * c[l][i][m] + c[k][i][l] * c[l][j][m];
          }
          if (!s.is_zero()) return false;
        }
      }
    }
  }
  return true;
}

// Dimensions of a descending series of subspaces; `next` maps a spanning set
// to a spanning set of the next term. Stops when the dimension repeats.
template <typename Next>
SeriesProfile OracleSeries(std::size_t n, Next next) {
  DenseRows span;
  for (std::size_t i = 0; i < n; ++i) span.push_back(Unit(n, i));
  SeriesProfile out{n};
  for (;;) {
    span = OracleBasis(next(span));
    const std::size_t d = span.size();
    if (d == out.back()) return out;
    out.push_back(d);
    if (d == 0) return out;
  }
}

inline SeriesProfile OracleLowerCentral(const Tensor& c) {
  const std::size_t n = c.size();
  return OracleSeries(n, [&](const DenseRows& span) {
    DenseRows out;
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& v : span) out.push_back(TensorBracket(c, Unit(n, i), v));
    }
    return out;
  });
}

inline SeriesProfile OracleDerived(const Tensor& c) {
  const std::size_t n = c.size();
  return OracleSeries(n, [&](const DenseRows& span) {
    DenseRows out;
    for (const auto& x : span) {
      for (const auto& y : span) out.push_back(TensorBracket(c, x, y));
    }
    return out;
  });
}

inline std::size_t OracleCenterDim(const Tensor& c) {
  // z central iff sum_i z_i c[i][j][k] = 0 for all j, k.
  const std::size_t n = c.size();
  DenseRows rows;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Rational> row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = c[i][j][k];
      rows.push_back(row);
    }
  }
  return n - OracleRank(rows);
}

// dim Der from the Leibniz rule written out coordinate-wise; unknown D[a][b]
// at column a*n + b, D e_b = sum_a D[a][b] e_a.
inline std::size_t OracleDerivationDim(const Tensor& c) {
  const std::size_t n = c.size();
  DenseRows rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> row(n * n);
        for (std::size_t m = 0; m < n; ++m) {
          row[k * n + m] += c[i][j][m];
          row[m * n + i] -= c[m][j][k];
          row[m * n + j] -= c[i][m][k];
        }
        rows.push_back(row);
      }
    }
  }
  return n * n - OracleRank(rows);
}

}  // namespace filiform::testing
